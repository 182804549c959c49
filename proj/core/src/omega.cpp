#include "gronwall/omega.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "gronwall/criteria.hpp"
#include "gronwall/errors.hpp"
#include "gronwall/primes.hpp"

namespace gw {
namespace {

OmegaRow make_row(std::uint64_t omega, const FactoredInteger& n,
                  std::uint64_t sa_index, const DecisionConfig& cfg) {
  OmegaRow row;
  row.omega = omega;
  row.n_star = n;
  row.sa_index = sa_index;
  row.log_n_star = log_n(n, cfg.start_precision);
  row.p_omega = n.least_missing_prime();
  row.ineq4 = prime_below_log(row, cfg);
  return row;
}

}  // namespace

mpq_class class_abundancy_max(std::uint64_t omega) {
  auto multiplier = [](std::uint64_t p, std::uint32_t from) {
    // sigma(p^{from+1})/p^{from+1} over sigma(p^from)/p^from.
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), p, from + 2);
    mpq_class m(top - 1, top - p);
    m.canonicalize();
    return m;
  };
  struct Item {
    mpq_class mult;
    std::size_t prime_index;  // 1-based
    std::uint32_t from;
  };
  struct Less {
    bool operator()(const Item& a, const Item& b) const {
      return a.mult < b.mult;
    }
  };
  std::priority_queue<Item, std::vector<Item>, Less> heap;
  for (std::size_t i = 1; i <= omega + 1; ++i)
    heap.push(Item{multiplier(primes::nth(i), 0), i, 0});
  mpq_class product(1);
  for (std::uint64_t picked = 0; picked < omega; ++picked) {
    Item item = heap.top();
    heap.pop();
    product *= item.mult;
    heap.push(Item{multiplier(primes::nth(item.prime_index), item.from + 1),
                   item.prime_index, item.from + 1});
  }
  return product;
}

OmegaRow gmax_over_sa(std::uint64_t omega, const SAList& records,
                      const DecisionConfig& cfg) {
  if (omega < 9) throw DomainError("the record search covers omega >= 9");
  std::vector<const SARecord*> in_class;
  for (const SARecord& r : records.records)
    if (r.n.big_omega() == omega) in_class.push_back(&r);
  if (in_class.empty())
    throw EmptyClass(
        "no record with the requested factor count within the covered bound");

  const SARecord* best = in_class.front();
  for (std::size_t i = 1; i < in_class.size(); ++i)
    if (decide_less(g_producer(best->n), g_producer(in_class[i]->n), cfg))
      best = in_class[i];

  // Certificate that nothing outside the list can compete: any n in the
  // class with ln n > B has ln ln n > ln B, so G(n) stays below
  // class_abundancy_max / ln B; the winner must provably exceed that.
  if (!(records.log_bound > 1.0))
    throw CoverageError("the record bound is too small to certify a maximum");
  mpq_class abundancy_cap = class_abundancy_max(omega);
  mpq_class bound_q(records.log_bound);
  bool certified = decide_less(
      [abundancy_cap, bound_q](Precision p) {
        return PrecisionInterval::from_rational(abundancy_cap, p) /
               log_of_rational(bound_q, p);
      },
      g_producer(best->n), cfg);
  if (!certified)
    throw CoverageError(
        "the covered bound cannot certify the class maximum; extend it");
  return make_row(omega, best->n, best->index, cfg);
}

OmegaRow gmax_bruteforce(std::uint64_t omega, const DecisionConfig& cfg,
                         const SAList* records, std::uint64_t cap,
                         std::uint64_t* partitions) {
  if (omega < 2)
    throw DomainError(
        "the exhaustive search needs omega >= 2 (G is undefined below 3)");
  if (omega > cap)
    throw DomainError("omega exceeds the exhaustive-search cap");

  std::uint64_t visited = 0;
  std::optional<FactoredInteger> best;
  std::vector<std::uint32_t> current;
  auto descend = [&](auto&& self, std::uint32_t remaining,
                     std::uint32_t max_part) -> void {
    if (remaining == 0) {
      ++visited;
      FactoredInteger candidate{std::vector<std::uint32_t>(current)};
      if (!best)
        best = std::move(candidate);
      else if (decide_less(g_producer(*best), g_producer(candidate), cfg))
        best = std::move(candidate);
      return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1;
         --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  auto w = static_cast<std::uint32_t>(omega);
  descend(descend, w, w);
  if (partitions) *partitions = visited;

  std::uint64_t sa_index = 0;
  if (records) {
    try {
      sa_index = sa_index_of(*best, *records).value_or(0);
    } catch (const CoverageError&) {
      sa_index = 0;
    }
  }
  return make_row(omega, *best, sa_index, cfg);
}

bool prime_below_log(const OmegaRow& row, const DecisionConfig& cfg) {
  return decide_less(
      [p = row.p_omega](Precision prec) {
        return PrecisionInterval::from_unsigned(p, prec);
      },
      [n = row.n_star](Precision prec) { return log_n(n, prec); }, cfg);
}

std::vector<OmegaRow> table_rows(std::uint64_t omega_lo,
                                 std::uint64_t omega_hi,
                                 const DecisionConfig& cfg,
                                 const RecordProvider& provider,
                                 bool enforce_range) {
  if (omega_lo < 9) throw DomainError("omega must be >= 9");
  if (omega_lo > omega_hi) throw DomainError("empty omega range");
  if (enforce_range && omega_hi > 90)
    throw DomainError(
        "the standard range stops at omega = 90; lift it explicitly to go on");

  double bound = kDefaultLogBound;
  const SAList* list = &provider(bound);
  auto extend = [&]() -> bool {
    if (bound + 30.0 > 1000.0) return false;  // hard stop against runaways
    bound += 30.0;
    list = &provider(bound);
    return true;
  };

  std::vector<OmegaRow> rows;
  rows.reserve(omega_hi - omega_lo + 1);
  for (std::uint64_t omega = omega_lo; omega <= omega_hi; ++omega) {
    for (;;) {
      try {
        rows.push_back(gmax_over_sa(omega, *list, cfg));
        break;
      } catch (const CoverageError&) {
        if (!extend()) throw;
      } catch (const EmptyClass&) {
        if (!extend()) throw;
      }
    }
  }
  return rows;
}

ChainReport chain_check(const std::vector<OmegaRow>& rows,
                        const DecisionConfig& cfg) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].omega != rows[i - 1].omega + 1)
      throw DomainError("chain rows must carry consecutive omega values");

  ChainReport report;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const OmegaRow& row = rows[i];
    if (!row.ineq4) continue;
    ++report.ticked;

    FactoredInteger lifted =
        row.n_star.multiply_prime(row.n_star.least_missing_index());
    ++report.links_checked;
    if (!decide_less(g_producer(row.n_star), g_producer(lifted), cfg))
      report.violations.push_back(
          "omega " + std::to_string(row.omega) +
          ": G(n* p) does not exceed the class maximum");

    if (i + 1 == rows.size()) {
      ++report.skipped;
      continue;
    }
    const OmegaRow& next = rows[i + 1];
    ++report.links_checked;
    if (next.n_star == lifted) continue;  // equal values: the >= link holds
    if (decide_less(g_producer(next.n_star), g_producer(lifted), cfg))
      report.violations.push_back(
          "omega " + std::to_string(next.omega) +
          ": the next class maximum falls below G(n* p)");
  }
  return report;
}

}  // namespace gw
