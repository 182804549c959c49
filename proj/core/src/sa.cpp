#include "gronwall/sa.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "gronwall/errors.hpp"
#include "gronwall/primes.hpp"

namespace gw {
namespace {

// Candidates are ordered by incrementally accumulated double logs whose
// error stays below ~1e-11 even at ln n ~ 340; keys closer than this window
// are re-ordered by exact comparison, keys further apart are trusted.
constexpr double kOrderWindow = 1e-9;
// The bound is inclusive up to the same fuzz, so a bound set to the log of
// a concrete integer keeps that integer in range.
constexpr double kBoundFuzz = 1e-9;

FactoredInteger multiset_to_factored(const std::vector<std::uint32_t>& cs) {
  std::vector<std::uint32_t> exps(cs.front(), 0);
  for (std::uint32_t c : cs)
    for (std::uint32_t i = 0; i < c; ++i) ++exps[i];
  return FactoredInteger(std::move(exps));
}

// Per-prime double factors, tabulated on demand. Row i (0-based) is the
// (i+1)-th prime.
class ScanTables {
 public:
  // Product over i of (p_i - p_i^{-a_i}) / (p_i - 1): sigma(n)/n.
  double abundancy(const std::vector<std::uint32_t>& exps) {
    double r = 1.0;
    for (std::size_t i = 0; i < exps.size(); ++i) r *= factor(i, exps[i]);
    return r;
  }

  // Product over i < last of 1 / (1 - p_i^{-(a_i+1)}): the supremum of the
  // abundancy gain any extension by primes p_1..p_last can achieve.
  double family_bound(const std::vector<std::uint32_t>& exps,
                      std::uint32_t last) {
    double r = 1.0;
    for (std::uint32_t i = 0; i < last; ++i) r *= tail(i, exps[i]);
    return r;
  }

 private:
  double factor(std::size_t i, std::uint32_t a) {
    grow(f_, i, a, [i](std::uint32_t e) {
      double p = static_cast<double>(primes::nth(i + 1));
      return (p - std::pow(p, -static_cast<double>(e))) / (p - 1.0);
    });
    return f_[i][a];
  }
  double tail(std::size_t i, std::uint32_t a) {
    grow(g_, i, a, [i](std::uint32_t e) {
      double p = static_cast<double>(primes::nth(i + 1));
      return 1.0 / (1.0 - std::pow(p, -static_cast<double>(e) - 1.0));
    });
    return g_[i][a];
  }
  template <class F>
  static void grow(std::vector<std::vector<double>>& table, std::size_t i,
                   std::uint32_t a, F&& make) {
    if (table.size() <= i) table.resize(i + 1);
    auto& row = table[i];
    while (row.size() <= a) row.push_back(make(static_cast<std::uint32_t>(row.size())));
  }
  std::vector<std::vector<double>> f_;
  std::vector<std::vector<double>> g_;
};

std::string cache_line(const SARecord& r) {
  std::ostringstream line;
  line << r.index << '\t' << r.n.format(FormatStyle::Exact) << '\t'
       << r.abundancy.get_num().get_str() << '/'
       << r.abundancy.get_den().get_str() << '\t'
       << r.log_n.midpoint_decimal(12);
  return line.str();
}

std::string abundancy_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

CandidateStream::CandidateStream(double log_bound) : bound_(log_bound) {
  if (!(log_bound >= 0.0)) throw DomainError("log bound must be >= 0");
  ready_.push_back(FactoredInteger());  // n = 1, ln n = 0
  double ln2 = primes::log_nth(1);
  if (ln2 <= bound_ + kBoundFuzz) heap_.push(Node{ln2, {1}});
}

std::optional<FactoredInteger> CandidateStream::next() {
  if (ready_.empty()) refill();
  if (ready_.empty()) return std::nullopt;
  FactoredInteger fi = std::move(ready_.front());
  ready_.pop_front();
  ++emitted_;
  return fi;
}

void CandidateStream::refill() {
  if (heap_.empty() || heap_.top().log > bound_ + kBoundFuzz) return;
  // Pop a chain of near-tied keys; consecutive batches are then separated
  // by more than the accumulated double error, so only the batch interior
  // needs exact ordering.
  std::vector<Node> batch;
  batch.push_back(heap_.top());
  heap_.pop();
  while (!heap_.empty() &&
         heap_.top().log <= batch.back().log + kOrderWindow) {
    batch.push_back(heap_.top());
    heap_.pop();
  }
  struct Item {
    Node node;
    FactoredInteger fi;
  };
  std::vector<Item> items;
  items.reserve(batch.size());
  for (auto& node : batch) {
    FactoredInteger fi = multiset_to_factored(node.cs);
    items.push_back(Item{std::move(node), std::move(fi)});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.fi.compare_value(b.fi) == std::strong_ordering::less;
  });
  for (auto& item : items) {
    if (item.node.log > bound_ + kBoundFuzz) continue;
    push_expansions(item.node);
    ready_.push_back(std::move(item.fi));
  }
}

void CandidateStream::push_expansions(const Node& node) {
  const auto& cs = node.cs;
  std::uint32_t last = cs.back();
  if (cs.size() == 1 || last < cs[cs.size() - 2]) {
    double slog = node.log + primes::log_nth(last + 1);
    if (slog <= bound_ + kBoundFuzz) {
      Node sibling{slog, cs};
      sibling.cs.back() = last + 1;
      heap_.push(std::move(sibling));
    }
  }
  double clog = node.log + primes::log_nth(1);
  if (clog <= bound_ + kBoundFuzz) {
    Node child{clog, cs};
    child.cs.push_back(1);
    heap_.push(std::move(child));
  }
}

SAList sa_list(double log_bound, Precision record_precision) {
  if (!(log_bound >= 0.0)) throw DomainError("log bound must be >= 0");
  SAList out;
  out.log_bound = log_bound;
  out.records.push_back(SARecord{
      1, FactoredInteger(), mpq_class(1),
      PrecisionInterval::exact_zero(record_precision)});

  mpq_class runmax(1);
  double runmax_d = 1.0;
  ScanTables tables;

  using Node = std::vector<std::uint32_t>;
  struct Entry {
    double log;
    Node cs;
  };
  struct EntryOrder {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.log != b.log) return a.log > b.log;
      return a.cs > b.cs;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, EntryOrder> heap;
  double ln2 = primes::log_nth(1);
  if (ln2 <= log_bound + kBoundFuzz) heap.push(Entry{ln2, {1}});

  while (!heap.empty() && heap.top().log <= log_bound + kBoundFuzz) {
    std::vector<Entry> batch;
    batch.push_back(heap.top());
    heap.pop();
    while (!heap.empty() &&
           heap.top().log <= batch.back().log + kOrderWindow) {
      batch.push_back(heap.top());
      heap.pop();
    }
    struct Item {
      Entry entry;
      FactoredInteger fi;
    };
    std::vector<Item> items;
    items.reserve(batch.size());
    for (auto& entry : batch) {
      FactoredInteger fi = multiset_to_factored(entry.cs);
      items.push_back(Item{std::move(entry), std::move(fi)});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      return a.fi.compare_value(b.fi) == std::strong_ordering::less;
    });

    for (auto& item : items) {
      if (item.entry.log > log_bound + kBoundFuzz) continue;
      const auto& exps = item.fi.exponents();
      double abundancy_d = tables.abundancy(exps);

      // Record test: double prefilter with a conservative margin, exact
      // rational confirmation inside the gray band.
      if (abundancy_d > runmax_d * (1 - 1e-9)) {
        mpq_class exact = item.fi.sigma_over_n();
        if (exact > runmax) {
          out.records.push_back(SARecord{
              out.records.back().index + 1, item.fi, exact,
              log_n(item.fi, record_precision)});
          runmax = std::move(exact);
          runmax_d = mpq_get_d(runmax.get_mpq_t());  // truncated: stays <= true
        }
      }

      const auto& cs = item.entry.cs;
      std::uint32_t last = cs.back();
      // Sibling edges keep the tree connected and are never pruned.
      if (cs.size() == 1 || last < cs[cs.size() - 2]) {
        double slog = item.entry.log + primes::log_nth(last + 1);
        if (slog <= log_bound + kBoundFuzz) {
          Entry sibling{slog, cs};
          sibling.cs.back() = last + 1;
          heap.push(std::move(sibling));
        }
      }
      // Child edge: every descendant multiplies in primes <= p_last only,
      // so its abundancy stays below abundancy * family_bound. If even that
      // (inflated by the double error margin) cannot beat the running
      // maximum, no descendant can be a record and the subtree is dropped.
      double clog = item.entry.log + ln2;
      if (clog <= log_bound + kBoundFuzz) {
        double ub = abundancy_d * tables.family_bound(exps, last);
        if (ub * (1 + 1e-9) > runmax_d) {
          Entry child{clog, cs};
          child.cs.push_back(1);
          heap.push(std::move(child));
        }
      }
    }
  }
  return out;
}

std::optional<std::uint64_t> sa_index_of(const FactoredInteger& n,
                                         const SAList& list) {
  if (n.log_double() > list.log_bound + kBoundFuzz)
    throw CoverageError("value lies beyond the record list's log bound");
  auto it = std::lower_bound(
      list.records.begin(), list.records.end(), n,
      [](const SARecord& r, const FactoredInteger& v) {
        return r.n.compare_value(v) == std::strong_ordering::less;
      });
  if (it != list.records.end() && it->n == n) return it->index;
  return std::nullopt;
}

void save_cache(const SAList& list, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream txt(dir / "sa_records.txt", std::ios::trunc);
  if (!txt) throw CacheError("cannot open record cache for writing");
  for (const auto& r : list.records) txt << cache_line(r) << '\n';
  txt.close();
  if (!txt) throw CacheError("failed writing the record cache");
  std::ofstream bound(dir / "sa_records.bound", std::ios::trunc);
  if (!bound) throw CacheError("cannot open the bound sidecar for writing");
  char text[64];
  std::snprintf(text, sizeof text, "%.9f", list.log_bound);
  bound << text << '\n';
  bound.close();
  if (!bound) throw CacheError("failed writing the bound sidecar");
}

std::optional<SAList> load_cache(const std::filesystem::path& dir,
                                 Precision record_precision) {
  const auto txt_path = dir / "sa_records.txt";
  const auto bound_path = dir / "sa_records.bound";
  const bool has_txt = std::filesystem::exists(txt_path);
  const bool has_bound = std::filesystem::exists(bound_path);
  if (!has_txt && !has_bound) return std::nullopt;
  if (has_txt != has_bound)
    throw CacheError("record cache and bound sidecar must exist together");

  std::ifstream bound_in(bound_path);
  double bound = 0.0;
  if (!(bound_in >> bound) || !(bound >= 0.0))
    throw CacheError("bound sidecar is not a non-negative number");

  SAList out;
  out.log_bound = bound;
  std::ifstream txt(txt_path);
  if (!txt) throw CacheError("cannot open the record cache");
  std::string line;
  std::uint64_t expected_index = 1;
  while (std::getline(txt, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw CacheError("blank line in the record cache");

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4)
      throw CacheError("record line must have 4 tab-separated fields");

    std::uint64_t index = 0;
    auto [ptr, ec] = std::from_chars(
        fields[0].data(), fields[0].data() + fields[0].size(), index);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size() ||
        index != expected_index)
      throw CacheError("record indices must count up from 1");

    FactoredInteger n;
    try {
      n = FactoredInteger::parse(fields[1]);
    } catch (const ParseError& e) {
      throw CacheError(std::string("bad factorization in cache: ") + e.what());
    }
    if (expected_index == 1 && !n.is_one())
      throw CacheError("the first record must be n = 1");

    mpq_class abundancy = n.sigma_over_n();
    if (abundancy_text(abundancy) != fields[2])
      throw CacheError("cached abundancy disagrees with recomputation");

    double cached_log = 0.0;
    try {
      std::size_t used = 0;
      cached_log = std::stod(fields[3], &used);
      if (used != fields[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CacheError("bad log field in the record cache");
    }
    PrecisionInterval log_interval = log_n(n, record_precision);
    if (std::abs(cached_log - log_interval.midpoint_double()) > 1e-8)
      throw CacheError("cached log disagrees with recomputation");
    if (cached_log > bound + kBoundFuzz)
      throw CacheError("cached record lies beyond the recorded bound");

    if (!out.records.empty()) {
      const SARecord& prev = out.records.back();
      if (abundancy <= prev.abundancy ||
          prev.n.compare_value(n) != std::strong_ordering::less)
        throw CacheError("cached records must increase strictly");
    }
    out.records.push_back(SARecord{index, std::move(n), std::move(abundancy),
                                   std::move(log_interval)});
    ++expected_index;
  }
  if (out.records.empty()) throw CacheError("the record cache is empty");
  return out;
}

SAList ensure_records(double min_log_bound,
                      const std::optional<std::filesystem::path>& cache_dir,
                      Precision record_precision) {
  if (!(min_log_bound >= 0.0)) throw DomainError("log bound must be >= 0");
  std::optional<SAList> cached;
  if (cache_dir) cached = load_cache(*cache_dir, record_precision);
  if (cached && cached->log_bound >= min_log_bound - 1e-12)
    return std::move(*cached);

  SAList fresh = sa_list(min_log_bound, record_precision);
  if (cache_dir) {
    if (cached) {
      // The scan is deterministic, so the old records must be a prefix of
      // the new ones; the file then only ever gains lines.
      if (cached->records.size() > fresh.records.size())
        throw CacheError("cache prefix diverges from recomputation");
      for (std::size_t i = 0; i < cached->records.size(); ++i) {
        const SARecord& a = cached->records[i];
        const SARecord& b = fresh.records[i];
        if (a.index != b.index || !(a.n == b.n) ||
            a.abundancy != b.abundancy)
          throw CacheError("cache prefix diverges from recomputation");
      }
      std::ofstream txt(*cache_dir / "sa_records.txt", std::ios::app);
      if (!txt) throw CacheError("cannot append to the record cache");
      for (std::size_t i = cached->records.size(); i < fresh.records.size();
           ++i)
        txt << cache_line(fresh.records[i]) << '\n';
      txt.close();
      if (!txt) throw CacheError("failed appending to the record cache");
      std::ofstream bound(*cache_dir / "sa_records.bound", std::ios::trunc);
      if (!bound) throw CacheError("cannot rewrite the bound sidecar");
      char text[64];
      std::snprintf(text, sizeof text, "%.9f", fresh.log_bound);
      bound << text << '\n';
    } else {
      save_cache(fresh, *cache_dir);
    }
  }
  return fresh;
}

}  // namespace gw
