#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gronwall/factored.hpp"
#include "gronwall/interval.hpp"
#include "gronwall/sa.hpp"

namespace gw {

// Default record-generation bound; covers the reference table (omega up to
// 90, ln n* <= 334.4) with margin.
inline constexpr double kDefaultLogBound = 340.0;

// One experiment row: the G-maximizing n* within {n : Omega(n) = omega}.
struct OmegaRow {
  std::uint64_t omega = 0;
  FactoredInteger n_star;
  std::uint64_t sa_index = 0;  // 0 when unresolved
  PrecisionInterval log_n_star;
  std::uint64_t p_omega = 0;  // least prime missing from n_star
  bool ineq4 = false;         // p_omega < ln n_star
};

// Exact maximum of sigma(n)/n over every n with Omega(n) = omega: the
// product of the omega largest per-prime abundancy multipliers. Each
// prime's multiplier chain decreases strictly, so the top-omega multiset is
// realizable as exponents and the greedy product is the true maximum.
mpq_class class_abundancy_max(std::uint64_t omega);

// Row for omega obtained by searching the record list: the G-argmax over
// records with Omega = omega, certified complete via class_abundancy_max —
// anything beyond the list's bound B has ln ln n > ln B, hence
// G < class_abundancy_max(omega) / ln B, which the winner must provably
// exceed. Throws CoverageError when that certificate fails (extend the
// list), EmptyClass when no record matches, DomainError for omega < 9.
OmegaRow gmax_over_sa(std::uint64_t omega, const SAList& records,
                      const DecisionConfig& cfg);

// Row for omega by exhaustive search: every partition of omega, laid onto
// the initial primes as non-increasing exponents, is a candidate; by the
// rearrangement invariant the winner is the true class maximum. Requires
// 2 <= omega <= cap. sa_index resolves against `records` when given and
// covering, otherwise stays 0. When `partitions` is non-null it receives
// the number of candidates enumerated (the partition count of omega).
OmegaRow gmax_bruteforce(std::uint64_t omega, const DecisionConfig& cfg,
                         const SAList* records = nullptr,
                         std::uint64_t cap = 40,
                         std::uint64_t* partitions = nullptr);

// Re-decides a row's final column: p_omega < ln n_star.
bool prime_below_log(const OmegaRow& row, const DecisionConfig& cfg);

// Hands out a record list covering at least the requested log bound; the
// reference must stay valid until the provider is called again.
using RecordProvider = std::function<const SAList&(double)>;

// Rows for omega_lo..omega_hi (ascending). Starts from the default bound
// and asks the provider for 30 more whenever certification or class
// coverage demands it. With enforce_range (the default) the range must
// stay inside [9, 90]; lifting it still requires omega_lo >= 9.
std::vector<OmegaRow> table_rows(std::uint64_t omega_lo,
                                 std::uint64_t omega_hi,
                                 const DecisionConfig& cfg,
                                 const RecordProvider& provider,
                                 bool enforce_range = true);

struct ChainReport {
  std::uint64_t ticked = 0;         // rows with ineq4 = true
  std::uint64_t links_checked = 0;  // inequalities decided
  std::uint64_t skipped = 0;        // ticked final row lacking a successor
  std::vector<std::string> violations;
};

// For every ticked row (ineq4 = true) checks both links of
//   G_max(omega+1) >= G(n* p(omega)) > G_max(omega):
// the strict link against the row itself and the non-strict link against
// the successor row (equality holds by construction when n*_{omega+1} is
// exactly n* p(omega); a missing successor is counted as skipped). Rows
// must carry consecutive omega values.
ChainReport chain_check(const std::vector<OmegaRow>& rows,
                        const DecisionConfig& cfg);

}  // namespace gw
