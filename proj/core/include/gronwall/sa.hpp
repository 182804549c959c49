#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <filesystem>
#include <optional>
#include <queue>
#include <vector>

#include "gronwall/factored.hpp"
#include "gronwall/interval.hpp"

namespace gw {

// One entry of the abundancy-record sequence: sigma(n)/n strictly exceeds
// sigma(m)/m for every m < n. Indices are 1-based and n = 1 is index 1.
struct SARecord {
  std::uint64_t index = 0;
  FactoredInteger n;
  mpq_class abundancy;      // sigma(n)/n, reduced
  PrecisionInterval log_n;  // enclosure of ln n
};

// All records with ln n <= log_bound, in ascending order.
struct SAList {
  std::vector<SARecord> records;
  double log_bound = 0.0;
};

// Streams every integer with non-increasing prime exponents and
// ln n <= log_bound, in strictly ascending value order, starting at n = 1.
// Near-ties of the double log keys (within 1e-9, far wider than their
// accumulated error) are re-ordered by exact big-integer comparison.
class CandidateStream {
 public:
  explicit CandidateStream(double log_bound);  // log_bound >= 0

  std::optional<FactoredInteger> next();
  std::uint64_t emitted() const { return emitted_; }
  double bound() const { return bound_; }

 private:
  // A candidate as a non-increasing multiset of primorial indices
  // (1-based): exponent a_i = #{c in cs : c >= i}. Appending a 1 and
  // incrementing the last entry (when it stays below its left neighbor)
  // reach every multiset exactly once from {1}.
  struct Node {
    double log;
    std::vector<std::uint32_t> cs;
  };
  struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
      if (a.log != b.log) return a.log > b.log;
      return a.cs > b.cs;
    }
  };

  void refill();
  void push_expansions(const Node& node);

  double bound_;
  std::uint64_t emitted_ = 0;
  std::deque<FactoredInteger> ready_;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> heap_;
};

// Scans the candidate stream for abundancy records up to the bound.
// Equivalent to filtering CandidateStream but prunes subtrees whose best
// possible abundancy provably stays below the running maximum, which keeps
// the Table-1-scale bound (ln n <= 340) tractable.
SAList sa_list(double log_bound, Precision record_precision = 128);

// Index of n in the record sequence, or nullopt when n is not a record.
// CoverageError if ln n exceeds the list's bound.
std::optional<std::uint64_t> sa_index_of(const FactoredInteger& n,
                                         const SAList& list);

// Persistent cache: <dir>/sa_records.txt holds one record per line
// (index, exact factorization, abundancy "num/den", ln n to 12 decimals,
// tab-separated); <dir>/sa_records.bound holds the covered log bound.
// The record file only ever grows. Loading re-validates every line against
// recomputation and throws CacheError on any inconsistency.
void save_cache(const SAList& list, const std::filesystem::path& dir);
std::optional<SAList> load_cache(const std::filesystem::path& dir,
                                 Precision record_precision = 128);

// Returns records covering at least min_log_bound, reusing (and, when the
// bound grows, appending to) the cache directory when one is given.
SAList ensure_records(double min_log_bound,
                      const std::optional<std::filesystem::path>& cache_dir,
                      Precision record_precision = 128);

}  // namespace gw
