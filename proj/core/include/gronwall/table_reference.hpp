#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gronwall/omega.hpp"

namespace gw::reference {

// The embedded reference table: 82 rows, omega 9..90. Two editions exist:
// Corrected carries independently recomputed values; Printed carries the
// historically published rendering, which is defective in seven rows
// (omega 25, 43, 56, 58, 60, 62, 88). Comparing a faithful reproduction
// against Printed is expected to flag exactly those rows.
enum class Edition { Corrected, Printed };

struct ReferenceRow {
  std::uint64_t omega;
  const char* factorization;  // exact-style text of n*
  std::uint64_t sa_index;
  int log_tenths;  // the one-decimal log column, times ten
  std::uint64_t p_omega;
  bool tick;  // the inequality column
};

std::span<const ReferenceRow> rows(Edition edition);

// The row for one omega, or nullptr outside 9..90.
const ReferenceRow* find_row(std::uint64_t omega, Edition edition);

struct Mismatch {
  std::uint64_t omega;
  std::string column;    // factorization | sa_index | log | p_omega | tick
  std::string expected;  // the reference rendering
  std::string actual;    // the computed rendering
};

// Compares computed rows against an edition, column by column. The log
// column matches when the half-up one-decimal rounding of the computed
// midpoint equals the reference AND the midpoint sits within 0.0499 of it.
// Rows outside 9..90 raise DomainError.
std::vector<Mismatch> compare(const std::vector<OmegaRow>& computed,
                              Edition edition);

}  // namespace gw::reference
