#pragma once

#include <stdexcept>
#include <string>

namespace gw {

// Input outside a function's mathematical domain (e.g. log log n for n < 3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed factorization text or unsupported prime.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A strict comparison whose interval enclosures still overlap at the
// configured maximum precision. Never resolved silently.
class Undecidable : public std::runtime_error {
 public:
  Undecidable(const std::string& what, long precision_reached)
      : std::runtime_error(what), precision_reached_(precision_reached) {}
  long precision_reached() const noexcept { return precision_reached_; }

 private:
  long precision_reached_;
};

// A record list does not provably cover the requested extraction.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No candidate with the requested prime-factor count in the covered range.
class EmptyClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Persistent record cache failed validation.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gw
