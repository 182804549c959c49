#include "gronwall/factored.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "gronwall/errors.hpp"
#include "gronwall/primes.hpp"

namespace gw {
namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  if (text.empty() || text.size() > 19 || text[0] == '0')
    throw ParseError(std::string("malformed ") + what + ": '" +
                     std::string(text) + "'");
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(std::string("malformed ") + what + ": '" +
                     std::string(text) + "'");
  return v;
}

}  // namespace

FactoredInteger::FactoredInteger(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

FactoredInteger FactoredInteger::parse(std::string_view text) {
  if (text == "1") return FactoredInteger();
  if (text.empty()) throw ParseError("empty factorization");
  std::vector<std::uint32_t> exps;
  std::uint64_t prev_prime = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view token = text.substr(
        pos, star == std::string_view::npos ? std::string_view::npos
                                            : star - pos);
    std::uint64_t base = 0;
    std::uint64_t exp = 1;
    if (std::size_t caret = token.find('^'); caret != std::string_view::npos) {
      base = parse_u64(token.substr(0, caret), "prime");
      exp = parse_u64(token.substr(caret + 1), "exponent");
    } else {
      base = parse_u64(token, "prime");
    }
    if (exp == 0 || exp > 0xffffffffu)
      throw ParseError("exponent out of range: " + std::string(token));
    auto index = primes::index_of(base);
    if (!index)
      throw ParseError("base is not prime: " + std::to_string(base));
    if (base <= prev_prime)
      throw ParseError("primes must be strictly increasing at " +
                       std::to_string(base));
    prev_prime = base;
    if (exps.size() < *index) exps.resize(*index, 0);
    exps[*index - 1] = static_cast<std::uint32_t>(exp);
    if (star == std::string_view::npos) break;
    pos = star + 1;
    if (pos == text.size()) throw ParseError("trailing '*'");
  }
  return FactoredInteger(std::move(exps));
}

std::uint32_t FactoredInteger::exponent(std::size_t l) const {
  if (l == 0) throw DomainError("prime index is 1-based");
  return l <= exps_.size() ? exps_[l - 1] : 0;
}

std::uint64_t FactoredInteger::big_omega() const {
  std::uint64_t total = 0;
  for (std::uint32_t a : exps_) total += a;
  return total;
}

bool FactoredInteger::is_nonincreasing() const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) return false;
    if (i > 0 && exps_[i] > exps_[i - 1]) return false;
  }
  return true;
}

FactoredInteger FactoredInteger::multiply_prime(std::size_t l) const {
  if (l == 0) throw DomainError("prime index is 1-based");
  std::vector<std::uint32_t> exps = exps_;
  if (exps.size() < l) exps.resize(l, 0);
  ++exps[l - 1];
  return FactoredInteger(std::move(exps));
}

std::size_t FactoredInteger::least_missing_index() const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] == 0) return i + 1;
  return exps_.size() + 1;
}

std::uint64_t FactoredInteger::least_missing_prime() const {
  return primes::nth(least_missing_index());
}

FactoredInteger FactoredInteger::canonical_rearrange() const {
  std::vector<std::uint32_t> exps = exps_;
  std::sort(exps.begin(), exps.end(), std::greater<>());
  return FactoredInteger(std::move(exps));
}

mpz_class FactoredInteger::value() const {
  mpz_class v = 1;
  mpz_class pw;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    mpz_ui_pow_ui(pw.get_mpz_t(), primes::nth(i + 1), exps_[i]);
    v *= pw;
  }
  return v;
}

mpz_class FactoredInteger::sigma() const {
  // sigma(n) = prod (p^(a+1) - 1) / (p - 1), exact at every step.
  mpz_class s = 1;
  mpz_class term;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    std::uint64_t p = primes::nth(i + 1);
    mpz_ui_pow_ui(term.get_mpz_t(), p, exps_[i] + 1);
    term -= 1;
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), p - 1);
    s *= term;
  }
  return s;
}

mpq_class FactoredInteger::sigma_over_n() const {
  mpq_class q(sigma(), value());
  q.canonicalize();
  return q;
}

double FactoredInteger::log_double() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) sum += exps_[i] * primes::log_nth(i + 1);
  return sum;
}

std::string FactoredInteger::format(FormatStyle style) const {
  if (exps_.empty()) return "1";
  auto piece = [](std::uint64_t p, std::uint32_t a) {
    std::string s = std::to_string(p);
    if (a > 1) s += "^" + std::to_string(a);
    return s;
  };
  // Trailing run of consecutive exponent-1 primes, eligible for contraction.
  std::size_t run_begin = exps_.size();
  while (run_begin > 0 && exps_[run_begin - 1] == 1) --run_begin;
  std::size_t run_len = exps_.size() - run_begin;

  std::string out;
  bool contract = style == FormatStyle::Ellipsis && run_len >= 3;
  std::size_t explicit_end = contract ? run_begin + 1 : exps_.size();
  for (std::size_t i = 0; i < explicit_end; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += piece(primes::nth(i + 1), exps_[i]);
  }
  if (contract) {
    out += "*...*";
    out += std::to_string(primes::nth(exps_.size()));
  }
  return out;
}

std::strong_ordering FactoredInteger::compare_value(
    const FactoredInteger& other) const {
  if (exps_ == other.exps_) return std::strong_ordering::equal;
  double la = log_double();
  double lb = other.log_double();
  // Window scales with magnitude; accumulated double error stays ~1e-13 * log.
  if (std::abs(la - lb) > 1e-9 * std::max(1.0, std::max(la, lb)))
    return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = mpz_cmp(value().get_mpz_t(), other.value().get_mpz_t());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;  // unreachable: representations unique
}

}  // namespace gw
