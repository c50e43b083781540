// SPDX-License-Identifier: Apache-2.0
//
// Rational base numeration: bases, digit alphabets, exact evaluation of
// finite words and of omega-word prefixes, word orders and the word metric.
//
// Finite words are stored most-significant digit first. When a finite word is
// evaluated as an integer representation its digits are indexed from the
// right starting at 0; prefixes of omega-words are indexed from the left
// starting at 1. All arithmetic is exact (GMP integers and rationals).

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ratbase {

using BigInt = mpz_class;
using BigRational = mpq_class;
using Digit = std::int64_t;

enum class ErrorCode {
  InvalidArgument,
  InvalidBase,
  DigitOutOfAlphabet,
  LengthMismatch,
  FrontierCapExceeded,
  Regime,
  DepthCap,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Inclusive range of consecutive integer digits.
struct DigitRange {
  Digit lo = 0;
  Digit hi = -1;

  bool contains(Digit d) const noexcept { return lo <= d && d <= hi; }
  std::int64_t size() const noexcept { return hi < lo ? 0 : hi - lo + 1; }
  bool operator==(const DigitRange&) const = default;
};

/// A finite word, most significant digit first.
struct DigitWord {
  std::vector<Digit> digits;

  DigitWord() = default;
  explicit DigitWord(std::vector<Digit> d) : digits(std::move(d)) {}
  DigitWord(std::initializer_list<Digit> d) : digits(d) {}

  std::size_t size() const noexcept { return digits.size(); }
  bool empty() const noexcept { return digits.empty(); }
  Digit operator[](std::size_t i) const { return digits[i]; }
  std::span<const Digit> view() const noexcept { return digits; }
  bool operator==(const DigitWord&) const = default;
};

/// The first letters a_1 a_2 ... of an omega-word.
struct OmegaPrefix {
  std::vector<Digit> digits;

  OmegaPrefix() = default;
  explicit OmegaPrefix(std::vector<Digit> d) : digits(std::move(d)) {}
  OmegaPrefix(std::initializer_list<Digit> d) : digits(d) {}

  std::size_t size() const noexcept { return digits.size(); }
  bool empty() const noexcept { return digits.empty(); }
  Digit operator[](std::size_t i) const { return digits[i]; }
  std::span<const Digit> view() const noexcept { return digits; }
  bool operator==(const OmegaPrefix&) const = default;
};

/// Certified bounds lo <= x <= hi on a real number.
struct RealEnclosure {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  bool contains(const RealEnclosure& other) const { return lo <= other.lo && other.hi <= hi; }
  bool intersects(const RealEnclosure& other) const { return lo <= other.hi && other.lo <= hi; }
  bool operator==(const RealEnclosure&) const = default;
};

/// A rational base p/q with coprime p > q > 1.
class Base {
 public:
  /// Validates and builds the base. Throws Error(InvalidBase) when p and q
  /// are not coprime, p <= q, q <= 1, or p does not fit a machine digit.
  static Base make(const BigInt& p, const BigInt& q);

  const BigInt& numerator() const noexcept { return p_; }
  const BigInt& denominator() const noexcept { return q_; }
  Digit numerator_digit() const noexcept { return p_small_; }
  Digit denominator_digit() const noexcept { return q_small_; }
  const BigRational& ratio() const noexcept { return z_; }

  /// A_p = {0 .. p-1}
  DigitRange digits() const noexcept { return {0, p_small_ - 1}; }
  /// B_q = {0 .. q-1}
  DigitRange lower_digits() const noexcept { return {0, q_small_ - 1}; }
  /// C_z = {p-q .. p-1}
  DigitRange upper_digits() const noexcept { return {p_small_ - q_small_, p_small_ - 1}; }
  /// D_z = C_z - B_q = {p-2q+1 .. p-1}
  DigitRange difference_digits() const noexcept { return {p_small_ - 2 * q_small_ + 1, p_small_ - 1}; }
  Digit middle_digit() const noexcept { return p_small_ - q_small_; }

  /// p > 2q - 1: the span-set closure is a Cantor set.
  bool is_large() const noexcept { return p_small_ > 2 * q_small_ - 1; }
  bool is_small() const noexcept { return !is_large(); }

  std::string to_string() const;
  bool operator==(const Base& o) const { return p_ == o.p_ && q_ == o.q_; }

 private:
  Base(BigInt p, BigInt q);

  BigInt p_;
  BigInt q_;
  Digit p_small_;
  Digit q_small_;
  BigRational z_;
};

Base make_base(const BigInt& p, const BigInt& q);
/// Parses "p/q".
Base parse_base(std::string_view text);

/// Value of a finite word as an integer representation: sum (a_i/q) z^i.
BigRational eval_value(const Base& base, std::span<const Digit> word);
inline BigRational eval_value(const Base& base, const DigitWord& w) { return eval_value(base, w.view()); }

/// Value after the radix point of a finite prefix: sum_{i>=1} (a_i/q) z^{-i}.
BigRational eval_real_prefix(const Base& base, std::span<const Digit> prefix);
inline BigRational eval_real_prefix(const Base& base, const OmegaPrefix& w) {
  return eval_real_prefix(base, w.view());
}

/// z^{-k} / (z - 1), the weight of an all-ones tail after k letters times q.
BigRational tail_factor(const Base& base, std::size_t k);

/// Bounds on every omega-word extending `prefix` with digits in [dmin, dmax].
RealEnclosure real_enclosure(const Base& base, std::span<const Digit> prefix, Digit dmin, Digit dmax);
inline RealEnclosure real_enclosure(const Base& base, const OmegaPrefix& w, Digit dmin, Digit dmax) {
  return real_enclosure(base, w.view(), dmin, dmax);
}
inline RealEnclosure real_enclosure(const Base& base, const OmegaPrefix& w, DigitRange tail) {
  return real_enclosure(base, w.view(), tail.lo, tail.hi);
}

/// Radix order: shorter words first, then lexicographic.
std::strong_ordering radix_compare(std::span<const Digit> u, std::span<const Digit> v);
inline std::strong_ordering radix_compare(const DigitWord& u, const DigitWord& v) {
  return radix_compare(u.view(), v.view());
}

/// Lexicographic order on finite words (a proper prefix is smaller).
std::strong_ordering lex_compare(const DigitWord& u, const DigitWord& v);

/// Comparison of two omega-word prefixes over their common length.
enum class PrefixOrder { Less, Greater, PrefixEqual };
PrefixOrder lex_compare(const OmegaPrefix& u, const OmegaPrefix& v);

struct WordDistance {
  /// 2^{-l}, l the length of the longest common prefix; an upper bound on the
  /// omega-word distance when prefix_equal is set.
  BigRational value;
  bool prefix_equal = false;
};
WordDistance word_distance(const OmegaPrefix& u, const OmegaPrefix& v);

// Serialization

/// Compact form: one character per digit when all digits are in [0,9],
/// otherwise comma-separated signed integers. The empty word is "".
std::string format_digits(std::span<const Digit> digits);
inline std::string format_digits(const DigitWord& w) { return format_digits(w.view()); }
inline std::string format_digits(const OmegaPrefix& w) { return format_digits(w.view()); }

/// Inverse of format_digits; also accepts "ε" and space separators.
std::vector<Digit> parse_digits(std::string_view text);

/// "num/den"
std::string format_rational(const BigRational& x);
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

/// Fixed-point decimal rendering with `fraction_digits` digits after the
/// point, rounded half away from zero.
std::string to_decimal(const BigRational& x, unsigned fraction_digits);

}  // namespace ratbase
