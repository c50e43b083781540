// SPDX-License-Identifier: Apache-2.0

#include "ratbase/numeration.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ratbase {

namespace {

// Digits are machine integers; keep room for p + q and 2q arithmetic.
constexpr long kMaxNumerator = 1L << 31;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Digit parse_digit_token(std::string_view token) {
  token = trim(token);
  Digit d = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, d);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorCode::Parse, "invalid digit '" + std::string(token) + "'");
  }
  return d;
}

}  // namespace

Base::Base(BigInt p, BigInt q)
    : p_(std::move(p)),
      q_(std::move(q)),
      p_small_(p_.get_si()),
      q_small_(q_.get_si()),
      z_(p_, q_) {
  z_.canonicalize();
}

Base Base::make(const BigInt& p, const BigInt& q) {
  if (q <= 1) {
    throw Error(ErrorCode::InvalidBase, "denominator must be > 1 (integer bases are not rational bases)");
  }
  if (p <= q) throw Error(ErrorCode::InvalidBase, "numerator must exceed denominator");
  if (gcd(p, q) != 1) throw Error(ErrorCode::InvalidBase, "numerator and denominator must be coprime");
  if (p >= kMaxNumerator) throw Error(ErrorCode::InvalidBase, "numerator too large for machine digits");
  return Base(p, q);
}

std::string Base::to_string() const { return p_.get_str() + "/" + q_.get_str(); }

Base make_base(const BigInt& p, const BigInt& q) { return Base::make(p, q); }

Base parse_base(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::Parse, "base must be written p/q, got '" + std::string(text) + "'");
  }
  return make_base(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

BigRational eval_value(const Base& base, std::span<const Digit> word) {
  // Horner over MSD-first digits: v <- v*z + a/q, kept as an integer
  // numerator over q^len to avoid canonicalizing at every step.
  BigInt num = 0;
  BigInt den = 1;
  const BigInt& p = base.numerator();
  const BigInt& q = base.denominator();
  for (Digit a : word) {
    // v = num/den; v*z + a/q = (num*p + a*den) / (den*q)
    num = num * p + BigInt(a) * den;
    den *= q;
  }
  BigRational v(num, den);
  v.canonicalize();
  return v;
}

BigRational eval_real_prefix(const Base& base, std::span<const Digit> prefix) {
  // sum (a_i/q) (q/p)^i = sum a_i q^{i-1} / p^i
  BigInt num = 0;
  BigInt den = 1;
  const BigInt& p = base.numerator();
  const BigInt& q = base.denominator();
  BigInt qpow = 1;
  for (Digit a : prefix) {
    den *= p;
    num = num * p + BigInt(a) * qpow;
    qpow *= q;
  }
  BigRational v(num, den);
  v.canonicalize();
  return v;
}

BigRational tail_factor(const Base& base, std::size_t k) {
  BigInt pk;
  BigInt qk;
  mpz_pow_ui(pk.get_mpz_t(), base.numerator().get_mpz_t(), k);
  mpz_pow_ui(qk.get_mpz_t(), base.denominator().get_mpz_t(), k);
  // (q/p)^k / (p/q - 1) = q^{k+1} / (p^k (p - q))
  BigRational f(qk * base.denominator(), pk * (base.numerator() - base.denominator()));
  f.canonicalize();
  return f;
}

RealEnclosure real_enclosure(const Base& base, std::span<const Digit> prefix, Digit dmin, Digit dmax) {
  if (dmin > dmax) throw Error(ErrorCode::InvalidArgument, "empty digit range for enclosure tail");
  const BigRational partial = eval_real_prefix(base, prefix);
  const BigRational unit = tail_factor(base, prefix.size()) / BigRational(base.denominator());
  return {partial + unit * BigRational(dmin), partial + unit * BigRational(dmax)};
}

std::strong_ordering radix_compare(std::span<const Digit> u, std::span<const Digit> v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

std::strong_ordering lex_compare(const DigitWord& u, const DigitWord& v) {
  return std::lexicographical_compare_three_way(u.digits.begin(), u.digits.end(), v.digits.begin(),
                                                v.digits.end());
}

PrefixOrder lex_compare(const OmegaPrefix& u, const OmegaPrefix& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] < v[i]) return PrefixOrder::Less;
    if (u[i] > v[i]) return PrefixOrder::Greater;
  }
  return PrefixOrder::PrefixEqual;
}

WordDistance word_distance(const OmegaPrefix& u, const OmegaPrefix& v) {
  const std::size_t n = std::min(u.size(), v.size());
  std::size_t lcp = 0;
  while (lcp < n && u[lcp] == v[lcp]) ++lcp;
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, lcp);
  WordDistance d;
  d.value = BigRational(BigInt(1), pow2);
  d.value.canonicalize();
  d.prefix_equal = (lcp == n);
  return d;
}

std::string format_digits(std::span<const Digit> digits) {
  const bool compact = std::all_of(digits.begin(), digits.end(), [](Digit d) { return 0 <= d && d <= 9; });
  std::string out;
  if (compact) {
    out.reserve(digits.size());
    for (Digit d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits[i]);
  }
  // a lone multi-character digit must not read back as several digits
  if (digits.size() == 1 && digits[0] >= 0) out.push_back(',');
  return out;
}

std::vector<Digit> parse_digits(std::string_view text) {
  text = trim(text);
  std::vector<Digit> out;
  if (text.empty() || text == "ε" || text == "eps" || text == "epsilon") return out;
  const bool compact = std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (compact) {
    for (char c : text) out.push_back(c - '0');
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(", ", start);
    if (end == std::string_view::npos) end = text.size();
    const auto token = trim(text.substr(start, end - start));
    if (!token.empty()) out.push_back(parse_digit_token(token));
    start = end + 1;
  }
  return out;
}

std::string format_rational(const BigRational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  BigInt n;
  const std::string s(text);
  if (s.empty() || n.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "invalid integer '" + s + "'");
  return n;
}

BigRational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
  BigRational r(parse_integer(text.substr(0, slash)), den);
  r.canonicalize();
  return r;
}

std::string to_decimal(const BigRational& x, unsigned fraction_digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction_digits);
  const bool negative = x < 0;
  BigRational scaled = abs(x) * BigRational(scale) + BigRational(1, 2);
  BigInt rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string digits = rounded.get_str();
  if (digits.size() <= fraction_digits) digits.insert(0, fraction_digits + 1 - digits.size(), '0');
  std::string out;
  if (negative && rounded != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - fraction_digits);
  if (fraction_digits > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - fraction_digits);
  }
  return out;
}

}  // namespace ratbase
