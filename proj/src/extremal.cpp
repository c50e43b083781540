// SPDX-License-Identifier: Apache-2.0

#include "ratbase/extremal.hpp"

namespace ratbase {

namespace {

template <typename Word, typename Op>
Word digitwise(const Word& u, const Word& v, Op op) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::LengthMismatch, "digitwise operation on words of lengths " + std::to_string(u.size()) +
                                               " and " + std::to_string(v.size()));
  }
  std::vector<Digit> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = op(u[i], v[i]);
  return Word(std::move(out));
}

}  // namespace

ExtremalRun extremal_run(const Base& base, const NodeId& n, ExtremalKind kind, std::size_t k) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "states are natural numbers");
  const Digit window_lo = kind == ExtremalKind::Bottom ? base.lower_digits().lo : base.upper_digits().lo;
  const auto q = static_cast<unsigned long>(base.denominator_digit());
  ExtremalRun out;
  out.prefix.digits.resize(k);
  out.end = n;
  for (std::size_t i = 0; i < k; ++i) {
    const Digit a = admissible_digit_from(base, out.end, window_lo);
    out.prefix.digits[i] = a;
    out.end *= base.numerator();
    out.end += a;
    mpz_divexact_ui(out.end.get_mpz_t(), out.end.get_mpz_t(), q);
  }
  return out;
}

OmegaPrefix extremal_prefix(const Base& base, const NodeId& n, ExtremalKind kind, std::size_t k) {
  return extremal_run(base, n, kind, k).prefix;
}

Digit shift_digit(const Base& base, Digit c) {
  if (!base.difference_digits().contains(c)) {
    throw Error(ErrorCode::DigitOutOfAlphabet, "mu is defined on D_z; got digit " + std::to_string(c));
  }
  return c - base.middle_digit();
}

OmegaPrefix shift_word(const Base& base, const OmegaPrefix& w) {
  std::vector<Digit> out;
  out.reserve(w.size());
  for (Digit c : w.digits) out.push_back(shift_digit(base, c));
  return OmegaPrefix(std::move(out));
}

OmegaPrefix digitwise_add(const OmegaPrefix& u, const OmegaPrefix& v) {
  return digitwise(u, v, [](Digit a, Digit b) { return a + b; });
}
OmegaPrefix digitwise_sub(const OmegaPrefix& u, const OmegaPrefix& v) {
  return digitwise(u, v, [](Digit a, Digit b) { return a - b; });
}
DigitWord digitwise_add(const DigitWord& u, const DigitWord& v) {
  return digitwise(u, v, [](Digit a, Digit b) { return a + b; });
}
DigitWord digitwise_sub(const DigitWord& u, const DigitWord& v) {
  return digitwise(u, v, [](Digit a, Digit b) { return a - b; });
}

OmegaPrefix span_word_prefix(const Base& base, const NodeId& n, std::size_t k) {
  return digitwise_sub(top_prefix(base, n, k), bottom_prefix(base, n, k));
}

OmegaPrefix successor_bottom_prefix(const Base& base, const NodeId& n, std::size_t k) {
  return bottom_prefix(base, n + 1, k);
}

NodeId witness_min_node_for_bottom_prefix(const Base& base, const DigitWord& word) {
  for (Digit b : word.digits) {
    if (!base.lower_digits().contains(b)) {
      throw Error(ErrorCode::DigitOutOfAlphabet, "bottom words are over B_q; got digit " + std::to_string(b));
    }
  }
  return find_min_node_with_path(base, word);
}

}  // namespace ratbase
