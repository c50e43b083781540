// SPDX-License-Identifier: Apache-2.0

#include "ratbase/transducer.hpp"

namespace ratbase {

namespace {

Digit mod_floor(Digit a, Digit m) {
  const Digit r = a % m;
  return r < 0 ? r + m : r;
}

void check_lower(const Base& base, Digit d) {
  if (!base.lower_digits().contains(d)) {
    throw Error(ErrorCode::DigitOutOfAlphabet, "transducer letters are in B_q; got digit " + std::to_string(d));
  }
}

// One letter of D_{z,i}, solved in closed form: q m + y = p n + x + p - q
// with y in B_q. With `forward` unset the roles of x and y are swapped
// (q m - x = p n - y + p - q).
Digit step(const Base& base, NodeId& state, Digit known, bool forward) {
  const Digit p = base.numerator_digit();
  const Digit q = base.denominator_digit();
  // (n + 1) p mod q
  const Digit shift =
      mod_floor((static_cast<Digit>(mpz_fdiv_ui(state.get_mpz_t(), static_cast<unsigned long>(q))) + 1) * (p % q), q);
  const Digit other = forward ? mod_floor(known - shift, q) : mod_floor(known + shift, q);
  const Digit d = forward ? other - known + p - q : known - other + p - q;
  state *= base.numerator();
  state += d;
  mpz_divexact_ui(state.get_mpz_t(), state.get_mpz_t(), static_cast<unsigned long>(q));
  return other;
}

}  // namespace

std::vector<PairLetter> psi(const Base& base, Digit d) {
  if (!base.difference_digits().contains(d)) {
    throw Error(ErrorCode::DigitOutOfAlphabet, "psi is defined on D_z; got digit " + std::to_string(d));
  }
  const Digit diff = d - base.middle_digit();
  std::vector<PairLetter> out;
  for (Digit x = base.denominator_digit() - 1; x >= 0; --x) {
    const Digit y = x + diff;
    if (base.lower_digits().contains(y)) out.push_back({x, y});
  }
  return out;
}

std::optional<NodeId> transducer_step(const Base& base, const NodeId& n, const PairLetter& letter) {
  check_lower(base, letter.input);
  check_lower(base, letter.output);
  return tau(base, n, letter.output - letter.input + base.middle_digit());
}

OmegaPrefix SuccessorTransducer::transduce(const OmegaPrefix& input) const {
  NodeId state = initial_;
  std::vector<Digit> out(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    check_lower(base_, input[i]);
    out[i] = step(base_, state, input[i], true);
  }
  return OmegaPrefix(std::move(out));
}

OmegaPrefix SuccessorTransducer::inverse(const OmegaPrefix& output) const {
  NodeId state = initial_;
  std::vector<Digit> in(output.size());
  for (std::size_t i = 0; i < output.size(); ++i) {
    check_lower(base_, output[i]);
    in[i] = step(base_, state, output[i], false);
  }
  return OmegaPrefix(std::move(in));
}

OmegaPrefix transduce(const Base& base, const NodeId& initial, const OmegaPrefix& input) {
  return SuccessorTransducer(base, initial).transduce(input);
}

OmegaPrefix transduce_inverse(const Base& base, const NodeId& initial, const OmegaPrefix& output) {
  return SuccessorTransducer(base, initial).inverse(output);
}

}  // namespace ratbase
