// SPDX-License-Identifier: Apache-2.0

#include "ratbase/automata.hpp"

#include <algorithm>

namespace ratbase {

namespace {

Digit mod_floor(Digit a, Digit m) {
  const Digit r = a % m;
  return r < 0 ? r + m : r;
}

void check_cap(std::size_t size, std::size_t cap, std::size_t depth) {
  if (size > cap) {
    throw Error(ErrorCode::FrontierCapExceeded, "frontier of " + std::to_string(size) + " states at depth " +
                                                    std::to_string(depth) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

DigitRange alphabet(const Base& base, AutomatonKind kind) {
  return kind == AutomatonKind::Tree ? base.digits() : base.difference_digits();
}

std::optional<NodeId> tau(const Base& base, const NodeId& n, Digit a) {
  NodeId t = n * base.numerator() + a;
  if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(base.denominator_digit()))) {
    return std::nullopt;
  }
  mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(base.denominator_digit()));
  return t;
}

Digit admissible_residue(const Base& base, const NodeId& n) {
  const Digit q = base.denominator_digit();
  const Digit n_mod = static_cast<Digit>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(q)));
  return mod_floor(-n_mod * mod_floor(base.numerator_digit(), q), q);
}

Digit admissible_digit_from(const Base& base, const NodeId& n, Digit lo) {
  const Digit q = base.denominator_digit();
  return lo + mod_floor(admissible_residue(base, n) - lo, q);
}

std::vector<Transition> successors(const Base& base, AutomatonKind kind, const NodeId& n) {
  return successors(base, alphabet(base, kind), n);
}

std::vector<Transition> successors(const Base& base, DigitRange range, const NodeId& n) {
  std::vector<Transition> out;
  for (Digit a = admissible_digit_from(base, n, range.lo); a <= range.hi; a += base.denominator_digit()) {
    // divisibility holds by construction
    NodeId m = n * base.numerator() + a;
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(base.denominator_digit()));
    if (m < 0) continue;
    out.push_back({a, std::move(m)});
  }
  return out;
}

std::optional<NodeId> run(const Base& base, AutomatonKind kind, const NodeId& start, std::span<const Digit> label) {
  const DigitRange range = alphabet(base, kind);
  const auto q = static_cast<unsigned long>(base.denominator_digit());
  NodeId state = start;
  for (Digit a : label) {
    if (!range.contains(a)) return std::nullopt;
    state *= base.numerator();
    state += a;
    if (state < 0 || !mpz_divisible_ui_p(state.get_mpz_t(), q)) return std::nullopt;
    mpz_divexact_ui(state.get_mpz_t(), state.get_mpz_t(), q);
  }
  return state;
}

DigitWord encode(const Base& base, const NodeId& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "cannot encode a negative integer");
  const auto p = static_cast<unsigned long>(base.numerator_digit());
  std::vector<Digit> digits;
  NodeId m = n;
  NodeId t;
  while (m > 0) {
    // q m = p n' + a
    t = m * base.denominator();
    const Digit a = static_cast<Digit>(mpz_fdiv_q_ui(m.get_mpz_t(), t.get_mpz_t(), p));
    digits.push_back(a);
  }
  std::reverse(digits.begin(), digits.end());
  return DigitWord(std::move(digits));
}

Predecessor predecessor(const Base& base, const NodeId& m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "states are natural numbers");
  Predecessor pred;
  const NodeId t = m * base.denominator();
  pred.digit = static_cast<Digit>(
      mpz_fdiv_q_ui(pred.source.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(base.numerator_digit())));
  return pred;
}

DigitWord incoming_path(const Base& base, const NodeId& m, std::size_t k) {
  std::vector<Digit> digits(k);
  NodeId state = m;
  for (std::size_t i = k; i-- > 0;) {
    Predecessor pred = predecessor(base, state);
    digits[i] = pred.digit;
    state = std::move(pred.source);
  }
  return DigitWord(std::move(digits));
}

NodeId find_min_node_with_path(const Base& base, const DigitWord& word) {
  const DigitRange range = base.digits();
  for (Digit a : word.digits) {
    if (!range.contains(a)) {
      throw Error(ErrorCode::DigitOutOfAlphabet, "digit " + std::to_string(a) + " not in A_p");
    }
  }
  // Invariant after t digits: `start` is the least admissible start state
  // modulo q^t, `state` is where the first t digits lead from it, and adding
  // j q^t to the start adds j p^t to `state`.
  const Digit q = base.denominator_digit();
  NodeId start = 0;
  NodeId state = 0;
  NodeId q_pow = 1;
  NodeId p_pow = 1;
  for (Digit a : word.digits) {
    Digit j = 0;
    for (; j < q; ++j) {
      if (tau(base, state + p_pow * j, a)) break;
    }
    start += q_pow * j;
    state = *tau(base, state + p_pow * j, a);
    q_pow *= base.denominator();
    p_pow *= base.numerator();
  }
  return start;
}

std::vector<NodeId> states_at_depth(const Base& base, AutomatonKind kind, std::size_t j, std::size_t cap) {
  std::vector<NodeId> frontier{NodeId(0)};
  std::vector<NodeId> next;
  for (std::size_t depth = 1; depth <= j; ++depth) {
    next.clear();
    for (const NodeId& n : frontier) {
      for (Transition& t : successors(base, kind, n)) next.push_back(std::move(t.target));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    check_cap(next.size(), cap, depth);
    frontier.swap(next);
  }
  return frontier;
}

std::size_t count_states_at_depth(const Base& base, AutomatonKind kind, std::size_t j, std::size_t cap) {
  return states_at_depth(base, kind, j, cap).size();
}

std::vector<LabeledState> labels_at_depth(const Base& base, AutomatonKind kind, std::size_t j, std::size_t cap) {
  return labels_at_depth(base, alphabet(base, kind), j, cap);
}

std::vector<LabeledState> labels_at_depth(const Base& base, DigitRange digits, std::size_t j, std::size_t cap) {
  std::vector<LabeledState> frontier{{DigitWord{}, NodeId(0)}};
  std::vector<LabeledState> next;
  for (std::size_t depth = 1; depth <= j; ++depth) {
    next.clear();
    // parents are in lex order and children are expanded by increasing digit
    for (const LabeledState& ls : frontier) {
      for (Transition& t : successors(base, digits, ls.state)) {
        DigitWord label = ls.label;
        label.digits.push_back(t.digit);
        next.push_back({std::move(label), std::move(t.target)});
      }
      check_cap(next.size(), cap, depth);
    }
    frontier.swap(next);
  }
  return frontier;
}

}  // namespace ratbase
