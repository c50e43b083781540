// SPDX-License-Identifier: Apache-2.0
//
// The representation tree T_z and the span automaton S_z. Both have the
// natural numbers as states, 0 as initial state, and the transition
// n --a--> (n p + a) / q whenever q divides n p + a; they differ only in
// their digit alphabet (A_p for the tree, D_z for the span automaton).
// States are never materialized as a graph; everything is computed lazily.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratbase/numeration.hpp"

namespace ratbase {

using NodeId = BigInt;

enum class AutomatonKind { Tree, Span };

DigitRange alphabet(const Base& base, AutomatonKind kind);

struct Transition {
  Digit digit;
  NodeId target;
  bool operator==(const Transition&) const = default;
};

/// (n p + a) / q when divisible, no alphabet check.
std::optional<NodeId> tau(const Base& base, const NodeId& n, Digit a);

/// The residue r in {0..q-1} with r = -n p (mod q): tau(n, a) is defined
/// exactly for a = r (mod q), so any q consecutive digits hold one such a.
Digit admissible_residue(const Base& base, const NodeId& n);

/// The unique digit of [lo, lo+q) for which tau(n, .) is defined.
Digit admissible_digit_from(const Base& base, const NodeId& n, Digit lo);

/// Outgoing transitions, sorted by digit.
std::vector<Transition> successors(const Base& base, AutomatonKind kind, const NodeId& n);
/// Same, over an arbitrary window of consecutive digits.
std::vector<Transition> successors(const Base& base, DigitRange digits, const NodeId& n);

/// Folds tau along `label`; nullopt as soon as a step is undefined or a digit
/// falls outside the automaton's alphabet.
std::optional<NodeId> run(const Base& base, AutomatonKind kind, const NodeId& start, std::span<const Digit> label);
inline std::optional<NodeId> run(const Base& base, AutomatonKind kind, const NodeId& start, const DigitWord& w) {
  return run(base, kind, start, w.view());
}

/// The representation <n>: no leading zero, <0> is the empty word.
DigitWord encode(const Base& base, const NodeId& n);

struct Predecessor {
  NodeId source;
  Digit digit;
  bool operator==(const Predecessor&) const = default;
};

/// Unique incoming transition of m in T_z (the root has its 0-loop).
Predecessor predecessor(const Base& base, const NodeId& m);

/// Label of the unique length-k path of T_z ending in m.
DigitWord incoming_path(const Base& base, const NodeId& m, std::size_t k);

/// Smallest start state from which `word` (over A_p) labels a path of T_z.
/// The admissible start states form one residue class modulo q^|word|; the
/// class is lifted one digit at a time.
NodeId find_min_node_with_path(const Base& base, const DigitWord& word);

inline constexpr std::size_t kDefaultFrontierCap = std::size_t{1} << 22;

/// A path label from the root together with the state it reaches.
struct LabeledState {
  DigitWord label;
  NodeId state;
};

/// States reached from 0 in exactly j steps, sorted ascending. In T_z, and
/// in S_z for large bases, this is also the number of length-j labels.
/// Throws Error(FrontierCapExceeded) once a frontier outgrows `cap`.
std::vector<NodeId> states_at_depth(const Base& base, AutomatonKind kind, std::size_t j,
                                    std::size_t cap = kDefaultFrontierCap);

std::size_t count_states_at_depth(const Base& base, AutomatonKind kind, std::size_t j,
                                  std::size_t cap = kDefaultFrontierCap);

/// All length-j labels of runs from 0, in lexicographic order.
std::vector<LabeledState> labels_at_depth(const Base& base, AutomatonKind kind, std::size_t j,
                                          std::size_t cap = kDefaultFrontierCap);
std::vector<LabeledState> labels_at_depth(const Base& base, DigitRange digits, std::size_t j,
                                          std::size_t cap = kDefaultFrontierCap);

}  // namespace ratbase
