// SPDX-License-Identifier: Apache-2.0
//
// The successor transducer D_z. It has the states and transition rule of
// S_z, each label d in D_z being replaced by the pairs (x, y) of B_q x B_q
// with y - x = d - (p - q). Started in state i it maps the bottom word of n
// to the bottom word of n + i + 1.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratbase/automata.hpp"

namespace ratbase {

struct PairLetter {
  Digit input;
  Digit output;
  bool operator==(const PairLetter&) const = default;
  auto operator<=>(const PairLetter&) const = default;
};

/// Label substitution psi(d), by decreasing input digit. Throws for d outside D_z.
std::vector<PairLetter> psi(const Base& base, Digit d);

/// delta(n, (x, y)) = tau(n, y - x + p - q).
std::optional<NodeId> transducer_step(const Base& base, const NodeId& n, const PairLetter& letter);

/// D_{z,i}: the transducer re-rooted at state i.
class SuccessorTransducer {
 public:
  SuccessorTransducer(Base base, NodeId initial) : base_(std::move(base)), initial_(std::move(initial)) {}

  const Base& base() const noexcept { return base_; }
  const NodeId& initial() const noexcept { return initial_; }

  /// The unique output of equal length such that (input, output) labels a
  /// run from the initial state.
  OmegaPrefix transduce(const OmegaPrefix& input) const;
  /// The unique input whose image is `output`.
  OmegaPrefix inverse(const OmegaPrefix& output) const;

 private:
  Base base_;
  NodeId initial_;
};

OmegaPrefix transduce(const Base& base, const NodeId& initial, const OmegaPrefix& input);
OmegaPrefix transduce_inverse(const Base& base, const NodeId& initial, const OmegaPrefix& output);

}  // namespace ratbase
