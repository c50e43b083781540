// SPDX-License-Identifier: Apache-2.0
//
// Bottom and top words of the branches of T_z, the shift morphism mu,
// digitwise word arithmetic and span-words.

#pragma once

#include <cstddef>

#include "ratbase/automata.hpp"

namespace ratbase {

enum class ExtremalKind { Bottom, Top };

/// Prefix of an extremal branch and the state it reaches.
struct ExtremalRun {
  OmegaPrefix prefix;
  NodeId end;
};

/// First k letters of the bottom (resp. top) word of n, i.e. of the
/// lexicographically smallest (resp. largest) branch of T_z from n. Each step
/// takes the unique admissible digit of B_q (resp. C_z).
ExtremalRun extremal_run(const Base& base, const NodeId& n, ExtremalKind kind, std::size_t k);
OmegaPrefix extremal_prefix(const Base& base, const NodeId& n, ExtremalKind kind, std::size_t k);

inline OmegaPrefix bottom_prefix(const Base& base, const NodeId& n, std::size_t k) {
  return extremal_prefix(base, n, ExtremalKind::Bottom, k);
}
inline OmegaPrefix top_prefix(const Base& base, const NodeId& n, std::size_t k) {
  return extremal_prefix(base, n, ExtremalKind::Top, k);
}

/// mu(c) = c - (p - q); defined on D_z, maps C_z onto B_q.
Digit shift_digit(const Base& base, Digit c);
OmegaPrefix shift_word(const Base& base, const OmegaPrefix& w);

/// Letter-by-letter sum and difference without carries.
OmegaPrefix digitwise_add(const OmegaPrefix& u, const OmegaPrefix& v);
OmegaPrefix digitwise_sub(const OmegaPrefix& u, const OmegaPrefix& v);
DigitWord digitwise_add(const DigitWord& u, const DigitWord& v);
DigitWord digitwise_sub(const DigitWord& u, const DigitWord& v);

/// top(n) - bottom(n), a word over D_z.
OmegaPrefix span_word_prefix(const Base& base, const NodeId& n, std::size_t k);

/// bottom(n + 1): the image of bottom(n) under the successor map.
OmegaPrefix successor_bottom_prefix(const Base& base, const NodeId& n, std::size_t k);

/// A node whose bottom word starts with `word` (digits in B_q). A path
/// labelled over B_q is necessarily a prefix of the bottom word of its origin.
NodeId witness_min_node_for_bottom_prefix(const Base& base, const DigitWord& word);

}  // namespace ratbase
