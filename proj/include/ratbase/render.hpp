// SPDX-License-Identifier: Apache-2.0
//
// Graphviz and SVG renderings of depth-limited truncations.

#pragma once

#include <cstddef>
#include <string>

#include "ratbase/automata.hpp"

namespace ratbase {

inline constexpr std::size_t kMaxRenderDepth = 24;

/// T_z or S_z restricted to the states reached from 0 in at most `depth`
/// steps. Nodes are labelled by their value, edges by their digit; output
/// order is deterministic (breadth-first, then by digit).
std::string automaton_dot(const Base& base, AutomatonKind kind, std::size_t depth,
                          std::size_t cap = kDefaultFrontierCap);

/// D_z over the states of S_z reached within `depth` steps, edges labelled
/// by "(b,b')" pairs.
std::string transducer_dot(const Base& base, std::size_t depth, std::size_t cap = kDefaultFrontierCap);

struct SvgLayout {
  double x_step = 80;
  double y_scale = 400;
  double margin = 30;
  unsigned precision = 12;
};

/// The tree of representations drawn as a fractal: the node reached by u
/// sits at x = depth * x_step and y = y_scale * rho(u 0^omega). With
/// `span_overlay` the edges deleted in S_z are dashed.
std::string fractal_svg(const Base& base, std::size_t depth, const SvgLayout& layout, bool span_overlay,
                        std::size_t cap = kDefaultFrontierCap);

}  // namespace ratbase
