// SPDX-License-Identifier: Apache-2.0
//
// Structured output for the command-line tool. JSON numbers that may exceed
// machine precision are emitted as strings ("num/den" or decimal); digit
// words are arrays of integers.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ratbase/checks.hpp"
#include "ratbase/extremal.hpp"

namespace ratbase {

enum class Format { Text, Json, Csv, Dot, Svg };

Format parse_format(std::string_view name);
std::string_view format_name(Format f);

/// Text rendering of a word: the compact form, or "ε" when empty.
std::string display_word(std::span<const Digit> digits);

std::string convert_integer_report(const Base& base, const NodeId& n, Format format);
std::string convert_word_report(const Base& base, const DigitWord& word, Format format);

enum class WordKind { Bottom, Top, Span };
WordKind parse_word_kind(std::string_view name);

/// JSON record { n, bottom_prefix, top_prefix, span_word_prefix, depth }.
std::string node_record_json(const Base& base, const NodeId& n, std::size_t k);
std::string word_report(const Base& base, const NodeId& n, WordKind kind, std::size_t k, Format format);

/// Transduces `input` (or the bottom prefix of `node` when input is empty and
/// node is given) through D_{z,start}.
std::string transduce_report(const Base& base, const NodeId& start, const OmegaPrefix& input, bool inverse,
                             Format format);

struct VerifyOutcome {
  std::string text;
  bool passed = true;
};
/// Cross-checks D_{z,start}(bottom(n)) against bottom(n + start + 1) for n
/// in [from, to].
VerifyOutcome verify_transducer(const Base& base, const NodeId& start, const NodeId& from, const NodeId& to,
                                std::size_t k, Format format);

/// psi tables for every digit of D_z.
std::string psi_table(const Base& base, Format format);

struct RefineOptions {
  std::size_t max_depth = 6;
  std::size_t tail_depth = kDefaultTailDepth;
  std::size_t frontier_cap = kDefaultFrontierCap;
  unsigned precision = 12;
  bool contraction = false;  // add the (i, alpha) certificate; large bases only
  bool intervals = false;    // export every interval instead of the summary table
};
std::string refine_report(const Base& base, const RefineOptions& options, Format format);

struct DimensionOptions {
  std::size_t max_depth = 14;
  std::size_t frontier_cap = kDefaultFrontierCap;
  unsigned precision = 12;
};
std::string dimension_report(const Base& base, const DimensionOptions& options, Format format);

struct CheckOutcome {
  std::string text;
  bool passed = true;
};
/// `suite` is a suite name or "all".
CheckOutcome check_report(const Base& base, std::string_view suite, const CheckParams& params, Format format);

}  // namespace ratbase
