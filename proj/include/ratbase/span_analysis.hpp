// SPDX-License-Identifier: Apache-2.0
//
// Spans and the interval-deletion construction of the span-set closure.
//
// Interval endpoints are values of omega-words and are irrational in
// general, so each is carried as a RealEnclosure computed from a finite
// prefix. Everything here is exact; floating point appears only in the
// dimension reporting (DimensionBounds, BoxCount::ratio).

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratbase/extremal.hpp"

namespace ratbase {

inline constexpr std::size_t kDefaultTailDepth = 40;

struct SpanRecord {
  NodeId n;
  RealEnclosure enclosure;
  std::size_t depth = 0;
};

/// Enclosure of span(n) = rho(spanword(n)) from its k-prefix, tail digits
/// bounded by D_z.
SpanRecord span_enclosure(const Base& base, const NodeId& n, std::size_t k);

struct GammaOmega {
  /// rho(q minword(1))
  RealEnclosure gamma;
  /// rho(maxword(0))
  RealEnclosure omega;
};
GammaOmega gamma_omega(const Base& base, std::size_t k);

/// X_j: labels of length j of the runs of S_z from 0, lexicographically sorted.
std::vector<DigitWord> refine_words(const Base& base, std::size_t j, std::size_t cap = kDefaultFrontierCap);

/// I_u = [rho(u minword(n)), rho(u maxword(n))] with n the value of u.
struct IntervalRecord {
  DigitWord word;
  NodeId node;
  RealEnclosure lower_end;
  RealEnclosure upper_end;

  /// Smallest interval certainly containing I_u.
  RealEnclosure outer() const { return {lower_end.lo, upper_end.hi}; }
  /// Largest interval certainly contained in I_u (may be reversed if the
  /// endpoint enclosures overlap).
  RealEnclosure inner() const { return {lower_end.hi, upper_end.lo}; }
  /// Total width of the two endpoint enclosures.
  BigRational slack() const { return lower_end.width() + upper_end.width(); }
};

/// Each word must label a run of T_z from 0. `k` is the extremal-prefix depth.
IntervalRecord interval_for(const Base& base, const DigitWord& word, std::size_t k);
std::vector<IntervalRecord> intervals_for(const Base& base, const std::vector<DigitWord>& words, std::size_t k);

/// Exact Lebesgue measure of a finite union of closed intervals.
BigRational union_measure(std::vector<RealEnclosure> intervals);
/// Measure of the union of the outer hulls.
BigRational measure_outer(const std::vector<IntervalRecord>& intervals);

struct Contraction {
  /// Smallest i with floor(z)^i >= 2q.
  unsigned steps = 0;
  /// alpha = 1 - z^{-i} gamma / omega
  RealEnclosure alpha;
};
/// Large bases only; throws Error(Regime) otherwise.
Contraction alpha_contraction(const Base& base, std::size_t k = kDefaultTailDepth);

struct DimensionBounds {
  double ln2_over_lnz = 0;
  double appendix_bound = 0;
  double conjecture_value = 0;
  std::optional<double> special_five_halves;
  // decimal renderings at the requested number of fraction digits
  std::string ln2_over_lnz_text;
  std::string appendix_bound_text;
  std::string conjecture_value_text;
  std::string special_five_halves_text;
};
/// ln2/ln z and ln(2q-1)/ln p (proved upper bounds), the conjectured value
/// (ln(2q-1) - ln q)/(ln p - ln q), and ln3/(2 ln(5/2)) for base 5/2.
/// Large bases only.
DimensionBounds hausdorff_upper_bounds(const Base& base, unsigned fraction_digits = 12);

struct BoxCount {
  std::size_t depth = 0;
  std::size_t count = 0;
  /// ln N_j / ln(1/r_j) with r_j = omega z^{-j}; absent when undefined.
  std::optional<double> ratio;
};
/// Large bases only.
std::vector<BoxCount> box_counting_estimate(const Base& base, std::size_t max_depth,
                                            std::size_t cap = kDefaultFrontierCap);

struct RefinementRow {
  std::size_t depth = 0;
  std::size_t interval_count = 0;
  BigRational outer_measure;
  std::optional<double> dimension_ratio;
};
/// One row per refinement step j = 0..max_depth.
std::vector<RefinementRow> refinement_table(const Base& base, std::size_t max_depth, std::size_t k,
                                            std::size_t cap = kDefaultFrontierCap);

struct SmallBaseReport {
  std::size_t max_length = 0;
  std::size_t words_checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_examples;
  bool passed() const { return failures == 0; }
};
/// Small bases only: for every word u accepted by S_z with |u| <= L,
/// |<value(u)>| <= |u| and 0^i <value(u)> is a T_z word of the same length and value.
SmallBaseReport small_base_checks(const Base& base, std::size_t max_length, std::size_t cap = kDefaultFrontierCap);

struct BranchWitness {
  OmegaPrefix top;        // prefix of maxword(n)
  OmegaPrefix alternate;  // u (a-q) maxword(m-1)
  RealEnclosure top_value;
  RealEnclosure alternate_value;
};
/// Two S_z branches from n with distinct values: the top word and the branch
/// obtained by replacing its first digit a > p-q by a-q. Large bases only;
/// nullopt if no such digit occurs within k letters.
std::optional<BranchWitness> branch_divergence_witness(const Base& base, const NodeId& n, std::size_t k);

/// Number of m in [start, start + p^j) whose length-j incoming path is over D_z.
std::size_t count_difference_paths(const Base& base, const NodeId& start, std::size_t j);

}  // namespace ratbase
