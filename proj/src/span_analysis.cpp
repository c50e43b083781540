// SPDX-License-Identifier: Apache-2.0

#include "ratbase/span_analysis.hpp"

#include <algorithm>
#include <cmath>

#include <mpfr.h>

namespace ratbase {

namespace {

void require_large(const Base& base, const char* what) {
  if (!base.is_large()) {
    throw Error(ErrorCode::Regime, std::string(what) + " requires a large base (p > 2q-1); " + base.to_string() +
                                       " is small and its span-set closure is an interval");
  }
}

void require_small(const Base& base, const char* what) {
  if (base.is_large()) {
    throw Error(ErrorCode::Regime, std::string(what) + " requires a small base (p <= 2q-1); got " + base.to_string());
  }
}

// (q/p)^k
BigRational inverse_power(const Base& base, std::size_t k) {
  BigInt pk;
  BigInt qk;
  mpz_pow_ui(pk.get_mpz_t(), base.numerator().get_mpz_t(), k);
  mpz_pow_ui(qk.get_mpz_t(), base.denominator().get_mpz_t(), k);
  BigRational r(qk, pk);
  r.canonicalize();
  return r;
}

RealEnclosure affine(const RealEnclosure& e, const BigRational& scale, const BigRational& offset) {
  return {offset + scale * e.lo, offset + scale * e.hi};
}

double midpoint(const RealEnclosure& e) { return BigRational((e.lo + e.hi) / 2).get_d(); }

// Digits of X_j: D_z restricted to the tree alphabet.
DigitRange refine_digits(const Base& base) {
  const DigitRange d = base.difference_digits();
  const DigitRange a = base.digits();
  return {std::max(d.lo, a.lo), std::min(d.hi, a.hi)};
}

std::optional<double> dimension_ratio(std::size_t count, std::size_t depth, double ln_z, double ln_omega) {
  if (depth == 0 || count == 0) return std::nullopt;
  const double denom = static_cast<double>(depth) * ln_z - ln_omega;
  if (denom <= 0) return std::nullopt;
  return std::log(static_cast<double>(count)) / denom;
}

class MpfrValue {
 public:
  MpfrValue() { mpfr_init2(v_, 256); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

  static void log_of(MpfrValue& out, long n) {
    mpfr_set_si(out.get(), n, MPFR_RNDN);
    mpfr_log(out.get(), out.get(), MPFR_RNDN);
  }
  std::string text(unsigned digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(digits), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  double to_double() { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

}  // namespace

SpanRecord span_enclosure(const Base& base, const NodeId& n, std::size_t k) {
  const DigitRange d = base.difference_digits();
  return {n, real_enclosure(base, span_word_prefix(base, n, k), d), k};
}

GammaOmega gamma_omega(const Base& base, std::size_t k) {
  // 0 --q--> 1 in T_z, so q minword(1) is a branch from the root.
  const std::size_t len = std::max<std::size_t>(k, 1);
  OmegaPrefix gamma_word = bottom_prefix(base, 1, len - 1);
  gamma_word.digits.insert(gamma_word.digits.begin(), base.denominator_digit());
  GammaOmega out;
  out.gamma = real_enclosure(base, gamma_word, base.lower_digits());
  out.omega = real_enclosure(base, top_prefix(base, 0, k), base.upper_digits());
  return out;
}

std::vector<DigitWord> refine_words(const Base& base, std::size_t j, std::size_t cap) {
  std::vector<DigitWord> out;
  for (LabeledState& ls : labels_at_depth(base, refine_digits(base), j, cap)) out.push_back(std::move(ls.label));
  return out;
}

IntervalRecord interval_for(const Base& base, const DigitWord& word, std::size_t k) {
  auto node = run(base, AutomatonKind::Tree, NodeId(0), word);
  if (!node) {
    throw Error(ErrorCode::InvalidArgument, "word '" + format_digits(word) + "' does not label a run of T_z from 0");
  }
  const BigRational offset = eval_real_prefix(base, word.view());
  const BigRational scale = inverse_power(base, word.size());
  IntervalRecord rec;
  rec.word = word;
  rec.lower_end = affine(real_enclosure(base, bottom_prefix(base, *node, k), base.lower_digits()), scale, offset);
  rec.upper_end = affine(real_enclosure(base, top_prefix(base, *node, k), base.upper_digits()), scale, offset);
  rec.node = std::move(*node);
  return rec;
}

std::vector<IntervalRecord> intervals_for(const Base& base, const std::vector<DigitWord>& words, std::size_t k) {
  std::vector<IntervalRecord> out;
  out.reserve(words.size());
  for (const DigitWord& w : words) out.push_back(interval_for(base, w, k));
  return out;
}

BigRational union_measure(std::vector<RealEnclosure> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const RealEnclosure& a, const RealEnclosure& b) {
    return a.lo < b.lo;
  });
  BigRational total = 0;
  std::size_t i = 0;
  while (i < intervals.size()) {
    BigRational lo = intervals[i].lo;
    BigRational hi = intervals[i].hi;
    for (++i; i < intervals.size() && intervals[i].lo <= hi; ++i) {
      if (intervals[i].hi > hi) hi = intervals[i].hi;
    }
    if (hi > lo) total += hi - lo;
  }
  return total;
}

BigRational measure_outer(const std::vector<IntervalRecord>& intervals) {
  std::vector<RealEnclosure> hulls;
  hulls.reserve(intervals.size());
  for (const IntervalRecord& r : intervals) hulls.push_back(r.outer());
  return union_measure(std::move(hulls));
}

Contraction alpha_contraction(const Base& base, std::size_t k) {
  require_large(base, "the contraction factor");
  const Digit floor_z = base.numerator_digit() / base.denominator_digit();
  Contraction c;
  BigInt power = 1;
  while (power < 2 * base.denominator()) {
    power *= floor_z;
    ++c.steps;
  }
  const GammaOmega go = gamma_omega(base, k);
  if (go.omega.lo <= 0) throw Error(ErrorCode::InvalidArgument, "truncation too shallow to bound omega away from 0");
  const BigRational zi = inverse_power(base, c.steps);
  c.alpha.lo = 1 - zi * go.gamma.hi / go.omega.lo;
  c.alpha.hi = 1 - zi * go.gamma.lo / go.omega.hi;
  return c;
}

DimensionBounds hausdorff_upper_bounds(const Base& base, unsigned fraction_digits) {
  require_large(base, "the Hausdorff dimension bounds");
  const long p = base.numerator_digit();
  const long q = base.denominator_digit();
  MpfrValue ln2, lnp, lnq, ln_width, lnz, num, result;
  MpfrValue::log_of(ln2, 2);
  MpfrValue::log_of(lnp, p);
  MpfrValue::log_of(lnq, q);
  MpfrValue::log_of(ln_width, 2 * q - 1);
  mpfr_sub(lnz.get(), lnp.get(), lnq.get(), MPFR_RNDN);

  DimensionBounds b;
  mpfr_div(result.get(), ln2.get(), lnz.get(), MPFR_RNDN);
  b.ln2_over_lnz = result.to_double();
  b.ln2_over_lnz_text = result.text(fraction_digits);

  mpfr_div(result.get(), ln_width.get(), lnp.get(), MPFR_RNDN);
  b.appendix_bound = result.to_double();
  b.appendix_bound_text = result.text(fraction_digits);

  mpfr_sub(num.get(), ln_width.get(), lnq.get(), MPFR_RNDN);
  mpfr_div(result.get(), num.get(), lnz.get(), MPFR_RNDN);
  b.conjecture_value = result.to_double();
  b.conjecture_value_text = result.text(fraction_digits);

  if (p == 5 && q == 2) {
    // at most 3 surviving paths of length 2 per node
    MpfrValue ln3;
    MpfrValue::log_of(ln3, 3);
    mpfr_mul_ui(num.get(), lnz.get(), 2, MPFR_RNDN);
    mpfr_div(result.get(), ln3.get(), num.get(), MPFR_RNDN);
    b.special_five_halves = result.to_double();
    b.special_five_halves_text = result.text(fraction_digits);
  }
  return b;
}

std::vector<BoxCount> box_counting_estimate(const Base& base, std::size_t max_depth, std::size_t cap) {
  require_large(base, "box-counting");
  const double ln_z = std::log(base.ratio().get_d());
  const double ln_omega = std::log(midpoint(gamma_omega(base, kDefaultTailDepth).omega));
  std::vector<BoxCount> out;
  std::vector<NodeId> frontier{NodeId(0)};
  std::vector<NodeId> next;
  for (std::size_t j = 0;; ++j) {
    out.push_back({j, frontier.size(), dimension_ratio(frontier.size(), j, ln_z, ln_omega)});
    if (j == max_depth) break;
    next.clear();
    for (const NodeId& n : frontier) {
      for (Transition& t : successors(base, AutomatonKind::Span, n)) next.push_back(std::move(t.target));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > cap) {
      throw Error(ErrorCode::FrontierCapExceeded, "frontier at depth " + std::to_string(j + 1) + " exceeds cap " +
                                                      std::to_string(cap));
    }
    frontier.swap(next);
  }
  return out;
}

std::vector<RefinementRow> refinement_table(const Base& base, std::size_t max_depth, std::size_t k,
                                            std::size_t cap) {
  const double ln_z = std::log(base.ratio().get_d());
  const double ln_omega = std::log(midpoint(gamma_omega(base, k).omega));
  std::vector<RefinementRow> rows;
  for (std::size_t j = 0; j <= max_depth; ++j) {
    const auto words = refine_words(base, j, cap);
    RefinementRow row;
    row.depth = j;
    row.interval_count = words.size();
    row.outer_measure = measure_outer(intervals_for(base, words, k));
    row.dimension_ratio = dimension_ratio(words.size(), j, ln_z, ln_omega);
    rows.push_back(std::move(row));
  }
  return rows;
}

SmallBaseReport small_base_checks(const Base& base, std::size_t max_length, std::size_t cap) {
  require_small(base, "the small-base checks");
  SmallBaseReport report;
  report.max_length = max_length;
  auto fail = [&report](const DigitWord& u, const std::string& why) {
    ++report.failures;
    if (report.failure_examples.size() < 10) report.failure_examples.push_back("'" + format_digits(u) + "': " + why);
  };
  std::vector<LabeledState> frontier{{DigitWord{}, NodeId(0)}};
  for (std::size_t len = 0;; ++len) {
    for (const LabeledState& ls : frontier) {
      ++report.words_checked;
      const DigitWord& u = ls.label;
      if (eval_value(base, u) != BigRational(ls.state)) fail(u, "run state differs from the word's value");
      const DigitWord rep = encode(base, ls.state);
      if (rep.size() > u.size()) {
        fail(u, "representation longer than the word");
        continue;
      }
      DigitWord padded;
      padded.digits.assign(u.size() - rep.size(), 0);
      padded.digits.insert(padded.digits.end(), rep.digits.begin(), rep.digits.end());
      const auto reached = run(base, AutomatonKind::Tree, NodeId(0), padded);
      if (!reached || *reached != ls.state) fail(u, "padded representation does not reach the same state");
    }
    if (len == max_length) break;
    std::vector<LabeledState> next;
    for (const LabeledState& ls : frontier) {
      for (Transition& t : successors(base, AutomatonKind::Span, ls.state)) {
        DigitWord label = ls.label;
        label.digits.push_back(t.digit);
        next.push_back({std::move(label), std::move(t.target)});
      }
    }
    if (next.size() > cap) {
      throw Error(ErrorCode::FrontierCapExceeded, "small-base enumeration exceeds cap at length " +
                                                      std::to_string(len + 1));
    }
    frontier.swap(next);
  }
  return report;
}

std::optional<BranchWitness> branch_divergence_witness(const Base& base, const NodeId& n, std::size_t k) {
  require_large(base, "branch divergence");
  const OmegaPrefix top = top_prefix(base, n, k);
  const Digit middle = base.middle_digit();
  NodeId state = n;
  for (std::size_t t = 0; t + 1 < k; ++t) {
    const Digit a = top[t];
    if (a > middle) {
      // state --a--> m in T_z, hence state --(a-q)--> m-1 in S_z
      const NodeId m = *tau(base, state, a);
      BranchWitness w;
      w.top = top;
      w.alternate.digits.assign(top.digits.begin(), top.digits.begin() + static_cast<std::ptrdiff_t>(t));
      w.alternate.digits.push_back(a - base.denominator_digit());
      const OmegaPrefix rest = top_prefix(base, m - 1, k - t - 1);
      w.alternate.digits.insert(w.alternate.digits.end(), rest.digits.begin(), rest.digits.end());
      w.top_value = real_enclosure(base, w.top, base.upper_digits());
      w.alternate_value = real_enclosure(base, w.alternate, base.upper_digits());
      return w;
    }
    state = *tau(base, state, a);
  }
  return std::nullopt;
}

std::size_t count_difference_paths(const Base& base, const NodeId& start, std::size_t j) {
  BigInt size;
  mpz_pow_ui(size.get_mpz_t(), base.numerator().get_mpz_t(), j);
  const DigitRange d = base.difference_digits();
  std::size_t count = 0;
  for (NodeId m = start; m < start + size; ++m) {
    const DigitWord path = incoming_path(base, m, j);
    if (std::all_of(path.digits.begin(), path.digits.end(), [&](Digit a) { return d.contains(a); })) ++count;
  }
  return count;
}

}  // namespace ratbase
