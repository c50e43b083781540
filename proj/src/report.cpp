// SPDX-License-Identifier: Apache-2.0

#include "ratbase/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ratbase/transducer.hpp"

namespace ratbase {

using nlohmann::ordered_json;

namespace {

void unsupported(Format f, std::string_view what) {
  throw Error(ErrorCode::InvalidArgument,
              "format " + std::string(format_name(f)) + " is not available for " + std::string(what));
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Space-separated digits, the layout used when printing omega-word prefixes.
std::string spaced(std::span<const Digit> digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits[i]);
  }
  return out;
}

std::string value_text(const BigRational& x) {
  return x.get_den() == 1 ? x.get_num().get_str() : format_rational(x);
}

std::string double_text(double x, unsigned precision) {
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(precision)) << x;
  return os.str();
}

std::string optional_text(const std::optional<double>& x, unsigned precision) {
  return x ? double_text(*x, precision) : std::string();
}

ordered_json enclosure_json(const RealEnclosure& e, unsigned precision) {
  return {{"lo", format_rational(e.lo)},
          {"hi", format_rational(e.hi)},
          {"lo_decimal", to_decimal(e.lo, precision)},
          {"hi_decimal", to_decimal(e.hi, precision)}};
}

std::string_view kind_name(WordKind kind) {
  switch (kind) {
    case WordKind::Bottom: return "bottom";
    case WordKind::Top: return "top";
    case WordKind::Span: return "span";
  }
  return "";
}

OmegaPrefix word_of(const Base& base, const NodeId& n, WordKind kind, std::size_t k) {
  switch (kind) {
    case WordKind::Bottom: return bottom_prefix(base, n, k);
    case WordKind::Top: return top_prefix(base, n, k);
    case WordKind::Span: return span_word_prefix(base, n, k);
  }
  return {};
}

std::string pair_list(const std::vector<PairLetter>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(pairs[i].input) + "," + std::to_string(pairs[i].output) + ")";
  }
  return out + "}";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "dot") return Format::Dot;
  if (name == "svg") return Format::Svg;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Dot: return "dot";
    case Format::Svg: return "svg";
  }
  return "";
}

std::string display_word(std::span<const Digit> digits) {
  return digits.empty() ? std::string("ε") : format_digits(digits);
}

std::string convert_integer_report(const Base& base, const NodeId& n, Format format) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "convert expects a non-negative integer");
  const DigitWord w = encode(base, n);
  switch (format) {
    case Format::Text: return display_word(w.view()) + "\n";
    case Format::Json:
      return dump({{"base", base.to_string()}, {"n", n.get_str()}, {"word", w.digits}, {"text", format_digits(w)}});
    case Format::Csv: return "base,n,word\n" + base.to_string() + "," + n.get_str() + "," + spaced(w.view()) + "\n";
    default: unsupported(format, "convert");
  }
  return {};
}

std::string convert_word_report(const Base& base, const DigitWord& word, Format format) {
  for (Digit d : word.digits) {
    if (!base.digits().contains(d)) {
      throw Error(ErrorCode::DigitOutOfAlphabet,
                  "digit " + std::to_string(d) + " is outside A_p for base " + base.to_string());
    }
  }
  const BigRational v = eval_value(base, word);
  const bool representation = v.get_den() == 1 && encode(base, v.get_num()) == word;
  switch (format) {
    case Format::Text: return value_text(v) + "\n";
    case Format::Json:
      return dump({{"base", base.to_string()},
                   {"word", word.digits},
                   {"value", value_text(v)},
                   {"is_representation", representation}});
    case Format::Csv:
      return "base,word,value,is_representation\n" + base.to_string() + "," + spaced(word.view()) + "," +
             value_text(v) + "," + (representation ? "true" : "false") + "\n";
    default: unsupported(format, "convert");
  }
  return {};
}

WordKind parse_word_kind(std::string_view name) {
  if (name == "bottom" || name == "min" || name == "minword") return WordKind::Bottom;
  if (name == "top" || name == "max" || name == "maxword") return WordKind::Top;
  if (name == "span" || name == "spanword") return WordKind::Span;
  throw Error(ErrorCode::InvalidArgument, "unknown word kind '" + std::string(name) + "'");
}

std::string node_record_json(const Base& base, const NodeId& n, std::size_t k) {
  ordered_json j = {{"base", base.to_string()},
                    {"n", n.get_str()},
                    {"bottom_prefix", bottom_prefix(base, n, k).digits},
                    {"top_prefix", top_prefix(base, n, k).digits},
                    {"span_word_prefix", span_word_prefix(base, n, k).digits},
                    {"depth", std::to_string(k)}};
  return dump(j);
}

std::string word_report(const Base& base, const NodeId& n, WordKind kind, std::size_t k, Format format) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "word expects a non-negative node");
  const OmegaPrefix w = word_of(base, n, kind, k);
  switch (format) {
    case Format::Text: return std::string(kind_name(kind)) + "(" + n.get_str() + ") = " + spaced(w.view()) + "\n";
    case Format::Json:
      return dump({{"base", base.to_string()},
                   {"n", n.get_str()},
                   {"kind", kind_name(kind)},
                   {"depth", std::to_string(k)},
                   {"prefix", w.digits}});
    case Format::Csv:
      return "base,n,kind,depth,prefix\n" + base.to_string() + "," + n.get_str() + "," + std::string(kind_name(kind)) +
             "," + std::to_string(k) + "," + spaced(w.view()) + "\n";
    default: unsupported(format, "word");
  }
  return {};
}

std::string transduce_report(const Base& base, const NodeId& start, const OmegaPrefix& input, bool inverse,
                             Format format) {
  if (start < 0) throw Error(ErrorCode::InvalidArgument, "transducer start state must be non-negative");
  const OmegaPrefix out = inverse ? transduce_inverse(base, start, input) : transduce(base, start, input);
  switch (format) {
    case Format::Text: return "input  = " + spaced(input.view()) + "\noutput = " + spaced(out.view()) + "\n";
    case Format::Json:
      return dump({{"base", base.to_string()},
                   {"start", start.get_str()},
                   {"direction", inverse ? "inverse" : "forward"},
                   {"input", input.digits},
                   {"output", out.digits}});
    case Format::Csv:
      return "base,start,direction,input,output\n" + base.to_string() + "," + start.get_str() + "," +
             (inverse ? "inverse" : "forward") + "," + spaced(input.view()) + "," + spaced(out.view()) + "\n";
    default: unsupported(format, "transduce");
  }
  return {};
}

VerifyOutcome verify_transducer(const Base& base, const NodeId& start, const NodeId& from, const NodeId& to,
                                std::size_t k, Format format) {
  if (start < 0 || from < 0 || to < from) throw Error(ErrorCode::InvalidArgument, "verify expects 0 <= from <= to");
  const SuccessorTransducer t(base, start);
  std::size_t cases = 0;
  std::optional<NodeId> failure;
  for (NodeId n = from; n <= to; ++n) {
    ++cases;
    if (t.transduce(bottom_prefix(base, n, k)) != bottom_prefix(base, n + start + 1, k)) {
      failure = n;
      break;
    }
  }
  VerifyOutcome r;
  r.passed = !failure;
  switch (format) {
    case Format::Text: {
      std::ostringstream os;
      os << (r.passed ? "PASS" : "FAIL") << " transducer start " << start.get_str() << " base " << base.to_string()
         << ": " << cases << " nodes in [" << from.get_str() << ", " << to.get_str() << "], depth " << k;
      if (failure) os << ", first mismatch at n = " << failure->get_str();
      os << "\n";
      r.text = os.str();
      break;
    }
    case Format::Json: {
      ordered_json j = {{"base", base.to_string()}, {"start", start.get_str()}, {"from", from.get_str()},
                        {"to", to.get_str()},       {"depth", std::to_string(k)}, {"cases", std::to_string(cases)},
                        {"passed", r.passed}};
      j["first_failure"] = failure ? ordered_json(failure->get_str()) : ordered_json(nullptr);
      r.text = dump(j);
      break;
    }
    case Format::Csv:
      r.text = "base,start,from,to,depth,cases,passed,first_failure\n" + base.to_string() + "," + start.get_str() +
               "," + from.get_str() + "," + to.get_str() + "," + std::to_string(k) + "," + std::to_string(cases) + "," +
               (r.passed ? "true" : "false") + "," + (failure ? failure->get_str() : "") + "\n";
      break;
    default: unsupported(format, "transduce --verify");
  }
  return r;
}

std::string psi_table(const Base& base, Format format) {
  const DigitRange dz = base.difference_digits();
  switch (format) {
    case Format::Text: {
      std::ostringstream os;
      os << "base " << base.to_string() << ", middle digit " << base.middle_digit() << "\n";
      for (Digit d = dz.lo; d <= dz.hi; ++d) {
        std::string mu = "mu(" + std::to_string(d) + ") = " + std::to_string(shift_digit(base, d));
        os << std::left << std::setw(14) << mu << "psi(" << d << ") = " << pair_list(psi(base, d)) << "\n";
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (Digit d = dz.lo; d <= dz.hi; ++d) {
        ordered_json pairs = ordered_json::array();
        for (const PairLetter& pl : psi(base, d)) pairs.push_back({pl.input, pl.output});
        rows.push_back({{"digit", d}, {"mu", shift_digit(base, d)}, {"pairs", pairs}});
      }
      return dump({{"base", base.to_string()}, {"middle_digit", std::to_string(base.middle_digit())}, {"rows", rows}});
    }
    case Format::Csv: {
      std::string out = "digit,mu,input,output\n";
      for (Digit d = dz.lo; d <= dz.hi; ++d) {
        for (const PairLetter& pl : psi(base, d)) {
          out += std::to_string(d) + "," + std::to_string(shift_digit(base, d)) + "," + std::to_string(pl.input) +
                 "," + std::to_string(pl.output) + "\n";
        }
      }
      return out;
    }
    default: unsupported(format, "psi");
  }
  return {};
}

std::string refine_report(const Base& base, const RefineOptions& o, Format format) {
  if (format != Format::Text && format != Format::Json && format != Format::Csv) unsupported(format, "refine");
  std::optional<Contraction> contraction;
  if (o.contraction) contraction = alpha_contraction(base, o.tail_depth);
  const GammaOmega go = gamma_omega(base, o.tail_depth);

  if (o.intervals) {
    ordered_json levels = ordered_json::array();
    std::string csv = "depth,word,node,lower_lo,lower_hi,upper_lo,upper_hi\n";
    std::ostringstream text;
    for (std::size_t j = 0; j <= o.max_depth; ++j) {
      ordered_json items = ordered_json::array();
      for (const IntervalRecord& r : intervals_for(base, refine_words(base, j, o.frontier_cap), o.tail_depth)) {
        const std::string lo_lo = to_decimal(r.lower_end.lo, o.precision);
        const std::string lo_hi = to_decimal(r.lower_end.hi, o.precision);
        const std::string up_lo = to_decimal(r.upper_end.lo, o.precision);
        const std::string up_hi = to_decimal(r.upper_end.hi, o.precision);
        items.push_back({{"word", r.word.digits},
                         {"node", r.node.get_str()},
                         {"lower_end", enclosure_json(r.lower_end, o.precision)},
                         {"upper_end", enclosure_json(r.upper_end, o.precision)}});
        csv += std::to_string(j) + "," + spaced(r.word.view()) + "," + r.node.get_str() + "," + lo_lo + "," + lo_hi +
               "," + up_lo + "," + up_hi + "\n";
        text << j << "  " << std::left << std::setw(12) << display_word(r.word.view()) << " node " << r.node.get_str()
             << "  [" << lo_lo << ", " << up_hi << "]\n";
      }
      levels.push_back({{"depth", std::to_string(j)}, {"intervals", items}});
    }
    if (format == Format::Csv) return csv;
    if (format == Format::Text) return text.str();
    return dump({{"base", base.to_string()}, {"tail_depth", std::to_string(o.tail_depth)}, {"levels", levels}});
  }

  const std::vector<RefinementRow> rows = refinement_table(base, o.max_depth, o.tail_depth, o.frontier_cap);
  switch (format) {
    case Format::Text: {
      std::ostringstream os;
      os << "base " << base.to_string() << (base.is_large() ? " (large)" : " (small)") << ", tail depth "
         << o.tail_depth << "\n";
      os << "gamma in [" << to_decimal(go.gamma.lo, o.precision) << ", " << to_decimal(go.gamma.hi, o.precision)
         << "]\n";
      os << "omega in [" << to_decimal(go.omega.lo, o.precision) << ", " << to_decimal(go.omega.hi, o.precision)
         << "]\n";
      if (contraction) {
        os << "contraction: i = " << contraction->steps << ", alpha in [" << to_decimal(contraction->alpha.lo, o.precision)
           << ", " << to_decimal(contraction->alpha.hi, o.precision) << "]\n";
      }
      os << std::left << std::setw(7) << "depth" << std::setw(11) << "intervals" << std::setw(o.precision + 6)
         << "outer measure"
         << "ratio\n";
      for (const RefinementRow& r : rows) {
        os << std::left << std::setw(7) << r.depth << std::setw(11) << r.interval_count << std::setw(o.precision + 6)
           << to_decimal(r.outer_measure, o.precision) << optional_text(r.dimension_ratio, o.precision) << "\n";
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json table = ordered_json::array();
      for (const RefinementRow& r : rows) {
        table.push_back({{"depth", std::to_string(r.depth)},
                         {"interval_count", std::to_string(r.interval_count)},
                         {"outer_measure", format_rational(r.outer_measure)},
                         {"outer_measure_decimal", to_decimal(r.outer_measure, o.precision)},
                         {"dimension_ratio", optional_text(r.dimension_ratio, o.precision)}});
      }
      ordered_json j = {{"base", base.to_string()},
                        {"regime", base.is_large() ? "large" : "small"},
                        {"tail_depth", std::to_string(o.tail_depth)},
                        {"gamma", enclosure_json(go.gamma, o.precision)},
                        {"omega", enclosure_json(go.omega, o.precision)}};
      if (contraction) {
        j["contraction"] = {{"steps", std::to_string(contraction->steps)},
                            {"alpha", enclosure_json(contraction->alpha, o.precision)}};
      }
      j["rows"] = table;
      return dump(j);
    }
    default: {
      std::string out = "depth,interval_count,outer_measure,outer_measure_decimal,dimension_ratio\n";
      for (const RefinementRow& r : rows) {
        out += std::to_string(r.depth) + "," + std::to_string(r.interval_count) + "," +
               format_rational(r.outer_measure) + "," + to_decimal(r.outer_measure, o.precision) + "," +
               optional_text(r.dimension_ratio, o.precision) + "\n";
      }
      return out;
    }
  }
}

std::string dimension_report(const Base& base, const DimensionOptions& o, Format format) {
  if (format != Format::Text && format != Format::Json && format != Format::Csv) unsupported(format, "dim");
  const DimensionBounds b = hausdorff_upper_bounds(base, o.precision);
  const std::vector<BoxCount> boxes = box_counting_estimate(base, o.max_depth, o.frontier_cap);
  switch (format) {
    case Format::Text: {
      std::ostringstream os;
      os << "base " << base.to_string() << "\n";
      os << "upper bound ln 2 / ln z           = " << b.ln2_over_lnz_text << "\n";
      os << "upper bound ln(2q-1) / ln p       = " << b.appendix_bound_text << "\n";
      os << "conjecture (ln(2q-1)-ln q)/ln z   = " << b.conjecture_value_text << "\n";
      if (b.special_five_halves) os << "bound ln 3 / (2 ln z)             = " << b.special_five_halves_text << "\n";
      os << "box counting\n" << std::left << std::setw(7) << "depth" << std::setw(10) << "count" << "ratio\n";
      for (const BoxCount& c : boxes) {
        os << std::left << std::setw(7) << c.depth << std::setw(10) << c.count << optional_text(c.ratio, o.precision)
           << "\n";
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (const BoxCount& c : boxes) {
        rows.push_back({{"depth", std::to_string(c.depth)},
                        {"count", std::to_string(c.count)},
                        {"ratio", optional_text(c.ratio, o.precision)}});
      }
      ordered_json bounds = {{"ln2_over_lnz", b.ln2_over_lnz_text},
                             {"ln_2q_minus_1_over_ln_p", b.appendix_bound_text},
                             {"conjecture", b.conjecture_value_text}};
      if (b.special_five_halves) bounds["ln3_over_2_lnz"] = b.special_five_halves_text;
      return dump({{"base", base.to_string()}, {"bounds", bounds}, {"box_counting", rows}});
    }
    default: {
      std::string out = "depth,count,ratio,ln2_over_lnz\n";
      for (const BoxCount& c : boxes) {
        out += std::to_string(c.depth) + "," + std::to_string(c.count) + "," + optional_text(c.ratio, o.precision) +
               "," + b.ln2_over_lnz_text + "\n";
      }
      return out;
    }
  }
}

CheckOutcome check_report(const Base& base, std::string_view suite, const CheckParams& params, Format format) {
  if (format != Format::Text && format != Format::Json && format != Format::Csv) unsupported(format, "check");
  std::vector<SuiteReport> suites;
  if (suite == "all") {
    suites = run_all_suites(base, params);
  } else {
    suites.push_back(run_suite(base, suite, params));
  }
  CheckOutcome r;
  for (const SuiteReport& s : suites) r.passed = r.passed && s.passed();

  auto status = [](const CheckResult& c) { return c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL"); };
  switch (format) {
    case Format::Text: {
      std::ostringstream os;
      os << "base " << base.to_string() << "\n";
      for (const SuiteReport& s : suites) {
        for (const CheckResult& c : s.checks) {
          os << "[" << status(c) << "] " << s.suite << "/" << c.name << " (" << c.cases << " cases)";
          if (!c.detail.empty()) os << ": " << c.detail;
          os << "\n";
        }
      }
      os << (r.passed ? "all checks passed" : "some checks FAILED") << "\n";
      r.text = os.str();
      break;
    }
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const SuiteReport& s : suites) {
        ordered_json checks = ordered_json::array();
        for (const CheckResult& c : s.checks) {
          checks.push_back({{"name", c.name},
                            {"status", status(c)},
                            {"cases", std::to_string(c.cases)},
                            {"detail", c.detail}});
        }
        arr.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"checks", checks}});
      }
      r.text = dump({{"base", base.to_string()}, {"passed", r.passed}, {"suites", arr}});
      break;
    }
    default: {
      std::string out = "suite,check,status,cases,detail\n";
      for (const SuiteReport& s : suites) {
        for (const CheckResult& c : s.checks) {
          std::string detail = c.detail;
          for (char& ch : detail) {
            if (ch == ',' || ch == '\n') ch = ';';
          }
          out += s.suite + "," + c.name + "," + status(c) + "," + std::to_string(c.cases) + "," + detail + "\n";
        }
      }
      r.text = out;
    }
  }
  return r;
}

}  // namespace ratbase
