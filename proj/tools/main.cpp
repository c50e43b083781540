// SPDX-License-Identifier: Apache-2.0
//
// ratbase: command-line front end to the rational base numeration library.
//
// Exit status: 0 on success, 1 when a check or verification fails, 2 on a
// usage or library error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratbase/ratbase.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

void ok(rb_status s) {
  if (s != RB_OK) throw CliError{std::string(rb_status_name(s)) + ": " + rb_last_error_message()};
}

struct Text {
  char* p = nullptr;
  ~Text() { rb_string_free(p); }
};

using BasePtr = std::unique_ptr<rb_base, decltype(&rb_base_free)>;

BasePtr load_base(const std::string& text) {
  rb_base* b = nullptr;
  ok(rb_base_parse(text.c_str(), &b));
  return BasePtr(b, &rb_base_free);
}

struct Globals {
  std::string base = "3/2";
  std::string format = "text";
  std::string out;
  std::optional<std::size_t> frontier_cap;
  unsigned precision = 12;
};

std::size_t frontier_cap(const Globals& g) {
  if (g.frontier_cap) return *g.frontier_cap;
  if (const char* env = std::getenv("RATBASE_FRONTIER_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument("cap");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw CliError{"RATBASE_FRONTIER_CAP must be a positive integer"};
    }
  }
  return std::size_t{1} << 22;
}

rb_format format_of(const Globals& g) {
  rb_format f;
  ok(rb_format_parse(g.format.c_str(), &f));
  return f;
}

void write(const Globals& g, const std::string& s) {
  if (g.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw CliError{"cannot open " + g.out + " for writing"};
  f << s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational base numeration: representations, extremal words, the successor transducer and span analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(rb_version()));

  Globals g;
  app.add_option("--base", g.base, "Base as p/q with coprime p > q > 1")->capture_default_str();
  app.add_option("--format", g.format, "Output format: text, json, csv, dot or svg")
      ->check(CLI::IsMember({"text", "json", "csv", "dot", "svg"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--frontier-cap", g.frontier_cap, "Largest frontier a search may hold (env RATBASE_FRONTIER_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "Decimal digits in rendered numbers")->capture_default_str();

  // convert
  auto* convert = app.add_subcommand("convert", "Representation of an integer, or value of a digit word");
  std::string conv_int, conv_word;
  auto* int_opt = convert->add_option("--int", conv_int, "Non-negative integer to represent");
  auto* word_opt = convert->add_option("--word", conv_word, "Digit word to evaluate (\"212\" or \"2,1,2\")");
  int_opt->excludes(word_opt);
  convert->require_option(1);

  // word
  auto* word = app.add_subcommand("word", "Prefix of the bottom, top or span word of a node");
  std::string word_node = "0";
  std::string word_kind = "bottom";
  std::size_t word_len = 16;
  bool word_record = false;
  word->add_option("node,--node", word_node, "Node n")->capture_default_str();
  word->add_option("--kind", word_kind, "bottom, top or span")->capture_default_str();
  word->add_option("--prefix-len,-k", word_len, "Number of letters")->capture_default_str();
  word->add_flag("--record", word_record, "JSON record holding all three words");

  // transduce
  auto* trans = app.add_subcommand("transduce", "Run the successor transducer started in state i");
  std::string trans_start = "0";
  std::string trans_input;
  std::string trans_node;
  std::size_t trans_len = 16;
  bool trans_inverse = false;
  bool trans_verify = false;
  std::string verify_from = "0", verify_to = "1000";
  trans->add_option("--start,-i", trans_start, "Initial state i")->capture_default_str();
  auto* in_opt = trans->add_option("--input", trans_input, "Input word over B_q");
  auto* node_opt = trans->add_option("--node", trans_node, "Use the bottom word of this node as input");
  in_opt->excludes(node_opt);
  trans->add_option("--prefix-len,-k", trans_len, "Prefix length for --node and --verify")->capture_default_str();
  trans->add_flag("--inverse", trans_inverse, "Run the inverse transducer");
  trans->add_flag("--verify", trans_verify, "Check the image of bottom(n) is bottom(n + i + 1)");
  trans->add_option("--from", verify_from, "First node for --verify")->capture_default_str();
  trans->add_option("--to", verify_to, "Last node for --verify")->capture_default_str();

  // psi
  auto* psi = app.add_subcommand("psi", "Label substitution from the span automaton to the transducer");

  // refine
  auto* refine = app.add_subcommand("refine", "Interval refinement of the span set");
  rb_refine_options ropt;
  rb_refine_options_init(&ropt);
  bool r_contraction = false, r_intervals = false;
  refine->add_option("--depth", ropt.max_depth, "Deepest refinement step")->capture_default_str();
  refine->add_option("--prefix-len", ropt.tail_depth, "Extremal prefix length for endpoint enclosures")
      ->capture_default_str();
  refine->add_flag("--contraction", r_contraction, "Certify the contraction factor (large bases only)");
  refine->add_flag("--intervals", r_intervals, "Export every interval");

  // dim
  auto* dim = app.add_subcommand("dim", "Dimension bounds and box-counting estimates (large bases only)");
  rb_dimension_options dopt;
  rb_dimension_options_init(&dopt);
  dim->add_option("--depth", dopt.max_depth, "Deepest box-counting level")->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "Run invariant suites; exits 1 on failure");
  rb_check_options copt;
  rb_check_options_init(&copt);
  std::string suite;
  bool all = false;
  auto* suite_opt = check->add_option("--suite", suite, "numeration, automata, extremal, transducer or span");
  auto* all_opt = check->add_flag("--all", all, "Run every suite");
  suite_opt->excludes(all_opt);
  check->add_option("--max-node", copt.max_node, "Largest node exercised")->capture_default_str();
  check->add_option("--prefix-len", copt.prefix_len, "Word prefix length")->capture_default_str();

  // render
  auto* render = app.add_subcommand("render", "Graphviz or SVG rendering of a truncation");
  std::string render_kind = "tree";
  std::size_t render_depth = 6;
  rb_render_options vopt;
  rb_render_options_init(&vopt);
  bool overlay = false;
  render->add_option("kind,--kind", render_kind, "tree, span, fractal or transducer")
      ->check(CLI::IsMember({"tree", "span", "fractal", "transducer"}))
      ->capture_default_str();
  render->add_option("--depth", render_depth, "Truncation depth")->capture_default_str();
  render->add_option("--x-step", vopt.x_step, "Horizontal distance between levels")->capture_default_str();
  render->add_option("--y-scale", vopt.y_scale, "Vertical scale applied to values")->capture_default_str();
  render->add_option("--margin", vopt.margin, "Margin around the drawing")->capture_default_str();
  render->add_flag("--span-overlay", overlay, "Dash the edges deleted in the span automaton");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    BasePtr base = load_base(g.base);
    const rb_format fmt = format_of(g);
    Text t;
    int passed = 1;

    if (*convert) {
      if (*int_opt) {
        ok(rb_convert_int_report(base.get(), conv_int.c_str(), fmt, &t.p));
      } else {
        ok(rb_convert_word_report(base.get(), conv_word.c_str(), fmt, &t.p));
      }
    } else if (*word) {
      if (word_record) {
        ok(rb_node_record_json(base.get(), word_node.c_str(), word_len, &t.p));
      } else {
        rb_word_kind kind;
        ok(rb_word_kind_parse(word_kind.c_str(), &kind));
        ok(rb_word_report(base.get(), word_node.c_str(), kind, word_len, fmt, &t.p));
      }
    } else if (*trans) {
      if (trans_verify) {
        ok(rb_verify_transducer(base.get(), trans_start.c_str(), verify_from.c_str(), verify_to.c_str(), trans_len,
                                fmt, &t.p, &passed));
      } else {
        std::string input = trans_input;
        if (!trans_node.empty()) {
          std::vector<int64_t> digits(trans_len);
          ok(rb_word_prefix(base.get(), trans_node.c_str(), RB_WORD_BOTTOM, trans_len, digits.data()));
          input.clear();
          for (std::size_t i = 0; i < digits.size(); ++i) input += (i ? "," : "") + std::to_string(digits[i]);
        }
        ok(rb_transduce_report(base.get(), trans_start.c_str(), input.c_str(), trans_inverse ? 1 : 0, fmt, &t.p));
      }
    } else if (*psi) {
      ok(rb_psi_table(base.get(), fmt, &t.p));
    } else if (*refine) {
      ropt.frontier_cap = frontier_cap(g);
      ropt.precision = g.precision;
      ropt.contraction = r_contraction ? 1 : 0;
      ropt.intervals = r_intervals ? 1 : 0;
      ok(rb_refine_report(base.get(), &ropt, fmt, &t.p));
    } else if (*dim) {
      dopt.frontier_cap = frontier_cap(g);
      dopt.precision = g.precision;
      ok(rb_dimension_report(base.get(), &dopt, fmt, &t.p));
    } else if (*check) {
      if (suite.empty() && !all) throw CliError{"check needs --suite NAME or --all"};
      copt.frontier_cap = frontier_cap(g);
      ok(rb_check_report(base.get(), all ? "all" : suite.c_str(), &copt, fmt, &t.p, &passed));
    } else if (*render) {
      rb_render_kind kind;
      ok(rb_render_kind_parse(render_kind.c_str(), &kind));
      // dot is the natural default for graphs, svg for the fractal
      rb_format rfmt = fmt;
      if (g.format == "text") rfmt = kind == RB_RENDER_FRACTAL ? RB_FORMAT_SVG : RB_FORMAT_DOT;
      vopt.frontier_cap = frontier_cap(g);
      vopt.precision = g.precision;
      vopt.span_overlay = overlay ? 1 : 0;
      ok(rb_render(base.get(), kind, render_depth, &vopt, rfmt, &t.p));
    }

    write(g, t.p ? t.p : "");
    return passed ? 0 : kExitFailed;
  } catch (const CliError& e) {
    std::cerr << "ratbase: " << e.message << "\n";
    return kExitError;
  }
}
