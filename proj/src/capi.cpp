// SPDX-License-Identifier: Apache-2.0

#include "ratbase/ratbase.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ratbase/render.hpp"
#include "ratbase/report.hpp"
#include "ratbase/transducer.hpp"

struct rb_base {
  ratbase::Base base;
};

namespace {

using namespace ratbase;

thread_local std::string last_error;

rb_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return RB_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidBase: return RB_ERR_INVALID_BASE;
    case ErrorCode::DigitOutOfAlphabet: return RB_ERR_DIGIT_OUT_OF_ALPHABET;
    case ErrorCode::LengthMismatch: return RB_ERR_LENGTH_MISMATCH;
    case ErrorCode::FrontierCapExceeded: return RB_ERR_FRONTIER_CAP;
    case ErrorCode::Regime: return RB_ERR_REGIME;
    case ErrorCode::DepthCap: return RB_ERR_DEPTH_CAP;
    case ErrorCode::Parse: return RB_ERR_PARSE;
  }
  return RB_ERR_INTERNAL;
}

template <typename F>
rb_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return RB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(name) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  require(out, "out");
  *out = dup(s);
}

const Base& base_of(const rb_base* b) {
  require(b, "base");
  return b->base;
}

BigInt node_of(const char* text, const char* name) {
  require(text, name);
  BigInt n = parse_integer(text);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be non-negative");
  return n;
}

Format format_of(rb_format f) {
  switch (f) {
    case RB_FORMAT_TEXT: return Format::Text;
    case RB_FORMAT_JSON: return Format::Json;
    case RB_FORMAT_CSV: return Format::Csv;
    case RB_FORMAT_DOT: return Format::Dot;
    case RB_FORMAT_SVG: return Format::Svg;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format");
}

WordKind kind_of(rb_word_kind k) {
  switch (k) {
    case RB_WORD_BOTTOM: return WordKind::Bottom;
    case RB_WORD_TOP: return WordKind::Top;
    case RB_WORD_SPAN: return WordKind::Span;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown word kind");
}

}  // namespace

extern "C" {

void rb_refine_options_init(rb_refine_options* o) {
  if (!o) return;
  const RefineOptions d;
  *o = {d.max_depth, d.tail_depth, d.frontier_cap, d.precision, 0, 0};
}

void rb_dimension_options_init(rb_dimension_options* o) {
  if (!o) return;
  const DimensionOptions d;
  *o = {d.max_depth, d.frontier_cap, d.precision};
}

void rb_check_options_init(rb_check_options* o) {
  if (!o) return;
  const CheckParams d;
  *o = {d.max_node, d.prefix_len, d.tail_depth, d.frontier_cap};
}

void rb_render_options_init(rb_render_options* o) {
  if (!o) return;
  const SvgLayout d;
  *o = {kDefaultFrontierCap, d.precision, d.x_step, d.y_scale, d.margin, 0};
}

const char* rb_version(void) { return "0.1.0"; }

const char* rb_status_name(rb_status s) {
  switch (s) {
    case RB_OK: return "ok";
    case RB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RB_ERR_INVALID_BASE: return "invalid base";
    case RB_ERR_DIGIT_OUT_OF_ALPHABET: return "digit out of alphabet";
    case RB_ERR_LENGTH_MISMATCH: return "length mismatch";
    case RB_ERR_FRONTIER_CAP: return "frontier cap exceeded";
    case RB_ERR_REGIME: return "wrong base regime";
    case RB_ERR_DEPTH_CAP: return "depth cap exceeded";
    case RB_ERR_PARSE: return "parse error";
    case RB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rb_last_error_message(void) { return last_error.c_str(); }

void rb_string_free(char* s) { std::free(s); }

rb_status rb_format_parse(const char* name, rb_format* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<rb_format>(parse_format(name));
  });
}

rb_status rb_word_kind_parse(const char* name, rb_word_kind* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<rb_word_kind>(parse_word_kind(name));
  });
}

rb_status rb_render_kind_parse(const char* name, rb_render_kind* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    const std::string s = name;
    if (s == "tree") {
      *out = RB_RENDER_TREE;
    } else if (s == "span") {
      *out = RB_RENDER_SPAN;
    } else if (s == "fractal") {
      *out = RB_RENDER_FRACTAL;
    } else if (s == "transducer") {
      *out = RB_RENDER_TRANSDUCER;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown render kind '" + s + "'");
    }
  });
}

rb_status rb_base_create(const char* p, const char* q, rb_base** out) {
  return guard([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    *out = new rb_base{make_base(parse_integer(p), parse_integer(q))};
  });
}

rb_status rb_base_parse(const char* text, rb_base** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new rb_base{parse_base(text)};
  });
}

void rb_base_free(rb_base* base) { delete base; }

rb_status rb_base_to_string(const rb_base* base, char** out) {
  return guard([&] { emit(out, base_of(base).to_string()); });
}

rb_status rb_base_is_large(const rb_base* base, int* out) {
  return guard([&] {
    require(out, "out");
    *out = base_of(base).is_large() ? 1 : 0;
  });
}

rb_status rb_encode(const rb_base* base, const char* n, char** out) {
  return guard([&] { emit(out, format_digits(encode(base_of(base), node_of(n, "n")))); });
}

rb_status rb_eval_word(const rb_base* base, const char* word, char** out) {
  return guard([&] {
    require(word, "word");
    const Base& b = base_of(base);
    const DigitWord w(parse_digits(word));
    for (Digit d : w.digits) {
      if (!b.digits().contains(d)) throw Error(ErrorCode::DigitOutOfAlphabet, "digit outside A_p: " + std::to_string(d));
    }
    const BigRational v = eval_value(b, w);
    emit(out, v.get_den() == 1 ? v.get_num().get_str() : format_rational(v));
  });
}

rb_status rb_word_prefix(const rb_base* base, const char* n, rb_word_kind kind, size_t k, int64_t* out) {
  return guard([&] {
    const Base& b = base_of(base);
    const BigInt node = node_of(n, "n");
    if (k > 0) require(out, "out");
    OmegaPrefix w;
    switch (kind_of(kind)) {
      case WordKind::Bottom: w = bottom_prefix(b, node, k); break;
      case WordKind::Top: w = top_prefix(b, node, k); break;
      case WordKind::Span: w = span_word_prefix(b, node, k); break;
    }
    std::copy(w.digits.begin(), w.digits.end(), out);
  });
}

rb_status rb_transduce(const rb_base* base, const char* start, const int64_t* input, size_t len, int inverse,
                       int64_t* out) {
  return guard([&] {
    const Base& b = base_of(base);
    const BigInt s = node_of(start, "start");
    if (len > 0) {
      require(input, "input");
      require(out, "out");
    }
    const OmegaPrefix in(std::vector<Digit>(input, input + len));
    const OmegaPrefix res = inverse ? transduce_inverse(b, s, in) : transduce(b, s, in);
    std::copy(res.digits.begin(), res.digits.end(), out);
  });
}

rb_status rb_convert_int_report(const rb_base* base, const char* n, rb_format format, char** out) {
  return guard([&] { emit(out, convert_integer_report(base_of(base), node_of(n, "n"), format_of(format))); });
}

rb_status rb_convert_word_report(const rb_base* base, const char* word, rb_format format, char** out) {
  return guard([&] {
    require(word, "word");
    emit(out, convert_word_report(base_of(base), DigitWord(parse_digits(word)), format_of(format)));
  });
}

rb_status rb_word_report(const rb_base* base, const char* n, rb_word_kind kind, size_t k, rb_format format,
                         char** out) {
  return guard(
      [&] { emit(out, word_report(base_of(base), node_of(n, "n"), kind_of(kind), k, format_of(format))); });
}

rb_status rb_node_record_json(const rb_base* base, const char* n, size_t k, char** out) {
  return guard([&] { emit(out, node_record_json(base_of(base), node_of(n, "n"), k)); });
}

rb_status rb_transduce_report(const rb_base* base, const char* start, const char* input, int inverse,
                              rb_format format, char** out) {
  return guard([&] {
    require(input, "input");
    emit(out, transduce_report(base_of(base), node_of(start, "start"), OmegaPrefix(parse_digits(input)), inverse != 0,
                               format_of(format)));
  });
}

rb_status rb_verify_transducer(const rb_base* base, const char* start, const char* from, const char* to, size_t k,
                               rb_format format, char** out, int* passed) {
  return guard([&] {
    const VerifyOutcome r = verify_transducer(base_of(base), node_of(start, "start"), node_of(from, "from"),
                                              node_of(to, "to"), k, format_of(format));
    emit(out, r.text);
    if (passed) *passed = r.passed ? 1 : 0;
  });
}

rb_status rb_psi_table(const rb_base* base, rb_format format, char** out) {
  return guard([&] { emit(out, psi_table(base_of(base), format_of(format))); });
}

rb_status rb_refine_report(const rb_base* base, const rb_refine_options* options, rb_format format, char** out) {
  return guard([&] {
    require(options, "options");
    RefineOptions o;
    o.max_depth = options->max_depth;
    o.tail_depth = options->tail_depth;
    o.frontier_cap = options->frontier_cap;
    o.precision = options->precision;
    o.contraction = options->contraction != 0;
    o.intervals = options->intervals != 0;
    emit(out, refine_report(base_of(base), o, format_of(format)));
  });
}

rb_status rb_dimension_report(const rb_base* base, const rb_dimension_options* options, rb_format format,
                              char** out) {
  return guard([&] {
    require(options, "options");
    DimensionOptions o;
    o.max_depth = options->max_depth;
    o.frontier_cap = options->frontier_cap;
    o.precision = options->precision;
    emit(out, dimension_report(base_of(base), o, format_of(format)));
  });
}

rb_status rb_check_report(const rb_base* base, const char* suite, const rb_check_options* options, rb_format format,
                          char** out, int* passed) {
  return guard([&] {
    require(suite, "suite");
    require(options, "options");
    CheckParams p;
    p.max_node = options->max_node;
    p.prefix_len = options->prefix_len;
    p.tail_depth = options->tail_depth;
    p.frontier_cap = options->frontier_cap;
    const CheckOutcome r = check_report(base_of(base), suite, p, format_of(format));
    emit(out, r.text);
    if (passed) *passed = r.passed ? 1 : 0;
  });
}

rb_status rb_render(const rb_base* base, rb_render_kind kind, size_t depth, const rb_render_options* options,
                    rb_format format, char** out) {
  return guard([&] {
    const Base& b = base_of(base);
    rb_render_options o;
    rb_render_options_init(&o);
    if (options) o = *options;
    const SvgLayout layout{o.x_step, o.y_scale, o.margin, o.precision};
    const Format f = format_of(format);
    auto wrong = [&](const char* what) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + " cannot be rendered as " + std::string(format_name(f)));
    };
    switch (kind) {
      case RB_RENDER_TREE:
      case RB_RENDER_SPAN: {
        const bool span = kind == RB_RENDER_SPAN;
        if (f == Format::Dot) {
          emit(out, automaton_dot(b, span ? AutomatonKind::Span : AutomatonKind::Tree, depth, o.frontier_cap));
        } else if (f == Format::Svg) {
          emit(out, fractal_svg(b, depth, layout, span, o.frontier_cap));
        } else {
          wrong(span ? "span" : "tree");
        }
        break;
      }
      case RB_RENDER_FRACTAL:
        if (f != Format::Svg) wrong("fractal");
        emit(out, fractal_svg(b, depth, layout, o.span_overlay != 0, o.frontier_cap));
        break;
      case RB_RENDER_TRANSDUCER:
        if (f != Format::Dot) wrong("transducer");
        emit(out, transducer_dot(b, depth, o.frontier_cap));
        break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown render kind");
    }
  });
}

}  // extern "C"
