// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library through the C header only.

#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "ratbase/ratbase.h"

namespace {

struct BaseHandle {
  rb_base* ptr = nullptr;
  ~BaseHandle() { rb_base_free(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  rb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(rb_version()) == "0.1.0");
  CHECK(std::string(rb_status_name(RB_OK)) == "ok");
  CHECK(std::string(rb_status_name(RB_ERR_REGIME)) == "wrong base regime");
  rb_format f;
  CHECK(rb_format_parse("json", &f) == RB_OK);
  CHECK(f == RB_FORMAT_JSON);
  CHECK(rb_format_parse("yaml", &f) == RB_ERR_INVALID_ARGUMENT);
  rb_render_kind k;
  CHECK(rb_render_kind_parse("fractal", &k) == RB_OK);
  CHECK(k == RB_RENDER_FRACTAL);
}

TEST_CASE("base handles") {
  BaseHandle b;
  REQUIRE(rb_base_parse("3/2", &b.ptr) == RB_OK);
  char* s = nullptr;
  REQUIRE(rb_base_to_string(b.ptr, &s) == RB_OK);
  CHECK(take(s) == "3/2");
  int large = -1;
  CHECK(rb_base_is_large(b.ptr, &large) == RB_OK);
  CHECK(large == 0);

  rb_base* bad = nullptr;
  CHECK(rb_base_parse("4/2", &bad) == RB_ERR_INVALID_BASE);
  CHECK(bad == nullptr);
  CHECK(std::string(rb_last_error_message()).size() > 0);
  CHECK(rb_base_parse("2/3", &bad) == RB_ERR_INVALID_BASE);
  CHECK(rb_base_parse("seven", &bad) == RB_ERR_PARSE);
  CHECK(rb_base_create("7", "3", &bad) == RB_OK);
  CHECK(rb_base_is_large(bad, &large) == RB_OK);
  CHECK(large == 1);
  rb_base_free(bad);
  rb_base_free(nullptr);
}

TEST_CASE("encode and evaluate") {
  BaseHandle b;
  REQUIRE(rb_base_parse("3/2", &b.ptr) == RB_OK);
  char* s = nullptr;
  REQUIRE(rb_encode(b.ptr, "4", &s) == RB_OK);
  CHECK(take(s) == "212");
  REQUIRE(rb_encode(b.ptr, "0", &s) == RB_OK);
  CHECK(take(s) == "");
  REQUIRE(rb_eval_word(b.ptr, "212", &s) == RB_OK);
  CHECK(take(s) == "4");
  REQUIRE(rb_eval_word(b.ptr, "1", &s) == RB_OK);
  CHECK(take(s) == "1/2");
  CHECK(rb_eval_word(b.ptr, "13", &s) == RB_ERR_DIGIT_OUT_OF_ALPHABET);
  CHECK(rb_encode(b.ptr, "x", &s) == RB_ERR_PARSE);
  CHECK(rb_encode(b.ptr, "-3", &s) != RB_OK);
}

TEST_CASE("word prefixes and the transducer") {
  BaseHandle b;
  REQUIRE(rb_base_parse("3/2", &b.ptr) == RB_OK);
  std::vector<int64_t> out(7);
  REQUIRE(rb_word_prefix(b.ptr, "1", RB_WORD_BOTTOM, 7, out.data()) == RB_OK);
  CHECK(out == std::vector<int64_t>{1, 0, 1, 1, 0, 0, 0});
  REQUIRE(rb_word_prefix(b.ptr, "1", RB_WORD_TOP, 7, out.data()) == RB_OK);
  CHECK(out == std::vector<int64_t>{1, 2, 2, 1, 1, 1, 2});
  REQUIRE(rb_word_prefix(b.ptr, "1", RB_WORD_SPAN, 7, out.data()) == RB_OK);
  CHECK(out == std::vector<int64_t>{0, 2, 1, 0, 1, 1, 2});

  const std::vector<int64_t> in{1, 0, 1, 1, 0, 0, 0};
  REQUIRE(rb_transduce(b.ptr, "0", in.data(), in.size(), 0, out.data()) == RB_OK);
  CHECK(out == std::vector<int64_t>{0, 1, 1, 0, 0, 0, 1});
  std::vector<int64_t> back(7);
  REQUIRE(rb_transduce(b.ptr, "0", out.data(), out.size(), 1, back.data()) == RB_OK);
  CHECK(back == in);
  const std::vector<int64_t> bad{2};
  CHECK(rb_transduce(b.ptr, "0", bad.data(), 1, 0, out.data()) == RB_ERR_DIGIT_OUT_OF_ALPHABET);
}

TEST_CASE("reports") {
  BaseHandle b32, b43, b73;
  REQUIRE(rb_base_parse("3/2", &b32.ptr) == RB_OK);
  REQUIRE(rb_base_parse("4/3", &b43.ptr) == RB_OK);
  REQUIRE(rb_base_parse("7/3", &b73.ptr) == RB_OK);
  char* s = nullptr;

  REQUIRE(rb_convert_int_report(b32.ptr, "4", RB_FORMAT_TEXT, &s) == RB_OK);
  CHECK(take(s) == "212\n");
  REQUIRE(rb_word_report(b32.ptr, "4", RB_WORD_SPAN, 5, RB_FORMAT_TEXT, &s) == RB_OK);
  CHECK(take(s) == "span(4) = 2 1 0 1 1\n");
  REQUIRE(rb_psi_table(b43.ptr, RB_FORMAT_TEXT, &s) == RB_OK);
  CHECK(take(s).find("psi(-1) = {(2,0)}") != std::string::npos);

  int passed = 0;
  REQUIRE(rb_verify_transducer(b32.ptr, "0", "0", "200", 32, RB_FORMAT_TEXT, &s, &passed) == RB_OK);
  CHECK(passed == 1);
  CHECK(take(s).rfind("PASS", 0) == 0);

  rb_check_options co;
  rb_check_options_init(&co);
  co.max_node = 30;
  passed = 0;
  REQUIRE(rb_check_report(b43.ptr, "all", &co, RB_FORMAT_JSON, &s, &passed) == RB_OK);
  CHECK(passed == 1);
  CHECK(take(s).find("\"passed\": true") != std::string::npos);
  CHECK(rb_check_report(b43.ptr, "bogus", &co, RB_FORMAT_TEXT, &s, &passed) == RB_ERR_INVALID_ARGUMENT);

  rb_refine_options ro;
  rb_refine_options_init(&ro);
  ro.max_depth = 4;
  ro.contraction = 1;
  CHECK(rb_refine_report(b43.ptr, &ro, RB_FORMAT_TEXT, &s) == RB_ERR_REGIME);
  REQUIRE(rb_refine_report(b73.ptr, &ro, RB_FORMAT_CSV, &s) == RB_OK);
  CHECK(take(s).rfind("depth,", 0) == 0);

  rb_dimension_options dopt;
  rb_dimension_options_init(&dopt);
  dopt.max_depth = 6;
  REQUIRE(rb_dimension_report(b73.ptr, &dopt, RB_FORMAT_JSON, &s) == RB_OK);
  CHECK(take(s).find("0.818067899101") != std::string::npos);
}

TEST_CASE("rendering") {
  BaseHandle b;
  REQUIRE(rb_base_parse("3/2", &b.ptr) == RB_OK);
  rb_render_options o;
  rb_render_options_init(&o);
  char* s = nullptr;
  REQUIRE(rb_render(b.ptr, RB_RENDER_FRACTAL, 6, &o, RB_FORMAT_SVG, &s) == RB_OK);
  const std::string svg = take(s);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("data-node=\"3\" data-word=\"210\"") != std::string::npos);
  REQUIRE(rb_render(b.ptr, RB_RENDER_TREE, 3, &o, RB_FORMAT_DOT, &s) == RB_OK);
  CHECK(take(s).find("n2 -> n4 [label=\"2\"]") != std::string::npos);
  REQUIRE(rb_render(b.ptr, RB_RENDER_TRANSDUCER, 2, &o, RB_FORMAT_DOT, &s) == RB_OK);
  CHECK(take(s).find("digraph") != std::string::npos);
  CHECK(rb_render(b.ptr, RB_RENDER_FRACTAL, 3, &o, RB_FORMAT_DOT, &s) == RB_ERR_INVALID_ARGUMENT);
  CHECK(rb_render(b.ptr, RB_RENDER_TRANSDUCER, 2, &o, RB_FORMAT_SVG, &s) == RB_ERR_INVALID_ARGUMENT);
  o.frontier_cap = 10;
  CHECK(rb_render(b.ptr, RB_RENDER_TREE, 20, &o, RB_FORMAT_DOT, &s) != RB_OK);
}
