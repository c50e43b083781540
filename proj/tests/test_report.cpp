// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <regex>

#include <json.hpp>

#include "oracles.hpp"
#include "ratbase/render.hpp"
#include "ratbase/report.hpp"

using namespace ratbase;
using nlohmann::json;

TEST_CASE("convert reports") {
  const Base b = make_base(3, 2);
  CHECK(convert_integer_report(b, 4, Format::Text) == "212\n");
  CHECK(convert_integer_report(b, 0, Format::Text) == "ε\n");
  CHECK(convert_word_report(b, DigitWord{2, 1, 2}, Format::Text) == "4\n");
  CHECK(convert_word_report(b, DigitWord{1}, Format::Text) == "1/2\n");
  CHECK_THROWS_AS(convert_word_report(b, DigitWord{3}, Format::Text), Error);
  CHECK_THROWS_AS(convert_integer_report(b, 4, Format::Svg), Error);

  const json j = json::parse(convert_integer_report(b, 4, Format::Json));
  CHECK(j["n"] == "4");
  CHECK(j["word"] == json::array({2, 1, 2}));
  const json w = json::parse(convert_word_report(b, DigitWord{2, 1, 2}, Format::Json));
  CHECK(w["value"] == "4");
  CHECK(w["is_representation"] == true);
  CHECK(json::parse(convert_word_report(b, DigitWord{0, 2, 1, 2}, Format::Json))["is_representation"] == false);
}

TEST_CASE("word reports") {
  const Base b = make_base(3, 2);
  CHECK(word_report(b, 1, WordKind::Bottom, 7, Format::Text) == "bottom(1) = 1 0 1 1 0 0 0\n");
  CHECK(word_report(b, 4, WordKind::Top, 5, Format::Text) == "top(4) = 2 1 1 1 2\n");
  CHECK(word_report(b, 4, WordKind::Span, 5, Format::Text) == "span(4) = 2 1 0 1 1\n");
  CHECK(word_report(b, 0, WordKind::Bottom, 4, Format::Text) == "bottom(0) = 0 0 0 0\n");
  CHECK(parse_word_kind("maxword") == WordKind::Top);
  CHECK_THROWS_AS(parse_word_kind("middle"), Error);

  for (long n = 0; n <= 30; ++n) {
    const json j = json::parse(node_record_json(b, n, 16));
    CHECK(j["n"] == std::to_string(n));
    CHECK(j["depth"] == "16");
    CHECK(j["bottom_prefix"].get<std::vector<Digit>>() == bottom_prefix(b, n, 16).digits);
    CHECK(j["top_prefix"].get<std::vector<Digit>>() == top_prefix(b, n, 16).digits);
    CHECK(j["span_word_prefix"].get<std::vector<Digit>>() == span_word_prefix(b, n, 16).digits);
  }
}

TEST_CASE("transduce and verify reports") {
  const Base b = make_base(3, 2);
  CHECK(transduce_report(b, 0, OmegaPrefix{1, 0, 1, 1, 0, 0, 0}, false, Format::Text) ==
        "input  = 1 0 1 1 0 0 0\noutput = 0 1 1 0 0 0 1\n");
  const json j = json::parse(transduce_report(b, 0, OmegaPrefix{0, 1, 1, 0, 0, 0, 1}, true, Format::Json));
  CHECK(j["output"] == json::array({1, 0, 1, 1, 0, 0, 0}));

  const VerifyOutcome v = verify_transducer(b, 0, 0, 1000, 32, Format::Json);
  CHECK(v.passed);
  const json vj = json::parse(v.text);
  CHECK(vj["cases"] == "1001");
  CHECK(vj["first_failure"].is_null());
  CHECK(verify_transducer(make_base(7, 3), 5, 0, 100, 32, Format::Text).text.rfind("PASS", 0) == 0);
}

TEST_CASE("psi table text layout") {
  CHECK(psi_table(make_base(3, 2), Format::Text) ==
        "base 3/2, middle digit 1\n"
        "mu(0) = -1    psi(0) = {(1,0)}\n"
        "mu(1) = 0     psi(1) = {(1,1),(0,0)}\n"
        "mu(2) = 1     psi(2) = {(0,1)}\n");
  const std::string t43 = psi_table(make_base(4, 3), Format::Text);
  CHECK(t43.find("psi(-1) = {(2,0)}") != std::string::npos);
  CHECK(t43.find("psi(1) = {(2,2),(1,1),(0,0)}") != std::string::npos);
  const json j = json::parse(psi_table(make_base(7, 3), Format::Json));
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][4]["digit"] == 6);
  CHECK(j["rows"][4]["pairs"] == json::array({json::array({0, 2})}));
  CHECK(j["rows"][0]["mu"] == -2);
}

TEST_CASE("refine and dim reports") {
  const Base b = make_base(7, 3);
  RefineOptions o;
  o.max_depth = 6;
  o.contraction = true;
  const json j = json::parse(refine_report(b, o, Format::Json));
  CHECK(j["contraction"]["steps"] == "3");
  REQUIRE(j["rows"].size() == 7);
  BigRational prev = parse_rational(j["rows"][0]["outer_measure"].get<std::string>());
  for (std::size_t i = 1; i < 7; ++i) {
    const BigRational m = parse_rational(j["rows"][i]["outer_measure"].get<std::string>());
    CHECK(m < prev);
    prev = m;
  }
  const std::string csv = refine_report(b, o, Format::Csv);
  CHECK(csv.rfind("depth,interval_count,outer_measure", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);

  RefineOptions small = o;
  try {
    refine_report(make_base(4, 3), small, Format::Text);
    FAIL("expected a regime error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Regime);
  }
  small.contraction = false;
  CHECK_NOTHROW(refine_report(make_base(4, 3), small, Format::Text));

  RefineOptions iv;
  iv.max_depth = 2;
  iv.intervals = true;
  const json ij = json::parse(refine_report(b, iv, Format::Json));
  REQUIRE(ij["levels"].size() == 3);
  CHECK(ij["levels"][1]["intervals"].size() == 2);
  CHECK(ij["levels"][2]["intervals"].size() == 3);

  DimensionOptions d;
  d.max_depth = 10;
  const json dj = json::parse(dimension_report(b, d, Format::Json));
  CHECK(dj["bounds"]["ln2_over_lnz"].get<std::string>().rfind("0.818067899101", 0) == 0);
  CHECK(dj["bounds"]["conjecture"].is_string());
  CHECK(dj["box_counting"].size() == 11);
  CHECK(dj["box_counting"][2]["count"] == "3");
}

TEST_CASE("check reports") {
  CheckParams p;
  p.max_node = 40;
  const CheckOutcome all = check_report(make_base(4, 3), "all", p, Format::Json);
  CHECK(all.passed);
  const json j = json::parse(all.text);
  std::vector<std::string> names;
  for (const auto& s : j["suites"]) names.push_back(s["suite"]);
  CHECK(names == suite_names());
  CHECK_THROWS_AS(check_report(make_base(4, 3), "nonsense", p, Format::Text), Error);
  CHECK(check_report(make_base(7, 3), "transducer", p, Format::Text).passed);
}

TEST_CASE("dot output") {
  const Base b = make_base(3, 2);
  const std::string dot = automaton_dot(b, AutomatonKind::Tree, 3);
  CHECK(dot.find("n2 -> n3 [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("n2 -> n4 [label=\"2\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n0 [label=\"0\"]") != std::string::npos);
  CHECK(dot == automaton_dot(b, AutomatonKind::Tree, 3));
  const std::string s73 = automaton_dot(make_base(7, 3), AutomatonKind::Span, 2);
  CHECK(s73.find("n0 -> n1 [label=\"3\"]") != std::string::npos);
  CHECK_FALSE(std::regex_search(s73, std::regex("-> n[0-9]+ \\[label=\"[01]\"\\]")));
  const std::string td = transducer_dot(b, 2);
  CHECK(td.find("[label=\"(1,1)\"]") != std::string::npos);
  CHECK_THROWS_AS(automaton_dot(b, AutomatonKind::Tree, kMaxRenderDepth + 1), Error);
  CHECK_THROWS_AS(automaton_dot(b, AutomatonKind::Tree, 20, 100), Error);
}

TEST_CASE("fractal svg") {
  const Base b = make_base(3, 2);
  const SvgLayout layout;
  const std::string svg = fractal_svg(b, 6, layout, false);
  // node 3 is reached by 210 and drawn at x = 3 * 80, y = 400 * 8/9
  const std::regex node3("data-node=\"3\" data-word=\"210\" data-rho=\"0\\.888888888889\"><circle cx=\"240\\.0+\" cy=\"355\\.555555555556\"");
  CHECK(std::regex_search(svg, node3));

  const std::string root = fractal_svg(b, 0, layout, false);
  CHECK(std::regex_search(root, std::regex("data-node=\"0\" data-word=\"\" data-rho=\"0\\.0+\"><circle cx=\"0\\.0+\" cy=\"0\\.0+\"")));
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = root.find("class=\"node\"", pos)) != std::string::npos; ++pos) ++count;
  CHECK(count == 1);

  const std::string overlay = fractal_svg(make_base(7, 3), 3, layout, true);
  CHECK(overlay.find("data-digit=\"1\" stroke-dasharray=\"4 3\" data-deleted=\"true\"") != std::string::npos);
  CHECK(overlay.find("data-digit=\"3\" stroke-dasharray") == std::string::npos);
  CHECK_THROWS_AS(fractal_svg(b, kMaxRenderDepth + 1, layout, false), Error);
}
