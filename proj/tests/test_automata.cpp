// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "oracles.hpp"
#include "ratbase/automata.hpp"

using namespace ratbase;

namespace {
const char* kBases[] = {"3/2", "4/3", "7/3", "5/2", "10/3"};
}

TEST_CASE("tau") {
  const Base b = make_base(3, 2);
  CHECK(tau(b, 0, 0) == NodeId(0));
  CHECK_FALSE(tau(b, 2, 1).has_value());
  CHECK(tau(b, 2, 0) == NodeId(3));
}

TEST_CASE("successors") {
  const Base b32 = make_base(3, 2);
  auto s1 = successors(b32, AutomatonKind::Tree, 1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].digit == 1);
  CHECK(s1[0].target == 2);

  auto s2 = successors(b32, AutomatonKind::Tree, 2);
  REQUIRE(s2.size() == 2);
  CHECK((s2[0].digit == 0 && s2[0].target == 3));
  CHECK((s2[1].digit == 2 && s2[1].target == 4));

  auto s0 = successors(make_base(7, 3), AutomatonKind::Span, 0);
  REQUIRE(s0.size() == 2);
  CHECK((s0[0].digit == 3 && s0[0].target == 1));
  CHECK((s0[1].digit == 6 && s0[1].target == 2));
}

TEST_CASE("successors agree with a scan over the alphabet, with floor(z) or ceil(z) children in T_z") {
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    const long fl = b.numerator_digit() / b.denominator_digit();
    for (long n = 0; n <= 300; ++n) {
      for (AutomatonKind kind : {AutomatonKind::Tree, AutomatonKind::Span}) {
        const DigitRange r = alphabet(b, kind);
        std::vector<std::pair<Digit, NodeId>> expected;
        for (Digit a = r.lo; a <= r.hi; ++a) {
          if (auto m = oracle::step(b, n, a)) expected.emplace_back(a, *m);
        }
        auto got = successors(b, kind, n);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          CHECK(got[i].digit == expected[i].first);
          CHECK(got[i].target == expected[i].second);
        }
        CHECK(!got.empty());
        if (kind == AutomatonKind::Tree) {
          CHECK((static_cast<long>(got.size()) == fl || static_cast<long>(got.size()) == fl + 1));
        }
      }
    }
  }
}

TEST_CASE("run") {
  const Base b = make_base(3, 2);
  CHECK(run(b, AutomatonKind::Tree, 0, DigitWord{2, 1, 0}) == NodeId(3));
  CHECK(run(b, AutomatonKind::Tree, 17, DigitWord{}) == NodeId(17));
  CHECK_FALSE(run(make_base(7, 3), AutomatonKind::Span, 0, DigitWord{1, 3}).has_value());
  CHECK_FALSE(run(b, AutomatonKind::Tree, 0, DigitWord{1}).has_value());
}

TEST_CASE("runs from the root evaluate their label") {
  for (const char* s : {"3/2", "4/3", "5/2"}) {
    const Base b = parse_base(s);
    for (std::size_t k = 0; k <= 8; ++k) {
      for (const auto& w : oracle::labels(b, 0, k, 0, b.numerator_digit() - 1)) {
        auto end = run(b, AutomatonKind::Tree, 0, DigitWord(w));
        REQUIRE(end.has_value());
        CHECK(BigRational(*end) == eval_value(b, DigitWord(w)));
      }
    }
  }
}

TEST_CASE("encode") {
  const Base b32 = make_base(3, 2);
  CHECK(encode(b32, 0).empty());
  CHECK(encode(b32, 4) == DigitWord{2, 1, 2});
  CHECK(encode(make_base(7, 3), 1) == DigitWord{3});
}

TEST_CASE("encode agrees with the breadth-first tree walk") {
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    const auto reps = oracle::representations(b, 2000);
    for (const auto& [n, w] : reps) {
      if (n > 2000) continue;
      CHECK(encode(b, n).digits == w);
      CHECK(eval_value(b, encode(b, n)) == BigRational(n));
    }
  }
}

TEST_CASE("predecessor and incoming_path") {
  const Base b32 = make_base(3, 2);
  CHECK(predecessor(b32, 3) == Predecessor{2, 0});
  CHECK(predecessor(b32, 0) == Predecessor{0, 0});
  CHECK(predecessor(make_base(7, 3), 2) == Predecessor{0, 6});
  CHECK(incoming_path(b32, 3, 2) == DigitWord{1, 0});
  CHECK(incoming_path(b32, 5, 0).empty());
  CHECK(incoming_path(b32, 0, 3) == DigitWord{0, 0, 0});
}

TEST_CASE("predecessor inverts every successor step") {
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    for (long n = 0; n <= 500; ++n) {
      for (const Transition& t : successors(b, AutomatonKind::Tree, n)) {
        CHECK(predecessor(b, t.target) == Predecessor{n, t.digit});
      }
    }
  }
}

TEST_CASE("find_min_node_with_path") {
  const Base b = make_base(3, 2);
  CHECK(find_min_node_with_path(b, DigitWord{1}) == 1);
  CHECK(find_min_node_with_path(b, DigitWord{}) == 0);
  CHECK(find_min_node_with_path(b, DigitWord{1, 1}) == oracle::min_start(b, {1, 1}));
  CHECK(find_min_node_with_path(b, DigitWord{1, 1}) == 3);
  CHECK_THROWS_AS(find_min_node_with_path(b, DigitWord{3}), Error);
}

TEST_CASE("find_min_node_with_path agrees with a linear scan") {
  std::mt19937_64 rng(17);
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    for (int t = 0; t < 150; ++t) {
      const auto w = oracle::random_word(rng, rng() % 6, 0, b.numerator_digit() - 1);
      CHECK(find_min_node_with_path(b, DigitWord(w)) == oracle::min_start(b, w));
    }
  }
}

TEST_CASE("count_states_at_depth") {
  const Base b32 = make_base(3, 2), b73 = make_base(7, 3);
  CHECK(count_states_at_depth(b32, AutomatonKind::Tree, 0) == 1);
  CHECK(count_states_at_depth(b73, AutomatonKind::Span, 0) == 1);
  CHECK(count_states_at_depth(b32, AutomatonKind::Tree, 1) == 2);
  // 0 -3-> 1 -2-> 3, 1 -5-> 4, 0 -6-> 2 -4-> 6
  CHECK(count_states_at_depth(b73, AutomatonKind::Span, 2) == oracle::reached(b73, 2, 2, 6).size());
  CHECK(count_states_at_depth(b73, AutomatonKind::Span, 2) == 3);
}

TEST_CASE("frontier enumeration agrees with the set oracle") {
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    for (std::size_t j = 0; j <= 10; ++j) {
      for (AutomatonKind kind : {AutomatonKind::Tree, AutomatonKind::Span}) {
        const DigitRange r = alphabet(b, kind);
        const auto expected = oracle::reached(b, j, r.lo, r.hi);
        const auto got = states_at_depth(b, kind, j);
        CHECK(std::vector<NodeId>(expected.begin(), expected.end()) == got);
      }
      // label count equals state count where incoming transitions are unique
      const auto labs = labels_at_depth(b, AutomatonKind::Tree, j);
      CHECK(labs.size() == count_states_at_depth(b, AutomatonKind::Tree, j));
      for (std::size_t i = 1; i < labs.size(); ++i) CHECK(lex_compare(labs[i - 1].label, labs[i].label) < 0);
    }
  }
}

TEST_CASE("frontier cap is reported") {
  const Base b = make_base(10, 3);
  try {
    states_at_depth(b, AutomatonKind::Tree, 12, 100);
    FAIL("expected a frontier cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FrontierCapExceeded);
  }
  CHECK_THROWS_AS(labels_at_depth(b, AutomatonKind::Tree, 12, 100), Error);
}
