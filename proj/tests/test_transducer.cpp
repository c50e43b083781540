// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "oracles.hpp"
#include "ratbase/extremal.hpp"
#include "ratbase/transducer.hpp"

using namespace ratbase;

namespace {
const char* kBases[] = {"3/2", "4/3", "7/3", "5/2", "10/3"};

std::vector<PairLetter> pairs(std::initializer_list<std::pair<Digit, Digit>> l) {
  std::vector<PairLetter> out;
  for (auto [x, y] : l) out.push_back({x, y});
  return out;
}
}  // namespace

TEST_CASE("psi tables") {
  const Base b32 = make_base(3, 2), b43 = make_base(4, 3), b73 = make_base(7, 3);
  CHECK(psi(b32, 0) == pairs({{1, 0}}));
  CHECK(psi(b32, 1) == pairs({{1, 1}, {0, 0}}));
  CHECK(psi(b32, 2) == pairs({{0, 1}}));
  CHECK(psi(b43, -1) == pairs({{2, 0}}));
  CHECK(psi(b43, 0) == pairs({{2, 1}, {1, 0}}));
  CHECK(psi(b43, 1) == pairs({{2, 2}, {1, 1}, {0, 0}}));
  CHECK(psi(b43, 2) == pairs({{1, 2}, {0, 1}}));
  CHECK(psi(b43, 3) == pairs({{0, 2}}));
  CHECK(psi(b73, 6) == pairs({{0, 2}}));
  CHECK_THROWS_AS(psi(b73, 1), Error);
}

TEST_CASE("psi partitions B_q x B_q") {
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    const Digit q = b.denominator_digit();
    std::set<std::pair<Digit, Digit>> seen;
    const DigitRange d = b.difference_digits();
    for (Digit c = d.lo; c <= d.hi; ++c) {
      for (const PairLetter& pl : psi(b, c)) {
        CHECK(pl.output - pl.input == c - b.middle_digit());
        CHECK(seen.insert({pl.input, pl.output}).second);
      }
    }
    CHECK(static_cast<Digit>(seen.size()) == q * q);
  }
}

TEST_CASE("transducer_step") {
  const Base b = make_base(3, 2);
  CHECK_FALSE(transducer_step(b, 0, {0, 0}).has_value());
  CHECK(transducer_step(b, 1, {0, 0}) == NodeId(2));
  CHECK(transducer_step(b, 0, {1, 0}) == NodeId(0));
  CHECK_THROWS_AS(transducer_step(b, 0, {2, 0}), Error);
}

TEST_CASE("transduce on worked examples") {
  const Base b = make_base(3, 2);
  CHECK(transduce(b, 0, bottom_prefix(b, 1, 7)) == bottom_prefix(b, 2, 7));
  CHECK(transduce(b, 0, OmegaPrefix{1, 0, 1, 1, 0, 0, 0}) == OmegaPrefix{0, 1, 1, 0, 0, 0, 1});
  CHECK(transduce(b, 0, bottom_prefix(b, 2, 5)) == OmegaPrefix{1, 1, 0, 0, 0});
  CHECK(transduce(b, 2, OmegaPrefix{1, 0, 1, 1, 0}) == OmegaPrefix{0, 0, 1, 0, 1});
  CHECK(transduce_inverse(b, 0, bottom_prefix(b, 2, 7)) == bottom_prefix(b, 1, 7));
  CHECK(transduce(b, 7, OmegaPrefix{}).empty());
  CHECK_THROWS_AS(transduce(b, 0, OmegaPrefix{2}), Error);
}

TEST_CASE("closed-form steps agree with the pair-label search") {
  std::mt19937_64 rng(29);
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    for (int t = 0; t < 300; ++t) {
      const NodeId i = static_cast<long>(rng() % 60);
      const auto w = oracle::random_word(rng, rng() % 40, 0, b.denominator_digit() - 1);
      const auto expected = oracle::transduce_search(b, i, w);
      REQUIRE(expected.has_value());
      CHECK(transduce(b, i, OmegaPrefix(w)).digits == *expected);
    }
  }
}

TEST_CASE("the inverse of 0^k is the only preimage") {
  for (const char* s : {"3/2", "5/2", "7/3"}) {
    const Base b = parse_base(s);
    const std::size_t kmax = b.denominator_digit() == 2 ? 12 : 7;
    for (std::size_t k = 0; k <= kmax; ++k) {
      const OmegaPrefix zeros(std::vector<Digit>(k, 0));
      std::size_t hits = 0;
      OmegaPrefix found;
      for (const auto& w : oracle::all_words(k, 0, b.denominator_digit() - 1)) {
        if (transduce(b, 0, OmegaPrefix(w)) == zeros) {
          ++hits;
          found = OmegaPrefix(w);
        }
      }
      CHECK(hits == 1);
      CHECK(transduce_inverse(b, 0, zeros) == found);
    }
  }
}

TEST_CASE("inverse round trips on random words") {
  std::mt19937_64 rng(31);
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    for (int t = 0; t < 200; ++t) {
      const NodeId i = static_cast<long>(rng() % 100);
      const OmegaPrefix w(oracle::random_word(rng, 32, 0, b.denominator_digit() - 1));
      CHECK(transduce_inverse(b, i, transduce(b, i, w)) == w);
      CHECK(transduce(b, i, transduce_inverse(b, i, w)) == w);
    }
  }
}

TEST_CASE("the transducer maps bottom(n) to bottom(n + i + 1)") {
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    for (long n = 0; n <= 300; ++n) {
      CHECK(transduce(b, 0, bottom_prefix(b, n, 64)) == bottom_prefix(b, n + 1, 64));
    }
    for (long i = 0; i <= 20; ++i) {
      for (long n = 0; n <= 40; ++n) {
        CHECK(transduce(b, i, bottom_prefix(b, n, 32)) == bottom_prefix(b, n + i + 1, 32));
      }
    }
  }
}

TEST_CASE("local bijectivity") {
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    const Digit q = b.denominator_digit();
    for (long n = 0; n <= 300; ++n) {
      for (Digit x = 0; x < q; ++x) {
        int as_input = 0, as_output = 0;
        for (Digit y = 0; y < q; ++y) {
          as_input += transducer_step(b, n, {x, y}).has_value();
          as_output += transducer_step(b, n, {y, x}).has_value();
        }
        CHECK(as_input == 1);
        CHECK(as_output == 1);
      }
    }
  }
}

TEST_CASE("prefixes map to prefixes") {
  std::mt19937_64 rng(37);
  for (const char* s : kBases) {
    const Base b = parse_base(s);
    for (int t = 0; t < 100; ++t) {
      const NodeId i = static_cast<long>(rng() % 100);
      const auto w = oracle::random_word(rng, 30, 0, b.denominator_digit() - 1);
      const auto full = transduce(b, i, OmegaPrefix(w)).digits;
      const std::size_t cut = rng() % 31;
      const auto part = transduce(b, i, OmegaPrefix(std::vector<Digit>(w.begin(), w.begin() + cut))).digits;
      CHECK(part == std::vector<Digit>(full.begin(), full.begin() + cut));
    }
  }
}
