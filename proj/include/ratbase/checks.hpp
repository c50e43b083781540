// SPDX-License-Identifier: Apache-2.0
//
// Named invariant suites, run by `ratbase check`. Each suite exercises the
// structural properties of one module over a bounded range of states.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ratbase/span_analysis.hpp"

namespace ratbase {

struct CheckParams {
  std::uint64_t max_node = 200;
  std::size_t prefix_len = 64;
  std::size_t tail_depth = kDefaultTailDepth;
  std::size_t frontier_cap = kDefaultFrontierCap;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First counterexample, or a note when the check does not apply.
  std::string detail;
  bool skipped = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// numeration, automata, extremal, transducer, span
const std::vector<std::string>& suite_names();

/// Throws Error(InvalidArgument) for an unknown suite name.
SuiteReport run_suite(const Base& base, std::string_view suite, const CheckParams& params);
std::vector<SuiteReport> run_all_suites(const Base& base, const CheckParams& params);

}  // namespace ratbase
