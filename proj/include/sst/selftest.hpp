/*
Copyright 2026 The sstlab Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SST_SELFTEST_HPP
#define SST_SELFTEST_HPP

#include <string>
#include <vector>

namespace sst {

struct SelftestConfig {
  unsigned max_alphabet = 3;
  unsigned max_length = 4;
  unsigned max_k = 2;
  // Builds every table with the reversed tie-break; the canonical-order
  // suite must then report a counterexample whenever ties occur.
  bool inject_tie_break_fault = false;
};

struct SelftestResult {
  bool passed = true;
  std::vector<std::string> log;  // one line per suite
  std::string counterexample;    // first failure, empty when passed
};

inline constexpr double kSelftestMaxStrings = 1e6;

// Exhaustive checks over 2 <= A <= max_alphabet, 1 <= N <= max_length,
// 1 <= k <= max_k against brute-force enumeration of all A^(N+k) strings.
// Throws Error(bounds_exceeded) if max_alphabet^(max_length + max_k)
// exceeds kSelftestMaxStrings, Error(invalid_argument) for zero bounds or
// max_alphabet < 2.
SelftestResult run_selftest(const SelftestConfig& config);

}  // namespace sst

#endif  // SST_SELFTEST_HPP
