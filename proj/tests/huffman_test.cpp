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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "sst/entropy.hpp"
#include "sst/error.hpp"
#include "sst/huffman.hpp"

namespace {

// Optimal code length is the sum of all merge weights, whichever way ties
// are broken.
std::uint64_t merge_sum(const std::vector<std::uint64_t>& counts) {
  std::multiset<std::uint64_t> w;
  for (auto c : counts)
    if (c > 0) w.insert(c);
  std::uint64_t total = 0;
  while (w.size() > 1) {
    const auto a = *w.begin();
    w.erase(w.begin());
    const auto b = *w.begin();
    w.erase(w.begin());
    total += a + b;
    w.insert(a + b);
  }
  return total;
}

void check_code(const std::vector<std::uint64_t>& counts) {
  const auto code = sst::build_code(counts);
  std::size_t occurring = 0;
  for (auto c : counts) occurring += c > 0;
  ASSERT_EQ(code.distinct_symbols(), occurring);

  const auto bits = sst::encoded_length(counts, code);
  ASSERT_EQ(bits, merge_sum(counts));

  if (occurring > 1) {
    double kraft = 0.0;
    for (const auto& w : code.entries()) {
      ASSERT_EQ(w.bits.size(), w.length);
      ASSERT_GE(w.length, 1u);
      kraft += std::ldexp(1.0, -static_cast<int>(w.length));
    }
    ASSERT_DOUBLE_EQ(kraft, 1.0);
    for (const auto& a : code.entries())
      for (const auto& b : code.entries())
        if (a.symbol != b.symbol)
          ASSERT_FALSE(b.bits.starts_with(a.bits))
              << a.bits << " prefixes " << b.bits;
  }

  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  const double entropy_bits = sst::nh0(counts);
  ASSERT_GE(static_cast<double>(bits), entropy_bits - 1e-9);
  ASSERT_LT(static_cast<double>(bits), entropy_bits + static_cast<double>(n));
}

}  // namespace

TEST(BuildCode, TwoOneOne) {
  const std::vector<std::uint64_t> counts{2, 1, 1};
  const auto code = sst::build_code(counts);
  ASSERT_EQ(code.distinct_symbols(), 3u);
  EXPECT_EQ(code.find(0)->bits, "0");
  EXPECT_EQ(code.find(1)->bits, "10");
  EXPECT_EQ(code.find(2)->bits, "11");
  EXPECT_EQ(sst::encoded_length(counts, code), 6u);
}

TEST(BuildCode, TwoSymbols) {
  const std::vector<std::uint64_t> counts{1, 1};
  const auto code = sst::build_code(counts);
  EXPECT_EQ(code.find(0)->bits, "0");
  EXPECT_EQ(code.find(1)->bits, "1");
  EXPECT_EQ(sst::encoded_length(counts, code), 2u);
}

TEST(BuildCode, SingleSymbolCostsNothing) {
  const std::vector<std::uint64_t> counts{5, 0, 0};
  const auto code = sst::build_code(counts);
  ASSERT_EQ(code.distinct_symbols(), 1u);
  EXPECT_EQ(code.find(0)->length, 0u);
  EXPECT_EQ(code.find(0)->bits, "");
  EXPECT_EQ(code.find(1), nullptr);
  EXPECT_EQ(sst::encoded_length(counts, code), 0u);
}

TEST(BuildCode, SkewedThree) {
  const std::vector<std::uint64_t> counts{30, 20, 10};
  const auto code = sst::build_code(counts);
  EXPECT_EQ(code.find(0)->length, 1u);
  EXPECT_EQ(code.find(1)->length, 2u);
  EXPECT_EQ(code.find(2)->length, 2u);
  EXPECT_EQ(sst::encoded_length(counts, code), 90u);
}

TEST(BuildCode, CanonicalAssignment) {
  // Lengths 2,2,2,3,3: codewords in (length, symbol) order.
  const std::vector<std::uint64_t> counts{1, 4, 1, 4, 4};
  const auto code = sst::build_code(counts);
  EXPECT_EQ(code.find(1)->bits, "00");
  EXPECT_EQ(code.find(3)->bits, "01");
  EXPECT_EQ(code.find(4)->bits, "10");
  EXPECT_EQ(code.find(0)->bits, "110");
  EXPECT_EQ(code.find(2)->bits, "111");
}

TEST(BuildCode, Errors) {
  const std::vector<std::uint64_t> zeros{0, 0, 0};
  EXPECT_THROW(sst::build_code(zeros), sst::Error);
  EXPECT_THROW(sst::build_code(std::vector<std::uint64_t>{}), sst::Error);

  const std::vector<std::uint64_t> some{3, 0, 1};
  const auto code = sst::build_code(some);
  const std::vector<std::uint64_t> more{3, 2, 1};
  try {
    sst::encoded_length(more, code);
    FAIL() << "expected an error";
  } catch (const sst::Error& e) {
    EXPECT_EQ(e.code(), sst::ErrorCode::code_mismatch);
  }
}

TEST(BuildCode, RandomCountVectors) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned a = 2 + static_cast<unsigned>(gen() % 49);
    std::vector<std::uint64_t> counts(a, 0);
    const unsigned n = 1 + static_cast<unsigned>(gen() % 200);
    for (unsigned i = 0; i < n; ++i) ++counts[gen() % a];
    SCOPED_TRACE(trial);
    check_code(counts);
  }
}

TEST(BuildCode, FibonacciWeightsGiveDeepTree) {
  std::vector<std::uint64_t> counts{1, 1};
  while (counts.size() < 30) counts.push_back(counts[counts.size() - 1] +
                                              counts[counts.size() - 2]);
  check_code(counts);
  const auto code = sst::build_code(counts);
  unsigned longest = 0;
  for (const auto& w : code.entries()) longest = std::max(longest, w.length);
  EXPECT_EQ(longest, 29u);
}

TEST(CodebookCost, Formula) {
  EXPECT_EQ(sst::codebook_cost(2), 2u);
  EXPECT_EQ(sst::codebook_cost(3), 6u);
  EXPECT_EQ(sst::codebook_cost(30), 150u);
  EXPECT_EQ(sst::codebook_cost(32), 160u);
  EXPECT_EQ(sst::codebook_cost(33), 198u);
}
