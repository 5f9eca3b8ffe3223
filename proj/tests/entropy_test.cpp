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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sst/entropy.hpp"
#include "sst/error.hpp"

using sst::Sequence;
using sst::SourceDistribution;

namespace {

Sequence seq(std::vector<sst::Symbol> v, unsigned a) {
  return Sequence(std::move(v), a);
}

Sequence random_sequence(std::mt19937_64& gen, unsigned a, std::size_t n) {
  std::uniform_int_distribution<sst::Symbol> d(0, a - 1);
  std::vector<sst::Symbol> v(n);
  for (auto& x : v) x = d(gen);
  return Sequence(std::move(v), a);
}

SourceDistribution random_positive_distribution(std::mt19937_64& gen,
                                                unsigned a) {
  std::uniform_real_distribution<double> d(0.01, 1.0);
  std::vector<double> p(a);
  for (auto& x : p) x = d(gen);
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= sum;
  // Push the rounding residue onto the largest entry.
  const double residue =
      1.0 - std::accumulate(p.begin(), p.end(), 0.0);
  *std::max_element(p.begin(), p.end()) += residue;
  return SourceDistribution(std::move(p));
}

constexpr double kTol = 1e-9;

}  // namespace

TEST(Sequence, RejectsSymbolsOutsideAlphabet) {
  EXPECT_THROW(seq({0, 3}, 3), sst::Error);
  EXPECT_THROW(seq({0}, 1), sst::Error);
}

TEST(Tally, Examples) {
  EXPECT_EQ(sst::tally(seq({0, 0, 1}, 2)).counts,
            (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(sst::tally(seq({0, 1, 2}, 3)).counts,
            (std::vector<std::uint64_t>{1, 1, 1}));
  const auto cv = sst::tally(seq({2, 2, 2, 2}, 3));
  EXPECT_EQ(cv.counts, (std::vector<std::uint64_t>{0, 0, 4}));
  EXPECT_EQ(cv.total, 4u);
}

TEST(H0, Examples) {
  EXPECT_EQ(sst::h0(seq({0, 0, 0, 0}, 2)), 0.0);
  EXPECT_NEAR(sst::h0(seq({0, 1, 2}, 3)), std::log2(3.0), kTol);
  EXPECT_NEAR(sst::h0(seq({0, 0, 1}, 2)), 0.9182958340544896, kTol);
}

TEST(H0, EmptySequenceIsAnError) {
  try {
    sst::h0(seq({}, 2));
    FAIL() << "expected an error";
  } catch (const sst::Error& e) {
    EXPECT_EQ(e.code(), sst::ErrorCode::invalid_argument);
    EXPECT_STREQ(e.what(), "empty sequence");
  }
  EXPECT_THROW(sst::nh0(seq({}, 2)), sst::Error);
}

TEST(Nh0, Examples) {
  EXPECT_NEAR(sst::nh0(seq({0, 0, 1}, 2)), 2.7548875021634687, kTol);
  EXPECT_EQ(sst::nh0(seq({0, 0, 0}, 2)), 0.0);
}

TEST(SelfInformation, Examples) {
  EXPECT_NEAR(sst::self_information(seq({0, 1}, 2),
                                    SourceDistribution({0.5, 0.5})),
              2.0, kTol);
  EXPECT_NEAR(sst::self_information(seq({0, 0, 0}, 2),
                                    SourceDistribution({0.25, 0.75})),
              6.0, kTol);
  try {
    sst::self_information(seq({0, 1}, 2), SourceDistribution({1.0, 0.0}));
    FAIL() << "expected an error";
  } catch (const sst::Error& e) {
    EXPECT_EQ(e.code(), sst::ErrorCode::impossible_emission);
  }
}

TEST(SourceDistribution, Validation) {
  EXPECT_THROW(SourceDistribution({0.5, 0.6}), sst::Error);
  EXPECT_THROW(SourceDistribution({1.5, -0.5}), sst::Error);
  EXPECT_THROW(SourceDistribution({}), sst::Error);
  EXPECT_NO_THROW(SourceDistribution({1.0, 0.0}));
}

TEST(BoundCheck, Examples) {
  auto b = sst::check_self_information_bound(seq({0, 1}, 2),
                                             SourceDistribution({0.5, 0.5}));
  EXPECT_NEAR(b.self_information, 2.0, kTol);
  EXPECT_NEAR(b.nh0, 2.0, kTol);
  EXPECT_TRUE(b.holds);

  b = sst::check_self_information_bound(
      seq({0, 0, 1}, 2), SourceDistribution({2.0 / 3.0, 1.0 / 3.0}));
  EXPECT_NEAR(b.self_information, 2.7548875021634687, kTol);
  EXPECT_NEAR(b.nh0, 2.7548875021634687, kTol);
  EXPECT_TRUE(b.holds);

  b = sst::check_self_information_bound(seq({0, 0, 1}, 2),
                                        SourceDistribution({0.5, 0.5}));
  EXPECT_NEAR(b.self_information, 3.0, kTol);
  EXPECT_NEAR(b.nh0, 2.7548875021634687, kTol);
  EXPECT_TRUE(b.holds);
}

TEST(H0Property, RangeOverAllShortStrings) {
  for (unsigned a = 2; a <= 4; ++a) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<sst::Symbol> s(n, 0);
      while (true) {
        const double h = sst::h0(Sequence(s, a));
        ASSERT_GE(h, 0.0);
        ASSERT_LE(h, std::log2(static_cast<double>(a)) + kTol);
        std::size_t p = n;
        while (p > 0 && ++s[p - 1] == a) s[--p] = 0;
        if (p == 0) break;
      }
    }
  }
}

TEST(H0Property, InvariantUnderPermutationAndRelabeling) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned a = 2 + gen() % 10;
    const Sequence s = random_sequence(gen, a, 1 + gen() % 80);
    const double h = sst::h0(s);
    ASSERT_LE(h, std::log2(static_cast<double>(a)) + kTol);

    std::vector<sst::Symbol> shuffled(s.symbols().begin(), s.symbols().end());
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_NEAR(sst::h0(Sequence(shuffled, a)), h, kTol);

    std::vector<sst::Symbol> relabel(a);
    std::iota(relabel.begin(), relabel.end(), 0u);
    std::shuffle(relabel.begin(), relabel.end(), gen);
    std::vector<sst::Symbol> renamed;
    for (auto x : s.symbols()) renamed.push_back(relabel[x]);
    EXPECT_NEAR(sst::h0(Sequence(renamed, a)), h, kTol);
  }
}

TEST(BoundProperty, HoldsForRandomPositiveSources) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned a = 2 + gen() % 7;
    const Sequence s = random_sequence(gen, a, 1 + gen() % 64);
    const auto b =
        sst::check_self_information_bound(s, random_positive_distribution(gen, a));
    ASSERT_TRUE(b.holds) << b.self_information << " < " << b.nh0;
  }
}

TEST(BoundProperty, EqualityAtEmpiricalDistribution) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned a = 2 + gen() % 7;
    const Sequence s = random_sequence(gen, a, 1 + gen() % 64);
    EXPECT_NEAR(sst::self_information(s, sst::empirical_distribution(s)),
                sst::nh0(s), kTol);
  }
}
