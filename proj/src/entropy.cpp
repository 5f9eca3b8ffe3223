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

#include "sst/entropy.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "sst/error.hpp"

namespace sst {

SourceDistribution::SourceDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty())
    throw Error(ErrorCode::invalid_argument, "empty distribution");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0))
      throw Error(ErrorCode::invalid_argument,
                  fmt::format("negative probability {}", p));
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("probabilities sum to {:.17g}, not 1", sum));
}

CountVector tally(const Sequence& s) {
  CountVector cv;
  cv.counts.assign(s.alphabet_size(), 0);
  for (Symbol a : s.symbols()) ++cv.counts[a];
  cv.total = s.length();
  return cv;
}

double nh0(std::span<const std::uint64_t> counts) {
  const std::uint64_t n = std::accumulate(counts.begin(), counts.end(),
                                          std::uint64_t{0});
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty sequence");
  // n * H0 = sum_i n_i log2(n / n_i)
  const double dn = static_cast<double>(n);
  double bits = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double dc = static_cast<double>(c);
    bits += dc * std::log2(dn / dc);
  }
  return bits;
}

double h0(std::span<const std::uint64_t> counts) {
  const std::uint64_t n = std::accumulate(counts.begin(), counts.end(),
                                          std::uint64_t{0});
  return nh0(counts) / static_cast<double>(n == 0 ? 1 : n);
}

double h0(const Sequence& s) {
  if (s.empty()) throw Error(ErrorCode::invalid_argument, "empty sequence");
  return h0(tally(s).counts);
}

double nh0(const Sequence& s) {
  if (s.empty()) throw Error(ErrorCode::invalid_argument, "empty sequence");
  return nh0(tally(s).counts);
}

double self_information(const Sequence& s, const SourceDistribution& q) {
  if (q.alphabet_size() < s.alphabet_size())
    throw Error(ErrorCode::invalid_argument,
                "distribution smaller than the sequence alphabet");
  const auto probs = q.probs();
  double bits = 0.0;
  for (std::size_t i = 0; i < s.length(); ++i) {
    const double p = probs[s[i]];
    if (p <= 0.0)
      throw Error(ErrorCode::impossible_emission,
                  fmt::format("impossible emission: symbol {} at position {} "
                              "has probability 0",
                              s[i], i));
    bits -= std::log2(p);
  }
  return bits;
}

SourceDistribution empirical_distribution(const Sequence& s) {
  if (s.empty()) throw Error(ErrorCode::invalid_argument, "empty sequence");
  const CountVector cv = tally(s);
  std::vector<double> probs(cv.counts.size());
  for (std::size_t a = 0; a < probs.size(); ++a)
    probs[a] = static_cast<double>(cv.counts[a]) /
               static_cast<double>(cv.total);
  return SourceDistribution(std::move(probs));
}

BoundCheck check_self_information_bound(const Sequence& s,
                                        const SourceDistribution& q) {
  BoundCheck r;
  r.self_information = self_information(s, q);
  r.nh0 = nh0(s);
  r.holds = r.self_information >= r.nh0 - 1e-9;
  return r;
}

}  // namespace sst
