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

#ifndef SST_ENTROPY_HPP
#define SST_ENTROPY_HPP

#include <span>
#include <vector>

#include "sst/sequence.hpp"

namespace sst {

// Emission probabilities of a memoryless (order-0) source.
class SourceDistribution {
 public:
  // Throws Error(invalid_argument) unless every probability is >= 0 and
  // the sum is within 1e-12 of 1.
  explicit SourceDistribution(std::vector<double> probs);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t alphabet_size() const noexcept { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

CountVector tally(const Sequence& s);

/// Zero-order empirical entropy in bits per symbol. Symbols with a zero
/// count contribute nothing. Throws Error(invalid_argument) on an empty
/// sequence.
double h0(const Sequence& s);
double h0(std::span<const std::uint64_t> counts);

/// Length times h0, in bits.
double nh0(const Sequence& s);
double nh0(std::span<const std::uint64_t> counts);

/// Total self-information sum_i log2(1 / q[s_i]) of `s` emitted by the
/// memoryless source `q`. Throws Error(impossible_emission) if some symbol
/// of `s` has probability zero.
double self_information(const Sequence& s, const SourceDistribution& q);

// The maximum-likelihood memoryless source for `s`: counts / length.
SourceDistribution empirical_distribution(const Sequence& s);

struct BoundCheck {
  double self_information = 0.0;
  double nh0 = 0.0;
  bool holds = false;
};

// Order-0 lower bound: no memoryless source assigns `s` less
// self-information than nh0(s). Equality iff q is the empirical
// distribution of `s`. `holds` uses a 1e-9 slack.
BoundCheck check_self_information_bound(const Sequence& s,
                                        const SourceDistribution& q);

}  // namespace sst

#endif  // SST_ENTROPY_HPP
