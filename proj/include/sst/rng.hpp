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

#ifndef SST_RNG_HPP
#define SST_RNG_HPP

#include <cstdint>

namespace sst {

// SplitMix64 (Steele, Lea, Flood 2014). Each trial of an experiment gets
// its own stream whose starting state is
//     mix64(seed XOR mix64(trial_index)),
// and next() returns mix64(state += 0x9e3779b97f4a7c15). Bounded draws use
// Lemire's multiply-shift rejection method, so the symbol sequence for a
// given (seed, trial) is fully specified and portable.
class SplitMix64 {
 public:
  static constexpr const char* kName =
      "splitmix64;substream=mix64(seed^mix64(trial));bounded=lemire";

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed ^ mix64(trial)));
  }

  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace sst

#endif  // SST_RNG_HPP
