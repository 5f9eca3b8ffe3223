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

#ifndef SST_SEQUENCE_HPP
#define SST_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sst {

using Symbol = std::uint32_t;

// A string over the integer alphabet [0, alphabet_size).
class Sequence {
 public:
  // Throws Error(invalid_argument) if alphabet_size < 2 or a symbol is
  // outside the alphabet.
  Sequence(std::vector<Symbol> symbols, unsigned alphabet_size);

  unsigned alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_size_;
};

// Per-symbol occurrence counts n_i of a sequence.
struct CountVector {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  friend bool operator==(const CountVector&, const CountVector&) = default;
};

}  // namespace sst

#endif  // SST_SEQUENCE_HPP
