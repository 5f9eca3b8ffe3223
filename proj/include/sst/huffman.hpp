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

#ifndef SST_HUFFMAN_HPP
#define SST_HUFFMAN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sst/sequence.hpp"

namespace sst {

struct Codeword {
  unsigned symbol = 0;
  unsigned length = 0;
  std::string bits;  // '0'/'1', length characters

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Canonical Huffman code over the symbols that occur. Codewords are
// assigned in ascending (length, symbol) order.
class CodeBook {
 public:
  CodeBook() = default;
  explicit CodeBook(std::vector<Codeword> entries);

  // Sorted by symbol.
  std::span<const Codeword> entries() const noexcept { return entries_; }
  std::size_t distinct_symbols() const noexcept { return entries_.size(); }
  // nullptr if the symbol has no codeword.
  const Codeword* find(unsigned symbol) const;

 private:
  std::vector<Codeword> entries_;
};

// Huffman code for the positive counts. Merges take the two lightest
// nodes, ties going to the earliest-created node. A single distinct symbol
// gets a zero-length codeword. Throws Error(invalid_argument) if all counts
// are zero.
CodeBook build_code(std::span<const std::uint64_t> counts);
inline CodeBook build_code(const CountVector& cv) {
  return build_code(cv.counts);
}

// sum counts[a] * length(a). Throws Error(code_mismatch) if a symbol with
// a positive count has no codeword.
std::uint64_t encoded_length(std::span<const std::uint64_t> counts,
                             const CodeBook& code);
inline std::uint64_t encoded_length(const CountVector& cv,
                                    const CodeBook& code) {
  return encoded_length(cv.counts, code);
}

// Bits needed to describe a code over an A-symbol alphabet as A
// fixed-width length fields of ceil(log2(A)) bits each.
std::uint64_t codebook_cost(unsigned alphabet_size);

}  // namespace sst

#endif  // SST_HUFFMAN_HPP
