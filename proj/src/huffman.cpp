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

#include "sst/huffman.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <tuple>

#include <fmt/format.h>

#include "sst/error.hpp"

namespace sst {

CodeBook::CodeBook(std::vector<Codeword> entries)
    : entries_(std::move(entries)) {
  std::ranges::sort(entries_, {}, &Codeword::symbol);
}

const Codeword* CodeBook::find(unsigned symbol) const {
  const auto it = std::ranges::lower_bound(entries_, symbol, {},
                                           &Codeword::symbol);
  return it != entries_.end() && it->symbol == symbol ? &*it : nullptr;
}

namespace {

// Adds one to a binary string in place; the string must not be all ones.
void increment(std::string& bits) {
  for (auto i = bits.size(); i-- > 0;) {
    if (bits[i] == '0') {
      bits[i] = '1';
      return;
    }
    bits[i] = '0';
  }
}

}  // namespace

CodeBook build_code(std::span<const std::uint64_t> counts) {
  struct Node {
    std::uint64_t weight;
    std::size_t parent;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  std::vector<Node> nodes;
  std::vector<unsigned> leaf_symbol;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    if (counts[a] == 0) continue;
    nodes.push_back({counts[a], kRoot});
    leaf_symbol.push_back(static_cast<unsigned>(a));
  }
  if (nodes.empty()) throw Error(ErrorCode::invalid_argument, "empty input");

  const std::size_t leaves = nodes.size();
  if (leaves == 1) return CodeBook({{leaf_symbol[0], 0, ""}});

  // (weight, creation index); creation index breaks ties.
  using Entry = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t i = 0; i < leaves; ++i) heap.emplace(nodes[i].weight, i);
  while (heap.size() > 1) {
    const auto [wa, a] = heap.top();
    heap.pop();
    const auto [wb, b] = heap.top();
    heap.pop();
    const std::size_t id = nodes.size();
    nodes.push_back({wa + wb, kRoot});
    nodes[a].parent = id;
    nodes[b].parent = id;
    heap.emplace(wa + wb, id);
  }

  // Parents are always created after their children, so one backward pass
  // fills in depths.
  std::vector<unsigned> depth(nodes.size(), 0);
  for (std::size_t i = nodes.size() - 1; i-- > 0;)
    depth[i] = depth[nodes[i].parent] + 1;

  std::vector<Codeword> words(leaves);
  for (std::size_t i = 0; i < leaves; ++i)
    words[i] = {leaf_symbol[i], depth[i], {}};
  std::ranges::sort(words, [](const Codeword& x, const Codeword& y) {
    return std::tie(x.length, x.symbol) < std::tie(y.length, y.symbol);
  });
  std::string code(words.front().length, '0');
  words.front().bits = code;
  for (std::size_t i = 1; i < words.size(); ++i) {
    increment(code);
    code.append(words[i].length - code.size(), '0');
    words[i].bits = code;
  }
  return CodeBook(std::move(words));
}

std::uint64_t encoded_length(std::span<const std::uint64_t> counts,
                             const CodeBook& code) {
  std::uint64_t bits = 0;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    if (counts[a] == 0) continue;
    const Codeword* w = code.find(static_cast<unsigned>(a));
    if (w == nullptr)
      throw Error(ErrorCode::code_mismatch,
                  fmt::format("code mismatch: symbol {} has no codeword", a));
    bits += counts[a] * w->length;
  }
  return bits;
}

std::uint64_t codebook_cost(unsigned alphabet_size) {
  if (alphabet_size < 2) return 0;
  // ceil(log2(A)) == bit width of A - 1
  return std::uint64_t{alphabet_size} *
         static_cast<std::uint64_t>(std::bit_width(alphabet_size - 1u));
}

}  // namespace sst
