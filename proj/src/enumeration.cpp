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

#include "sst/enumeration.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sst/error.hpp"

namespace sst {

namespace {

const std::vector<BigRank>& factorial_table() {
  static const std::vector<BigRank> table = [] {
    std::vector<BigRank> t(kFactorialCacheSize);
    t[0] = 1;
    for (unsigned i = 1; i < kFactorialCacheSize; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

}  // namespace

const BigRank& factorial(unsigned n) {
  if (n >= kFactorialCacheSize)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("factorial argument {} exceeds cache size {}", n,
                            kFactorialCacheSize));
  return factorial_table()[n];
}

BigRank power(unsigned base, unsigned exponent) {
  BigRank r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

BigRank multinomial(std::span<const unsigned> counts) {
  // prod_i C(c_0 + ... + c_i, c_i)
  BigRank result = 1;
  BigRank binom;
  unsigned long prefix = 0;
  for (unsigned c : counts) {
    prefix += c;
    mpz_bin_uiui(binom.get_mpz_t(), prefix, c);
    result *= binom;
  }
  return result;
}

std::string to_decimal(const BigRank& value) { return value.get_str(10); }

BigRank from_decimal(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::invalid_argument,
                fmt::format("not a nonnegative decimal integer: '{}'", text));
  return BigRank(text, 10);
}

BigRank lex_rank_full(const Sequence& s) {
  BigRank r = 0;
  const unsigned a = s.alphabet_size();
  for (Symbol x : s.symbols()) {
    mpz_mul_ui(r.get_mpz_t(), r.get_mpz_t(), a);
    mpz_add_ui(r.get_mpz_t(), r.get_mpz_t(), x);
  }
  return r;
}

Sequence lex_unrank_full(const BigRank& rank, unsigned alphabet_size,
                         std::size_t length) {
  if (alphabet_size < 2)
    throw Error(ErrorCode::invalid_argument, "alphabet size must be >= 2");
  if (rank < 0 ||
      rank >= power(alphabet_size, static_cast<unsigned>(length)))
    throw Error(ErrorCode::out_of_range,
                fmt::format("rank out of range: {} not below {}^{}",
                            to_decimal(rank), alphabet_size, length));
  std::vector<Symbol> out(length);
  BigRank r = rank;
  for (std::size_t i = length; i-- > 0;)
    out[i] = static_cast<Symbol>(
        mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), alphabet_size));
  return Sequence(std::move(out), alphabet_size);
}

Multiset::Multiset(std::map<unsigned, unsigned> item_counts) {
  for (auto [item, count] : item_counts) {
    if (count == 0) continue;
    counts_.emplace(item, count);
    size_ += count;
  }
}

Multiset Multiset::of(std::span<const unsigned> items) {
  std::map<unsigned, unsigned> counts;
  for (unsigned x : items) ++counts[x];
  return Multiset(std::move(counts));
}

BigRank permutation_count(const Multiset& m) {
  std::vector<unsigned> c;
  c.reserve(m.item_counts().size());
  for (auto [item, count] : m.item_counts()) c.push_back(count);
  return multinomial(c);
}

namespace detail {

void unrank_dense(mpz_class rank, std::vector<unsigned>& counts,
                  mpz_class total, std::span<Symbol> out) {
  mpz_class block;
  unsigned long remaining = out.size();
  for (Symbol& slot : out) {
    // Permutations starting with item v number total * counts[v] / remaining.
    Symbol v = 0;
    for (;; ++v) {
      if (counts[v] == 0) continue;
      mpz_mul_ui(block.get_mpz_t(), total.get_mpz_t(), counts[v]);
      mpz_divexact_ui(block.get_mpz_t(), block.get_mpz_t(), remaining);
      if (rank < block) break;
      rank -= block;
    }
    slot = v;
    --counts[v];
    --remaining;
    total.swap(block);
  }
}

mpz_class rank_dense(std::span<const Symbol> seq,
                     std::vector<unsigned>& counts, mpz_class total) {
  mpz_class rank = 0;
  mpz_class block;
  unsigned long remaining = seq.size();
  for (Symbol x : seq) {
    for (Symbol v = 0; v < x; ++v) {
      if (counts[v] == 0) continue;
      mpz_mul_ui(block.get_mpz_t(), total.get_mpz_t(), counts[v]);
      mpz_divexact_ui(block.get_mpz_t(), block.get_mpz_t(), remaining);
      rank += block;
    }
    mpz_mul_ui(total.get_mpz_t(), total.get_mpz_t(), counts[x]);
    mpz_divexact_ui(total.get_mpz_t(), total.get_mpz_t(), remaining);
    --counts[x];
    --remaining;
  }
  return rank;
}

}  // namespace detail

namespace {

// Maps the items of `m` onto the dense indices 0..d-1 in ascending order.
struct DenseView {
  std::vector<unsigned> items;
  std::vector<unsigned> counts;

  explicit DenseView(const Multiset& m) {
    for (auto [item, count] : m.item_counts()) {
      items.push_back(item);
      counts.push_back(count);
    }
  }
};

}  // namespace

BigRank rank_multiset_perm(std::span<const unsigned> seq, const Multiset& m) {
  if (Multiset::of(seq) != m)
    throw Error(ErrorCode::multiset_mismatch,
                "multiset mismatch: sequence is not a permutation of the "
                "multiset");
  DenseView view(m);
  std::vector<Symbol> dense(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    dense[i] = static_cast<Symbol>(
        std::lower_bound(view.items.begin(), view.items.end(), seq[i]) -
        view.items.begin());
  const BigRank total = multinomial(view.counts);
  return detail::rank_dense(dense, view.counts, total);
}

std::vector<unsigned> unrank_multiset_perm(const BigRank& rank,
                                           const Multiset& m) {
  DenseView view(m);
  const BigRank total = multinomial(view.counts);
  if (rank < 0 || rank >= total)
    throw Error(ErrorCode::out_of_range,
                fmt::format("rank out of range: {} not below {}",
                            to_decimal(rank), to_decimal(total)));
  std::vector<Symbol> dense(m.size());
  detail::unrank_dense(rank, view.counts, total, dense);
  std::vector<unsigned> out(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) out[i] = view.items[dense[i]];
  return out;
}

}  // namespace sst
