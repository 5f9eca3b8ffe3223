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

#ifndef SST_ENUMERATION_HPP
#define SST_ENUMERATION_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sst/sequence.hpp"

namespace sst {

// Arbitrary-precision nonnegative integer used for string ranks and set
// sizes.
using BigRank = mpz_class;

inline constexpr unsigned kFactorialCacheSize = 1024;

// n! from a process-wide table built once on first use. n must be below
// kFactorialCacheSize.
const BigRank& factorial(unsigned n);

BigRank power(unsigned base, unsigned exponent);

// (sum counts)! / prod(counts[i]!), exact.
BigRank multinomial(std::span<const unsigned> counts);

std::string to_decimal(const BigRank& value);
// Throws Error(invalid_argument) if `text` is not a nonnegative decimal.
BigRank from_decimal(const std::string& text);

// Base-A value of `s` with position 0 most significant.
BigRank lex_rank_full(const Sequence& s);

// Inverse of lex_rank_full. Throws Error(out_of_range) unless
// 0 <= rank < A^N.
Sequence lex_unrank_full(const BigRank& rank, unsigned alphabet_size,
                         std::size_t length);

// A finite multiset of nonnegative integer items, each with positive
// multiplicity.
class Multiset {
 public:
  Multiset() = default;
  // Zero multiplicities are dropped.
  explicit Multiset(std::map<unsigned, unsigned> item_counts);
  static Multiset of(std::span<const unsigned> items);

  const std::map<unsigned, unsigned>& item_counts() const noexcept {
    return counts_;
  }
  std::size_t size() const noexcept { return size_; }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<unsigned, unsigned> counts_;
  std::size_t size_ = 0;
};

BigRank permutation_count(const Multiset& m);

// 0-based position of `seq` among the distinct permutations of `m` in
// ascending lexicographic order. Throws Error(multiset_mismatch) if `seq`
// is not a permutation of `m`.
BigRank rank_multiset_perm(std::span<const unsigned> seq, const Multiset& m);

// Inverse of rank_multiset_perm. Throws Error(out_of_range) unless
// 0 <= rank < permutation_count(m).
std::vector<unsigned> unrank_multiset_perm(const BigRank& rank,
                                           const Multiset& m);

namespace detail {

// Dense forms used on hot paths. `counts[v]` is the multiplicity of item v
// and `total` must equal multinomial(counts). Both are consumed.
// `rank` must be below `total`.
void unrank_dense(mpz_class rank, std::vector<unsigned>& counts,
                  mpz_class total, std::span<Symbol> out);

// `seq` must be a permutation of the multiset described by `counts`.
mpz_class rank_dense(std::span<const Symbol> seq,
                     std::vector<unsigned>& counts, mpz_class total);

}  // namespace detail

}  // namespace sst

#endif  // SST_ENUMERATION_HPP
