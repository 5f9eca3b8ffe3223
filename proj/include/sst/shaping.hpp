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

#ifndef SST_SHAPING_HPP
#define SST_SHAPING_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include <gmp.h>

#include "sst/enumeration.hpp"
#include "sst/partitions.hpp"
#include "sst/sequence.hpp"

namespace sst {

// Longest shaped string a table supports.
inline constexpr unsigned kMaxShapedLength = 127;

struct TableBuildOptions {
  // Test hook for the self-test harness: reverses the tie-break between
  // classes of equal entropy key.
  bool reverse_tie_break = false;
};

// All strings of length L whose sorted nonzero symbol counts equal `parts`.
// Every member has the same zero-order entropy.
struct PartitionClass {
  std::vector<unsigned> parts;  // descending
  // prod c^c over the parts. For fixed L a larger key means lower H0.
  BigRank entropy_key;
  // Count vectors of length A that are rearrangements of the padded parts.
  BigRank num_compositions;
  BigRank strings_per_composition;
  BigRank class_size;
  double h0_value = 0.0;
};

// The ordered partition of all A^L strings of length L = N + k into
// entropy classes, and the bijection between X^N (all strings of length N)
// and Y, the A^N lowest-entropy strings of length L.
//
// Canonical total order on strings of length L:
//   1. class: entropy_key descending, ties by ascending part list;
//   2. composition: count vector ascending lexicographically;
//   3. string: ascending lexicographically.
// Y is the first A^N strings of this order. X^N is ordered by
// lex_rank_full.
//
// Tables are immutable once built and may be shared between threads.
class ShapingTable {
 public:
  using BuildOptions = TableBuildOptions;

  // Throws Error(invalid_argument) on a parameter out of range: needs
  // A >= 2 and N, k >= 1 with N + k <= kMaxShapedLength.
  static ShapingTable build(unsigned alphabet_size, unsigned input_length,
                            unsigned shaping_order,
                            BuildOptions options = {});

  // Binary cache format. load() recomputes all sizes, checks the class
  // order, and checks that the class sizes add up to A^L; otherwise it
  // throws Error(corrupt_cache).
  void save(std::ostream& out) const;
  static ShapingTable load(std::istream& in);
  void save_file(const std::filesystem::path& path) const;
  static ShapingTable load_file(const std::filesystem::path& path);

  static std::filesystem::path cache_file_name(unsigned alphabet_size,
                                               unsigned input_length,
                                               unsigned shaping_order);
  // Loads the table from `dir` if a valid cache file exists; otherwise
  // builds it and writes the cache file.
  static ShapingTable open_cached(const std::filesystem::path& dir,
                                  unsigned alphabet_size,
                                  unsigned input_length,
                                  unsigned shaping_order);

  unsigned alphabet_size() const noexcept { return alphabet_size_; }
  unsigned input_length() const noexcept { return input_length_; }
  unsigned shaping_order() const noexcept { return shaping_order_; }
  unsigned shaped_length() const noexcept {
    return input_length_ + shaping_order_;
  }

  std::size_t class_count() const noexcept { return classes_.size(); }
  std::span<const PartitionList::Part> parts(std::size_t i) const {
    return classes_[i];
  }
  PartitionClass class_at(std::size_t i) const;
  // Sum of the sizes of classes 0..i.
  BigRank cumulative(std::size_t i) const;
  BigRank class_start(std::size_t i) const;

  const BigRank& y_size() const noexcept { return y_size_; }
  const BigRank& space_size() const noexcept { return space_size_; }
  std::size_t boundary_index() const noexcept { return boundary_index_; }
  const BigRank& boundary_take() const noexcept { return boundary_take_; }

  // String at position `rank` of the canonical order on all A^L strings.
  // Throws Error(out_of_range) unless rank < A^L.
  Sequence unrank(const BigRank& rank) const;
  // Like unrank, restricted to Y: rank must be below y_size().
  Sequence unrank_y(const BigRank& rank) const;
  // Position of `y` in the canonical order; below y_size() iff y is in Y.
  // Throws Error(shape_mismatch) on wrong length or alphabet.
  BigRank rank_y(const Sequence& y) const;

  // f(s) = unrank_y(lex_rank_full(s)). Throws Error(shape_mismatch) if s
  // does not have length N over alphabet A.
  Sequence transform(const Sequence& s) const;
  // Throws Error(shape_mismatch) as rank_y, Error(not_in_shaped_set) if
  // y is not in Y.
  Sequence inverse_transform(const Sequence& y) const;

 private:
  ShapingTable() = default;

  void finalize();
  std::size_t find_class(mpz_srcptr rank) const;
  // Class index of the partition `parts`, or class_count() if absent.
  std::size_t find_partition(std::span<const PartitionList::Part> parts) const;
  bool precedes(std::span<const PartitionList::Part> a, const BigRank& key_a,
                std::span<const PartitionList::Part> b,
                const BigRank& key_b) const;
  void unrank_into(mpz_class rank, std::span<Symbol> out) const;

  unsigned alphabet_size_ = 0;
  unsigned input_length_ = 0;
  unsigned shaping_order_ = 0;
  bool reverse_tie_break_ = false;

  PartitionList classes_;
  // Prefix sums of class sizes, fixed width limbs_ limbs per entry.
  std::size_t limbs_ = 0;
  std::vector<mp_limb_t> cumulative_;

  BigRank y_size_;
  BigRank space_size_;
  std::size_t boundary_index_ = 0;
  BigRank boundary_take_;
};

// prod c^c over the parts.
BigRank entropy_key(std::span<const unsigned> parts);

}  // namespace sst

#endif  // SST_SHAPING_HPP
