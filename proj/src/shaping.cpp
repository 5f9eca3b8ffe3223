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

#include "sst/shaping.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "sst/entropy.hpp"
#include "sst/error.hpp"

namespace sst {

namespace {

using Part = PartitionList::Part;

constexpr std::array<char, 8> kMagic = {'S', 'S', 'T', 'T', 'B', 'L', '0', '1'};

template <typename Parts>
void accumulate_key(const Parts& parts, mpz_class& key) {
  key = 1;
  mpz_class term;
  for (auto c : parts) {
    if (c <= 1) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), c, c);
    key *= term;
  }
}

// Number of count vectors (A slots) that rearrange the padded parts, and
// the number of strings sharing one such count vector.
void class_sizes(std::span<const Part> parts, unsigned alphabet_size,
                 unsigned length, mpz_class& num_compositions,
                 mpz_class& strings_per_composition) {
  const auto m = static_cast<unsigned>(parts.size());
  num_compositions = factorial(alphabet_size);
  mpz_divexact(num_compositions.get_mpz_t(), num_compositions.get_mpz_t(),
               factorial(alphabet_size - m).get_mpz_t());
  strings_per_composition = factorial(length);
  std::size_t run_start = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] > 1)
      mpz_divexact(strings_per_composition.get_mpz_t(),
                   strings_per_composition.get_mpz_t(),
                   factorial(parts[j]).get_mpz_t());
    const bool run_ends = j + 1 == parts.size() || parts[j + 1] != parts[j];
    if (run_ends) {
      const auto run = static_cast<unsigned>(j + 1 - run_start);
      if (run > 1)
        mpz_divexact(num_compositions.get_mpz_t(),
                     num_compositions.get_mpz_t(),
                     factorial(run).get_mpz_t());
      run_start = j + 1;
    }
  }
}

// Multiplicities of each count value 0..length in the padded count vector.
std::vector<unsigned> value_counts(std::span<const Part> parts,
                                   unsigned alphabet_size, unsigned length) {
  std::vector<unsigned> vc(length + 1, 0);
  vc[0] = alphabet_size - static_cast<unsigned>(parts.size());
  for (Part p : parts) ++vc[p];
  return vc;
}

void store_limbs(const mpz_class& value, mp_limb_t* dst, std::size_t limbs) {
  const std::size_t used = mpz_size(value.get_mpz_t());
  for (std::size_t j = 0; j < limbs; ++j)
    dst[j] = j < used ? mpz_getlimbn(value.get_mpz_t(), j) : 0;
}

void write_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

void write_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t read_uint(std::istream& in, int bytes) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), bytes);
  if (!in) throw Error(ErrorCode::corrupt_cache, "truncated table cache");
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= std::uint64_t{b[i]} << (8 * i);
  return v;
}

void validate_parameters(unsigned a, unsigned n, unsigned k) {
  if (a < 2 || n < 1 || k < 1)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("invalid parameters: need A >= 2, N >= 1, k >= 1 "
                            "(got A={}, N={}, k={})",
                            a, n, k));
  if (static_cast<unsigned long>(n) + k > kMaxShapedLength)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("invalid parameters: N + k = {} exceeds {}",
                            static_cast<unsigned long>(n) + k,
                            kMaxShapedLength));
  if (a >= kFactorialCacheSize)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("invalid parameters: alphabet size {} exceeds {}",
                            a, kFactorialCacheSize - 1));
}

}  // namespace

BigRank entropy_key(std::span<const unsigned> parts) {
  BigRank key;
  accumulate_key(parts, key);
  return key;
}

ShapingTable ShapingTable::build(unsigned alphabet_size, unsigned input_length,
                                 unsigned shaping_order,
                                 BuildOptions options) {
  validate_parameters(alphabet_size, input_length, shaping_order);
  ShapingTable t;
  t.alphabet_size_ = alphabet_size;
  t.input_length_ = input_length;
  t.shaping_order_ = shaping_order;
  t.reverse_tie_break_ = options.reverse_tie_break;
  const unsigned length = t.shaped_length();

  const PartitionList all = enumerate_partitions(length, alphabet_size);
  const std::size_t n = all.size();

  // Keys are bounded by L^L.
  const std::size_t key_limbs =
      mpz_size(power(length, length).get_mpz_t());
  std::vector<mp_limb_t> keys(n * key_limbs);
  {
    mpz_class key;
    for (std::size_t i = 0; i < n; ++i) {
      accumulate_key(all[i], key);
      store_limbs(key, keys.data() + i * key_limbs, key_limbs);
    }
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  const bool reverse = options.reverse_tie_break;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              const int c = mpn_cmp(keys.data() + a * key_limbs,
                                    keys.data() + b * key_limbs,
                                    static_cast<mp_size_t>(key_limbs));
              if (c != 0) return c > 0;
              const auto pa = all[a];
              const auto pb = all[b];
              return reverse ? std::ranges::lexicographical_compare(pb, pa)
                             : std::ranges::lexicographical_compare(pa, pb);
            });
  keys = {};

  t.classes_.reserve(n, all.total_parts());
  for (std::uint32_t i : order) t.classes_.push_back(all[i]);
  t.finalize();
  return t;
}

void ShapingTable::finalize() {
  const unsigned length = shaped_length();
  space_size_ = power(alphabet_size_, length);
  y_size_ = power(alphabet_size_, input_length_);
  limbs_ = mpz_size(space_size_.get_mpz_t());

  const std::size_t n = classes_.size();
  cumulative_.assign(n * limbs_, 0);
  mpz_class acc = 0, num_compositions, per_composition;
  for (std::size_t i = 0; i < n; ++i) {
    class_sizes(classes_[i], alphabet_size_, length, num_compositions,
                per_composition);
    mpz_addmul(acc.get_mpz_t(), num_compositions.get_mpz_t(),
               per_composition.get_mpz_t());
    if (mpz_size(acc.get_mpz_t()) > limbs_)
      throw Error(ErrorCode::internal,
                  "counting identity violated: class sizes exceed A^L");
    store_limbs(acc, cumulative_.data() + i * limbs_, limbs_);
  }
  if (acc != space_size_)
    throw Error(ErrorCode::internal,
                fmt::format("counting identity violated: class sizes sum to "
                            "{}, expected {}",
                            to_decimal(acc), to_decimal(space_size_)));

  const mpz_class last = y_size_ - 1;
  boundary_index_ = find_class(last.get_mpz_t());
  boundary_take_ = y_size_ - class_start(boundary_index_);
}

BigRank ShapingTable::cumulative(std::size_t i) const {
  mpz_t view;
  mpz_roinit_n(view, cumulative_.data() + i * limbs_,
               static_cast<mp_size_t>(limbs_));
  return BigRank(view);
}

BigRank ShapingTable::class_start(std::size_t i) const {
  return i == 0 ? BigRank(0) : cumulative(i - 1);
}

PartitionClass ShapingTable::class_at(std::size_t i) const {
  const auto p = classes_[i];
  const unsigned length = shaped_length();
  PartitionClass c;
  c.parts.assign(p.begin(), p.end());
  c.entropy_key = entropy_key(c.parts);
  class_sizes(p, alphabet_size_, length, c.num_compositions,
              c.strings_per_composition);
  c.class_size = c.num_compositions * c.strings_per_composition;
  std::vector<std::uint64_t> counts(p.begin(), p.end());
  c.h0_value = h0(counts);
  return c;
}

std::size_t ShapingTable::find_class(mpz_srcptr rank) const {
  std::vector<mp_limb_t> r(limbs_, 0);
  const std::size_t used = mpz_size(rank);
  for (std::size_t j = 0; j < used && j < limbs_; ++j)
    r[j] = mpz_getlimbn(rank, static_cast<mp_size_t>(j));
  // First class whose cumulative sum exceeds rank.
  std::size_t lo = 0, hi = classes_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (mpn_cmp(cumulative_.data() + mid * limbs_, r.data(),
                static_cast<mp_size_t>(limbs_)) > 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

bool ShapingTable::precedes(std::span<const Part> a, const BigRank& key_a,
                            std::span<const Part> b,
                            const BigRank& key_b) const {
  const int c = cmp(key_a, key_b);
  if (c != 0) return c > 0;
  return reverse_tie_break_ ? std::ranges::lexicographical_compare(b, a)
                            : std::ranges::lexicographical_compare(a, b);
}

std::size_t ShapingTable::find_partition(std::span<const Part> parts) const {
  BigRank key, probe_key;
  accumulate_key(parts, key);
  std::size_t lo = 0, hi = classes_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    accumulate_key(classes_[mid], probe_key);
    if (precedes(classes_[mid], probe_key, parts, key))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < classes_.size() && std::ranges::equal(classes_[lo], parts))
    return lo;
  return classes_.size();
}

void ShapingTable::unrank_into(mpz_class rank, std::span<Symbol> out) const {
  const std::size_t i = find_class(rank.get_mpz_t());
  rank -= class_start(i);
  const auto parts = classes_[i];
  const unsigned length = shaped_length();

  mpz_class num_compositions, per_composition, composition_rank;
  class_sizes(parts, alphabet_size_, length, num_compositions,
              per_composition);
  mpz_fdiv_qr(composition_rank.get_mpz_t(), rank.get_mpz_t(),
              rank.get_mpz_t(), per_composition.get_mpz_t());

  std::vector<unsigned> vc = value_counts(parts, alphabet_size_, length);
  std::vector<Symbol> composition(alphabet_size_);
  detail::unrank_dense(std::move(composition_rank), vc,
                       std::move(num_compositions), composition);

  std::vector<unsigned> counts(composition.begin(), composition.end());
  detail::unrank_dense(std::move(rank), counts, std::move(per_composition),
                       out);
}

Sequence ShapingTable::unrank(const BigRank& rank) const {
  if (rank < 0 || rank >= space_size_)
    throw Error(ErrorCode::out_of_range,
                fmt::format("rank out of range: {} not below {}",
                            to_decimal(rank), to_decimal(space_size_)));
  std::vector<Symbol> out(shaped_length());
  unrank_into(rank, out);
  return Sequence(std::move(out), alphabet_size_);
}

Sequence ShapingTable::unrank_y(const BigRank& rank) const {
  if (rank < 0 || rank >= y_size_)
    throw Error(ErrorCode::out_of_range,
                fmt::format("rank out of range: {} not below {}",
                            to_decimal(rank), to_decimal(y_size_)));
  std::vector<Symbol> out(shaped_length());
  unrank_into(rank, out);
  return Sequence(std::move(out), alphabet_size_);
}

BigRank ShapingTable::rank_y(const Sequence& y) const {
  const unsigned length = shaped_length();
  if (y.length() != length || y.alphabet_size() != alphabet_size_)
    throw Error(ErrorCode::shape_mismatch,
                fmt::format("shape mismatch: expected length {} over alphabet "
                            "{}, got length {} over alphabet {}",
                            length, alphabet_size_, y.length(),
                            y.alphabet_size()));
  std::vector<Symbol> composition(alphabet_size_, 0);
  for (Symbol a : y.symbols()) ++composition[a];
  std::vector<Part> parts;
  for (Symbol c : composition)
    if (c > 0) parts.push_back(static_cast<Part>(c));
  std::ranges::sort(parts, std::greater<>());

  const std::size_t i = find_partition(parts);
  if (i == classes_.size())
    throw Error(ErrorCode::internal, "partition missing from table");

  mpz_class num_compositions, per_composition;
  class_sizes(parts, alphabet_size_, length, num_compositions,
              per_composition);
  std::vector<unsigned> vc = value_counts(parts, alphabet_size_, length);
  const mpz_class composition_rank =
      detail::rank_dense(composition, vc, num_compositions);
  std::vector<unsigned> counts(composition.begin(), composition.end());
  const mpz_class string_rank =
      detail::rank_dense(y.symbols(), counts, per_composition);
  return class_start(i) + composition_rank * per_composition + string_rank;
}

Sequence ShapingTable::transform(const Sequence& s) const {
  if (s.length() != input_length_ || s.alphabet_size() != alphabet_size_)
    throw Error(ErrorCode::shape_mismatch,
                fmt::format("shape mismatch: expected length {} over alphabet "
                            "{}, got length {} over alphabet {}",
                            input_length_, alphabet_size_, s.length(),
                            s.alphabet_size()));
  std::vector<Symbol> out(shaped_length());
  unrank_into(lex_rank_full(s), out);
  return Sequence(std::move(out), alphabet_size_);
}

Sequence ShapingTable::inverse_transform(const Sequence& y) const {
  const BigRank r = rank_y(y);
  if (r >= y_size_)
    throw Error(ErrorCode::not_in_shaped_set,
                "not in shaped set: the string is not an image of the "
                "transform");
  return lex_unrank_full(r, alphabet_size_, input_length_);
}

void ShapingTable::save(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  write_u32(out, alphabet_size_);
  write_u32(out, input_length_);
  write_u32(out, shaping_order_);
  write_u32(out, reverse_tie_break_ ? 1u : 0u);
  write_u64(out, classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto p = classes_[i];
    out.put(static_cast<char>(p.size()));
    out.write(reinterpret_cast<const char*>(p.data()),
              static_cast<std::streamsize>(p.size()));
  }
  if (!out) throw Error(ErrorCode::io, "failed writing table cache");
}

ShapingTable ShapingTable::load(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic)
    throw Error(ErrorCode::corrupt_cache, "not a table cache file");
  ShapingTable t;
  t.alphabet_size_ = static_cast<unsigned>(read_uint(in, 4));
  t.input_length_ = static_cast<unsigned>(read_uint(in, 4));
  t.shaping_order_ = static_cast<unsigned>(read_uint(in, 4));
  const auto flags = read_uint(in, 4);
  t.reverse_tie_break_ = (flags & 1u) != 0;
  const std::uint64_t n = read_uint(in, 8);
  try {
    validate_parameters(t.alphabet_size_, t.input_length_, t.shaping_order_);
  } catch (const Error& e) {
    throw Error(ErrorCode::corrupt_cache, e.what());
  }
  const unsigned length = t.shaped_length();
  if (n == 0 || n > (std::uint64_t{1} << 32))
    throw Error(ErrorCode::corrupt_cache, "implausible class count");

  std::array<Part, 256> buf{};
  BigRank key, prev_key;
  std::vector<Part> prev;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto m = static_cast<unsigned>(read_uint(in, 1));
    in.read(reinterpret_cast<char*>(buf.data()), m);
    if (!in) throw Error(ErrorCode::corrupt_cache, "truncated table cache");
    const std::span<const Part> parts(buf.data(), m);
    unsigned sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (parts[j] == 0 || (j > 0 && parts[j] > parts[j - 1]))
        throw Error(ErrorCode::corrupt_cache, "malformed partition");
      sum += parts[j];
    }
    if (m == 0 || m > t.alphabet_size_ || sum != length)
      throw Error(ErrorCode::corrupt_cache, "malformed partition");
    accumulate_key(parts, key);
    if (i > 0 && !t.precedes(prev, prev_key, parts, key))
      throw Error(ErrorCode::corrupt_cache, "classes out of canonical order");
    prev.assign(parts.begin(), parts.end());
    prev_key.swap(key);
    t.classes_.push_back(parts);
  }
  try {
    t.finalize();
  } catch (const Error& e) {
    throw Error(ErrorCode::corrupt_cache, e.what());
  }
  return t;
}

void ShapingTable::save_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::io,
                fmt::format("cannot open {} for writing", path.string()));
  save(out);
}

ShapingTable ShapingTable::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::io,
                fmt::format("cannot open {} for reading", path.string()));
  return load(in);
}

std::filesystem::path ShapingTable::cache_file_name(unsigned alphabet_size,
                                                    unsigned input_length,
                                                    unsigned shaping_order) {
  return fmt::format("sst-table-A{}-N{}-k{}.bin", alphabet_size, input_length,
                     shaping_order);
}

ShapingTable ShapingTable::open_cached(const std::filesystem::path& dir,
                                       unsigned alphabet_size,
                                       unsigned input_length,
                                       unsigned shaping_order) {
  const auto path =
      dir / cache_file_name(alphabet_size, input_length, shaping_order);
  if (std::filesystem::exists(path)) {
    try {
      ShapingTable t = load_file(path);
      if (t.alphabet_size_ == alphabet_size &&
          t.input_length_ == input_length &&
          t.shaping_order_ == shaping_order && !t.reverse_tie_break_)
        return t;
    } catch (const Error&) {
      // Unusable cache; rebuild and overwrite below.
    }
  }
  ShapingTable t = build(alphabet_size, input_length, shaping_order);
  std::filesystem::create_directories(dir);
  const auto tmp = path.string() + ".tmp";
  t.save_file(tmp);
  std::filesystem::rename(tmp, path);
  return t;
}

}  // namespace sst
