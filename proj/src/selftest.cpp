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

#include "sst/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sst/entropy.hpp"
#include "sst/enumeration.hpp"
#include "sst/error.hpp"
#include "sst/huffman.hpp"
#include "sst/shaping.hpp"

namespace sst {

namespace {

// A string together with its position in the canonical order, computed
// directly from its counts.
struct BruteEntry {
  BigRank key;
  std::vector<unsigned> parts;        // descending nonzero counts
  std::vector<unsigned> composition;  // count per symbol
  std::vector<Symbol> symbols;
};

bool canonical_less(const BruteEntry& a, const BruteEntry& b) {
  if (a.key != b.key) return a.key > b.key;
  if (a.parts != b.parts) return a.parts < b.parts;
  if (a.composition != b.composition) return a.composition < b.composition;
  return a.symbols < b.symbols;
}

std::vector<BruteEntry> brute_force_order(unsigned a, unsigned length) {
  const auto total = static_cast<std::size_t>(std::llround(std::pow(a, length)));
  std::vector<BruteEntry> all;
  all.reserve(total);
  std::vector<Symbol> s(length, 0);
  for (std::size_t i = 0; i < total; ++i) {
    BruteEntry e;
    e.composition.assign(a, 0);
    for (Symbol x : s) ++e.composition[x];
    for (unsigned c : e.composition)
      if (c > 0) e.parts.push_back(c);
    std::ranges::sort(e.parts, std::greater<>());
    e.key = 1;
    for (unsigned c : e.parts) e.key *= power(c, c);
    e.symbols = s;
    all.push_back(std::move(e));
    // odometer increment
    for (std::size_t p = length; p-- > 0;) {
      if (++s[p] < a) break;
      s[p] = 0;
    }
  }
  std::ranges::sort(all, canonical_less);
  return all;
}

std::string show(std::span<const Symbol> s) {
  return fmt::format("[{}]", fmt::join(s, ","));
}

class Runner {
 public:
  explicit Runner(SelftestResult& result) : result_(result) {}

  // Returns false once a counterexample has been recorded.
  bool check(bool ok, const std::string& suite,
             const std::function<std::string()>& describe) {
    ++checks_[suite];
    if (ok) return true;
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = fmt::format("{}: {}", suite, describe());
    }
    failed_.insert(suite);
    return false;
  }

  void finish() {
    for (const auto& [suite, n] : checks_)
      result_.log.push_back(fmt::format("{} {} ({} checks)",
                                        failed_.contains(suite) ? "FAIL"
                                                                : "PASS",
                                        suite, n));
  }

 private:
  SelftestResult& result_;
  std::map<std::string, std::size_t> checks_;
  std::set<std::string> failed_;
};

void check_table(Runner& run, unsigned a, unsigned n, unsigned k,
                 bool inject_fault) {
  const std::string where = fmt::format("A={} N={} k={}", a, n, k);
  ShapingTable::BuildOptions options;
  options.reverse_tie_break = inject_fault;
  const ShapingTable table = ShapingTable::build(a, n, k, options);
  const unsigned length = n + k;

  run.check(table.cumulative(table.class_count() - 1) == power(a, length),
            "counting identity", [&] { return where; });

  const std::vector<BruteEntry> brute = brute_force_order(a, length);
  BigRank prev_key;
  for (std::size_t r = 0; r < brute.size(); ++r) {
    const BigRank rank(static_cast<unsigned long>(r));
    const Sequence got = table.unrank(rank);
    const bool same = std::ranges::equal(got.symbols(), brute[r].symbols);
    if (!run.check(same, "canonical order", [&] {
          return fmt::format("{} rank={} table gives {} brute force gives {}",
                             where, r, show(got.symbols()),
                             show(brute[r].symbols));
        }))
      break;
    const BigRank back = table.rank_y(got);
    if (!run.check(back == rank, "rank/unrank round trip", [&] {
          return fmt::format("{} rank={} came back as {}", where, r,
                             to_decimal(back));
        }))
      break;
    if (!run.check(r == 0 || brute[r].key <= prev_key, "entropy order",
                   [&] { return fmt::format("{} rank={}", where, r); }))
      break;
    prev_key = brute[r].key;
  }

  // The image of the transform must be a set of A^N strings none of which
  // has higher entropy than any string left out.
  const std::size_t y_size = table.y_size().get_ui();
  std::set<std::vector<Symbol>> image;
  BigRank min_key_in;
  for (std::size_t i = 0; i < y_size; ++i) {
    const Sequence s =
        lex_unrank_full(BigRank(static_cast<unsigned long>(i)), a, n);
    const Sequence y = table.transform(s);
    image.emplace(y.symbols().begin(), y.symbols().end());
    const Sequence back = table.inverse_transform(y);
    if (!run.check(back == s, "bijection round trip", [&] {
          return fmt::format("{} {} -> {} -> {}", where, show(s.symbols()),
                             show(y.symbols()), show(back.symbols()));
        }))
      return;
  }
  run.check(image.size() == y_size, "bijection injective", [&] {
    return fmt::format("{} {} distinct images for {} inputs", where,
                       image.size(), y_size);
  });
  BigRank worst_in = -1, best_out = -1;
  for (const BruteEntry& e : brute) {
    const bool in = image.contains(e.symbols);
    BigRank& slot = in ? worst_in : best_out;
    if (in ? (slot < 0 || e.key < slot) : (slot < 0 || e.key > slot))
      slot = e.key;
  }
  run.check(best_out < 0 || worst_in >= best_out, "minimality of Y", [&] {
    return fmt::format("{} an excluded string has lower entropy than a "
                       "member",
                       where);
  });
}

void check_strings(Runner& run, unsigned a, unsigned n) {
  const BigRank total = power(a, n);
  const auto count = total.get_ui();
  const double log_a = std::log2(static_cast<double>(a));
  for (unsigned long i = 0; i < count; ++i) {
    const Sequence s = lex_unrank_full(BigRank(i), a, n);
    const double h = h0(s);
    if (!run.check(h >= -1e-12 && h <= log_a + 1e-9, "entropy range", [&] {
          return fmt::format("A={} {} has H0={}", a, show(s.symbols()), h);
        }))
      return;
    const CountVector cv = tally(s);
    const CodeBook code = build_code(cv);
    const auto bits = encoded_length(cv, code);
    if (code.distinct_symbols() >= 2) {
      const double lower = nh0(s);
      if (!run.check(lower <= static_cast<double>(bits) + 1e-9 &&
                         static_cast<double>(bits) < lower + n + 1e-9,
                     "huffman redundancy bound", [&] {
                       return fmt::format("A={} {} gives {} bits", a,
                                          show(s.symbols()), bits);
                     }))
        return;
      BigRank kraft = 0;
      unsigned longest = 0;
      for (const auto& w : code.entries()) longest = std::max(longest, w.length);
      for (const auto& w : code.entries()) kraft += power(2, longest - w.length);
      if (!run.check(kraft == power(2, longest), "kraft equality", [&] {
            return fmt::format("A={} {}", a, show(s.symbols()));
          }))
        return;
    }
    const BoundCheck b =
        check_self_information_bound(s, empirical_distribution(s));
    if (!run.check(b.holds && std::abs(b.self_information - b.nh0) <= 1e-9,
                   "self-information equality case", [&] {
                     return fmt::format("A={} {}", a, show(s.symbols()));
                   }))
      return;
  }
}

}  // namespace

SelftestResult run_selftest(const SelftestConfig& config) {
  if (config.max_alphabet < 2 || config.max_length < 1 || config.max_k < 1)
    throw Error(ErrorCode::invalid_argument,
                "selftest needs max alphabet >= 2, max length >= 1, "
                "max k >= 1");
  const double largest =
      std::pow(static_cast<double>(config.max_alphabet),
               static_cast<double>(config.max_length) + config.max_k);
  if (largest > kSelftestMaxStrings)
    throw Error(ErrorCode::bounds_exceeded,
                fmt::format("selftest bounds exceeded: {}^{} strings is more "
                            "than {}",
                            config.max_alphabet,
                            config.max_length + config.max_k,
                            kSelftestMaxStrings));
  SelftestResult result;
  Runner run(result);
  for (unsigned a = 2; a <= config.max_alphabet; ++a) {
    for (unsigned n = 1; n <= config.max_length; ++n) {
      check_strings(run, a, n);
      for (unsigned k = 1; k <= config.max_k; ++k)
        check_table(run, a, n, k, config.inject_tie_break_fault);
    }
  }
  run.finish();
  return result;
}

}  // namespace sst
