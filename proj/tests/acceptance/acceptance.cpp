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

// Acceptance gate. One PASS/FAIL line per criterion; exit 1 if any fails.
// Usage: sst_acceptance [--criterion N]...

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "sst/entropy.hpp"
#include "sst/experiment.hpp"
#include "sst/huffman.hpp"
#include "sst/rng.hpp"
#include "sst/shaping.hpp"

namespace {

using Key = std::tuple<unsigned, unsigned, unsigned>;

std::map<Key, std::shared_ptr<const sst::ShapingTable>>& table_cache() {
  static std::map<Key, std::shared_ptr<const sst::ShapingTable>> cache;
  return cache;
}

const sst::ShapingTable& table(unsigned a, unsigned n, unsigned k) {
  auto& slot = table_cache()[{a, n, k}];
  if (!slot)
    slot = std::make_shared<const sst::ShapingTable>(
        sst::ShapingTable::build(a, n, k));
  return *slot;
}

void report(int id, bool ok, const std::string& what) {
  fmt::print("criterion {}: {}  {}\n", id, ok ? "PASS" : "FAIL", what);
  std::fflush(stdout);
}

// ---- criteria 1 and 2 --------------------------------------------------

constexpr unsigned kLength = 60;
constexpr unsigned kOrder = 1;
constexpr std::uint64_t kTrials = 100000;
constexpr std::uint64_t kSeed = 20260101;

struct Row {
  unsigned alphabet;
  double nh0;      // target
  double encoded;  // target
  bool gated;
};

constexpr Row kRows[] = {{30, 270.4, 266.9, true},
                         {35, 270.3, 275.4, false},
                         {40, 286.0, 282.2, true},
                         {45, 292.8, 287.7, true},
                         {50, 297.5, 292.4, true}};

const sst::ExperimentReport& row_report(unsigned a) {
  static std::map<unsigned, sst::ExperimentReport> cache;
  auto it = cache.find(a);
  if (it != cache.end()) return it->second;
  sst::ExperimentConfig cfg;
  cfg.alphabet_size = a;
  cfg.length = kLength;
  cfg.shaping_order = kOrder;
  cfg.trials = kTrials;
  cfg.seed = kSeed;
  cfg.emit_baselines = true;
  return cache[a] = sst::run_experiment(cfg, table(a, kLength, kOrder));
}

std::uint64_t huffman_bits(std::span<const unsigned> parts) {
  const std::vector<std::uint64_t> counts(parts.begin(), parts.end());
  return sst::encoded_length(counts, sst::build_code(counts));
}

// Exact E[NH0(S)] and E[|Huffman(f(S))|] under a uniform source. Both depend
// on a string only through its partition, and f(S) is uniform on Y.
std::pair<double, double> exact_expectations(unsigned a) {
  const auto& shaped = table(a, kLength, kOrder);
  mpq_class encoded = 0;
  for (std::size_t i = 0; i <= shaped.boundary_index(); ++i) {
    const auto c = shaped.class_at(i);
    const sst::BigRank weight =
        i == shaped.boundary_index() ? shaped.boundary_take() : c.class_size;
    encoded += mpq_class(weight * huffman_bits(c.parts));
  }
  encoded /= shaped.y_size();

  // Classes of length-N strings: every class of the (A, N - 1, 1) table.
  const auto source = sst::ShapingTable::build(a, kLength - 1, 1);
  mpq_class total_weight = 0;
  double nh0 = 0.0;
  for (std::size_t i = 0; i < source.class_count(); ++i) {
    const auto c = source.class_at(i);
    mpq_class p(c.class_size, source.space_size());
    p.canonicalize();
    nh0 += p.get_d() * kLength * c.h0_value;
    total_weight += p;
  }
  if (total_weight != 1) throw std::runtime_error("class weights do not sum");
  return {nh0, encoded.get_d()};
}

bool criterion1() {
  bool ok = true;
  for (const auto& row : kRows) {
    const auto& r = row_report(row.alphabet);
    const auto [exact_nh0, exact_encoded] = exact_expectations(row.alphabet);
    const bool nh0_ok = std::abs(r.nh0_s.mean - row.nh0) <= 0.5;
    const bool enc_ok = std::abs(r.encoded_fs.mean - row.encoded) <= 1.5;
    if (row.gated) ok = ok && nh0_ok && enc_ok;
    fmt::print(
        "  |A|={:2}{}  avg NH0(S) {:.3f} (+-{:.3f}) want {:.1f}+-0.5 {}"
        "  avg |Huff(f(S))| {:.3f} (+-{:.3f}) want {:.1f}+-1.5 {}"
        "  exact {:.3f} / {:.3f}\n",
        row.alphabet, row.gated ? "" : " (not gated)", r.nh0_s.mean,
        r.nh0_s.std_error, row.nh0, nh0_ok ? "ok" : "MISS",
        r.encoded_fs.mean, r.encoded_fs.std_error, row.encoded,
        enc_ok ? "ok" : "MISS", exact_nh0, exact_encoded);
  }
  report(1, ok,
         fmt::format("target averages, N={} k={} trials={} seed={}",
                     kLength, kOrder, kTrials, kSeed));
  return ok;
}

bool criterion2() {
  bool ok = true;
  std::string detail;
  for (const auto& row : kRows) {
    if (!row.gated) continue;
    const auto& r = row_report(row.alphabet);
    const double gap = r.nh0_s.mean - r.encoded_fs.mean;
    ok = ok && gap >= 2.0;
    detail += fmt::format(" |A|={} gap={:.3f}", row.alphabet, gap);
  }
  report(2, ok, "avg |Huff(f(S))| at least 2 bits below avg NH0(S):" +
                    detail);
  return ok;
}

// ---- criteria 3 and 4: brute force over all strings ----------------------

std::vector<std::vector<sst::Symbol>> all_strings(unsigned a, unsigned n) {
  std::vector<std::vector<sst::Symbol>> out;
  std::vector<sst::Symbol> s(n, 0);
  while (true) {
    out.push_back(s);
    std::size_t p = n;
    while (p > 0 && ++s[p - 1] == a) s[--p] = 0;
    if (p == 0) break;
  }
  return out;
}

struct Ranked {
  std::uint64_t key;  // prod c^c, fits for these lengths
  std::vector<unsigned> parts;
  std::vector<unsigned> counts;
  std::vector<sst::Symbol> s;
  double h0;
};

// Every string of length L sorted lowest H0 first, ties broken by
// partition, then count vector, then the string itself.
std::vector<Ranked> sorted_space(unsigned a, unsigned length) {
  std::vector<Ranked> all;
  for (auto& s : all_strings(a, length)) {
    Ranked r;
    r.counts.assign(a, 0);
    for (auto x : s) ++r.counts[x];
    r.key = 1;
    std::vector<std::uint64_t> wide;
    for (auto c : r.counts) {
      for (unsigned i = 0; i < c; ++i) r.key *= c;
      if (c) r.parts.push_back(c);
      wide.push_back(c);
    }
    std::sort(r.parts.begin(), r.parts.end(), std::greater<>());
    r.h0 = sst::h0(wide);
    r.s = std::move(s);
    all.push_back(std::move(r));
  }
  std::sort(all.begin(), all.end(), [](const Ranked& x, const Ranked& y) {
    if (x.key != y.key) return x.key > y.key;
    return std::tie(x.parts, x.counts, x.s) < std::tie(y.parts, y.counts, y.s);
  });
  return all;
}

bool criterion3() {
  bool ok = true;
  unsigned configs = 0;
  for (unsigned a : {2u, 3u})
    for (unsigned n : {2u, 3u, 4u})
      for (unsigned k : {1u, 2u}) {
        const auto& t = table(a, n, k);
        const auto sorted = sorted_space(a, n + k);
        const auto inputs = all_strings(a, n);
        std::multiset<double> image_h0, lowest_h0;
        std::set<std::vector<sst::Symbol>> image;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
          const sst::Sequence s(inputs[i], a);
          const auto y = t.transform(s);
          const std::vector<sst::Symbol> ys(y.symbols().begin(),
                                            y.symbols().end());
          // Input i has lex rank i, so it must land on the i-th lowest.
          if (ys != sorted[i].s || t.inverse_transform(y) != s) ok = false;
          image.insert(ys);
          image_h0.insert(std::round(sst::h0(y) * 1e12));
          lowest_h0.insert(std::round(sorted[i].h0 * 1e12));
        }
        if (image.size() != inputs.size() || image_h0 != lowest_h0) ok = false;
        // Nothing outside Y has strictly lower H0 than something inside.
        const double worst_in = sorted[inputs.size() - 1].h0;
        for (std::size_t j = inputs.size(); j < sorted.size(); ++j)
          if (sorted[j].h0 < worst_in - 1e-12) ok = false;
        ++configs;
      }
  report(3, ok,
         fmt::format("bijection onto the A^N lowest-H0 strings, {} configs",
                     configs));
  return ok;
}

bool criterion4() {
  bool ok = true;
  std::string detail;
  for (unsigned n = 2; n <= 5; ++n) {
    sst::ExperimentConfig cfg;
    cfg.alphabet_size = 3;
    cfg.length = n;
    cfg.shaping_order = 1;
    cfg.exhaustive = true;
    const auto rep = sst::run_experiment(cfg, table(3, n, 1));
    const auto sorted = sorted_space(3, n + 1);
    const std::size_t count = all_strings(3, n).size();
    double brute = 0.0;
    for (std::size_t i = 0; i < count; ++i) brute += (n + 1) * sorted[i].h0;
    brute /= static_cast<double>(count);
    const double err = std::abs(rep.nh0_fs.mean - brute);
    ok = ok && err <= 1e-9;
    detail += fmt::format(" N={}:{:.12f}", n, rep.nh0_fs.mean);
  }
  report(4, ok, "exhaustive avg (N+k)H0(f(S)) vs brute force, A=3 k=1:" +
                    detail);
  return ok;
}

// ---- criteria 5 and 6: random instances ---------------------------------

std::uint64_t merge_sum(const std::vector<std::uint64_t>& counts) {
  std::multiset<std::uint64_t> w;
  for (auto c : counts)
    if (c) w.insert(c);
  std::uint64_t total = 0;
  while (w.size() > 1) {
    const auto x = *w.begin();
    w.erase(w.begin());
    const auto y = *w.begin();
    w.erase(w.begin());
    total += x + y;
    w.insert(x + y);
  }
  return total;
}

bool criterion5() {
  bool ok = true;
  sst::SplitMix64 rng(5);
  constexpr int kSequences = 10000;
  for (int i = 0; i < kSequences; ++i) {
    const auto a = static_cast<unsigned>(2 + rng.below(49));
    const auto n = static_cast<std::size_t>(1 + rng.below(200));
    const auto s = sst::generate(a, n, rng);
    const auto counts = sst::tally(s).counts;
    const auto code = sst::build_code(counts);

    unsigned deepest = 0;
    for (const auto& w : code.entries()) deepest = std::max(deepest, w.length);
    mpz_class kraft = 0;
    for (const auto& w : code.entries()) {
      mpz_class term;
      mpz_ui_pow_ui(term.get_mpz_t(), 2, deepest - w.length);
      kraft += term;
    }
    mpz_class full;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, deepest);

    const auto bits = sst::encoded_length(counts, code);
    const double entropy_bits = sst::nh0(s);
    const bool good = kraft == full && bits + 1e-9 >= entropy_bits &&
                      static_cast<double>(bits) <
                          entropy_bits + static_cast<double>(n) &&
                      bits == merge_sum(counts);
    if (!good) {
      if (ok) fmt::print("  first failure: sequence {} A={} N={}\n", i, a, n);
      ok = false;
    }
  }
  report(5, ok,
         fmt::format("Kraft equality and entropy bounds over {} sequences, "
                     "lengths match a merge-sum oracle",
                     kSequences));
  return ok;
}

bool criterion6() {
  bool ok = true;
  sst::SplitMix64 rng(6);
  constexpr int kPairs = 1000;
  double worst_gap = INFINITY;
  double worst_equality = 0.0;
  for (int i = 0; i < kPairs; ++i) {
    const auto a = static_cast<unsigned>(2 + rng.below(49));
    const auto n = static_cast<std::size_t>(1 + rng.below(200));
    const auto s = sst::generate(a, n, rng);
    std::vector<double> q(a);
    double sum = 0.0;
    for (auto& x : q) sum += x = 1.0 + static_cast<double>(rng.below(1000));
    for (auto& x : q) x /= sum;
    // Renormalize the last entry so the total is 1 to within rounding.
    double head = 0.0;
    for (std::size_t j = 0; j + 1 < q.size(); ++j) head += q[j];
    q.back() = 1.0 - head;
    const auto check = sst::check_self_information_bound(
        s, sst::SourceDistribution(q));
    worst_gap = std::min(worst_gap, check.self_information - check.nh0);
    ok = ok && check.self_information >= check.nh0 - 1e-9;

    const auto empirical = sst::empirical_distribution(s);
    const double equal = sst::self_information(s, empirical);
    worst_equality = std::max(worst_equality, std::abs(equal - sst::nh0(s)));
  }
  ok = ok && worst_equality <= 1e-9;
  report(6, ok,
         fmt::format("self-information >= NH0 over {} pairs (min gap {:.3g}), "
                     "equality at empirical Q (max err {:.3g})",
                     kPairs, worst_gap, worst_equality));
  return ok;
}

// ---- criteria 7 and 8 ---------------------------------------------------

bool criterion7() {
  bool ok = true;
  std::vector<sst::ExperimentConfig> configs(2);
  configs[0].alphabet_size = 30;
  configs[0].trials = 20000;
  configs[0].seed = 7;
  configs[0].emit_baselines = true;
  configs[1].alphabet_size = 3;
  configs[1].length = 5;
  configs[1].exhaustive = true;
  configs[1].emit_baselines = true;
  for (auto cfg : configs) {
    const auto& t = table(cfg.alphabet_size, cfg.length, cfg.shaping_order);
    std::string first;
    for (unsigned workers : {1u, 1u, 3u, 8u}) {
      cfg.workers = workers;
      const std::vector<sst::ExperimentReport> reps{
          sst::run_experiment(cfg, t)};
      const auto bytes = sst::format_json(reps, false) + sst::format_csv(reps);
      if (first.empty())
        first = bytes;
      else
        ok = ok && bytes == first;
    }
  }
  report(7, ok, "byte-identical reports across repeated runs and 1/3/8 workers");
  return ok;
}

bool criterion8() {
  // Tables for criteria 1 to 4; builds any not already built this run.
  for (const auto& row : kRows) table(row.alphabet, kLength, kOrder);
  for (unsigned a : {2u, 3u})
    for (unsigned n : {2u, 3u, 4u})
      for (unsigned k : {1u, 2u}) table(a, n, k);
  for (unsigned n = 2; n <= 5; ++n) table(3, n, 1);

  bool ok = true;
  for (const auto& [key, t] : table_cache()) {
    const auto [a, n, k] = key;
    sst::BigRank sum = 0;
    for (std::size_t i = 0; i < t->class_count(); ++i)
      sum += t->class_at(i).class_size;
    ok = ok && sum == sst::power(a, n + k);
  }
  report(8, ok,
         fmt::format("sum of class sizes == A^(N+k) for {} tables",
                     table_cache().size()));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      wanted.push_back(std::atoi(argv[++i]));
    } else {
      fmt::print(stderr, "usage: {} [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8};

  bool (*const criteria[])() = {criterion1, criterion2, criterion3,
                                criterion4, criterion5, criterion6,
                                criterion7, criterion8};
  bool ok = true;
  for (int id : wanted) {
    if (id < 1 || id > 8) {
      fmt::print(stderr, "no criterion {}\n", id);
      return 2;
    }
    try {
      ok = criteria[id - 1]() && ok;
    } catch (const std::exception& e) {
      report(id, false, fmt::format("error: {}", e.what()));
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
