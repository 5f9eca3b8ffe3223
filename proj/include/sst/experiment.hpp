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

#ifndef SST_EXPERIMENT_HPP
#define SST_EXPERIMENT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sst/rng.hpp"
#include "sst/sequence.hpp"
#include "sst/shaping.hpp"

namespace sst {

struct ExperimentConfig {
  unsigned alphabet_size = 30;
  unsigned length = 60;
  unsigned shaping_order = 1;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  // Adds codebook_cost(A) to both Huffman encodings (of S and of f(S)).
  bool include_codebook_cost = false;
  // Adds the baseline columns to CSV output. Baselines are always computed.
  bool emit_baselines = false;
  // Runs every one of the A^N inputs once instead of sampling.
  bool exhaustive = false;
  // 0 selects std::thread::hardware_concurrency(). Does not affect results.
  unsigned workers = 0;

  // Throws Error(invalid_argument).
  void validate() const;
};

struct TrialResult {
  double nh0_s = 0.0;            // N * H0(S)
  std::uint64_t encoded_fs = 0;  // Huffman payload bits of f(S)
  double nh0_fs = 0.0;           // (N + k) * H0(f(S))
  std::uint64_t encoded_s = 0;   // Huffman payload bits of S
};

struct Statistic {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string rng;
  std::string mode;  // "monte-carlo" or "exhaustive"
  std::uint64_t trials = 0;
  Statistic nh0_s;
  Statistic encoded_fs;
  Statistic nh0_fs;
  Statistic encoded_s;
  double delta = 0.0;  // nh0_s.mean - encoded_fs.mean
  std::uint64_t codebook_cost_bits = 0;
  double wall_time_s = 0.0;
};

// N symbols, each uniform on [0, A).
Sequence generate(unsigned alphabet_size, std::size_t length,
                  SplitMix64& rng);

TrialResult run_trial(const ShapingTable& table, const Sequence& s,
                      bool include_codebook_cost = false);

// Per-trial results in trial-index order.
std::vector<TrialResult> run_trials(const ExperimentConfig& config,
                                    const ShapingTable& table);

// Reduces per-trial results in index order: bit counts as exact integer
// sums, entropies with compensated summation.
ExperimentReport summarize(const ExperimentConfig& config,
                           std::span<const TrialResult> results);

ExperimentReport run_experiment(const ExperimentConfig& config,
                                const ShapingTable& table);
ExperimentReport run_experiment(const ExperimentConfig& config);

// A single report is written as a JSON object, several as an array. With
// include_timing false, wall_time_s is null so the output only depends on
// the configurations.
std::string format_json(std::span<const ExperimentReport> reports,
                        bool include_timing);
std::string format_csv(std::span<const ExperimentReport> reports);
// Human-readable table, one row per alphabet size.
std::string format_summary(std::span<const ExperimentReport> reports);

}  // namespace sst

#endif  // SST_EXPERIMENT_HPP
