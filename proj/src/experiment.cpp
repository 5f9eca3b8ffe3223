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

#include "sst/experiment.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "sst/entropy.hpp"
#include "sst/error.hpp"
#include "sst/huffman.hpp"

namespace sst {

namespace {

// Kahan-Babuska (Neumaier) summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <typename Get>
double std_error(std::span<const TrialResult> results, double mean, Get get) {
  if (results.size() < 2) return 0.0;
  const auto n = static_cast<double>(results.size());
  CompensatedSum sq;
  for (const auto& r : results) {
    const double d = static_cast<double>(get(r)) - mean;
    sq.add(d * d);
  }
  return std::sqrt(sq.value() / (n - 1.0)) / std::sqrt(n);
}

template <typename Get>
Statistic reduce(std::span<const TrialResult> results, Get get) {
  CompensatedSum sum;
  for (const auto& r : results) sum.add(get(r));
  Statistic s;
  s.mean = sum.value() / static_cast<double>(results.size());
  s.std_error = std_error(results, s.mean, get);
  return s;
}

template <typename Get>
Statistic reduce_bits(std::span<const TrialResult> results, Get get) {
  std::uint64_t total = 0;
  for (const auto& r : results) total += get(r);
  Statistic s;
  s.mean = static_cast<double>(total) / static_cast<double>(results.size());
  s.std_error = std_error(results, s.mean, get);
  return s;
}

std::uint64_t exhaustive_trials(const ExperimentConfig& c) {
  const BigRank count = power(c.alphabet_size, c.length);
  if (count > 50'000'000)
    throw Error(ErrorCode::bounds_exceeded,
                fmt::format("exhaustive mode needs A^N <= 50000000, got {}^{}",
                            c.alphabet_size, c.length));
  return count.get_ui();
}

}  // namespace

void ExperimentConfig::validate() const {
  if (alphabet_size < 2 || length < 1 || shaping_order < 1 ||
      (!exhaustive && trials < 1))
    throw Error(ErrorCode::invalid_argument,
                fmt::format("invalid config: need A >= 2, N >= 1, k >= 1, "
                            "trials >= 1 (got A={}, N={}, k={}, trials={})",
                            alphabet_size, length, shaping_order, trials));
  if (exhaustive) exhaustive_trials(*this);
}

Sequence generate(unsigned alphabet_size, std::size_t length,
                  SplitMix64& rng) {
  std::vector<Symbol> symbols(length);
  for (auto& x : symbols) x = static_cast<Symbol>(rng.below(alphabet_size));
  return Sequence(std::move(symbols), alphabet_size);
}

TrialResult run_trial(const ShapingTable& table, const Sequence& s,
                      bool include_codebook_cost) {
  const Sequence y = table.transform(s);
  const CountVector s_counts = tally(s);
  const CountVector y_counts = tally(y);
  const std::uint64_t extra =
      include_codebook_cost ? codebook_cost(s.alphabet_size()) : 0;

  TrialResult r;
  r.nh0_s = nh0(s_counts.counts);
  r.nh0_fs = nh0(y_counts.counts);
  r.encoded_fs = encoded_length(y_counts, build_code(y_counts)) + extra;
  r.encoded_s = encoded_length(s_counts, build_code(s_counts)) + extra;
  return r;
}

std::vector<TrialResult> run_trials(const ExperimentConfig& config,
                                    const ShapingTable& table) {
  config.validate();
  if (table.alphabet_size() != config.alphabet_size ||
      table.input_length() != config.length ||
      table.shaping_order() != config.shaping_order)
    throw Error(ErrorCode::invalid_argument,
                "shaping table does not match the experiment config");

  const std::uint64_t trials =
      config.exhaustive ? exhaustive_trials(config) : config.trials;
  std::vector<TrialResult> results(trials);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (config.exhaustive) {
        const Sequence s =
            lex_unrank_full(BigRank(static_cast<unsigned long>(i)),
                            config.alphabet_size, config.length);
        results[i] = run_trial(table, s, config.include_codebook_cost);
      } else {
        SplitMix64 rng = SplitMix64::for_trial(config.seed, i);
        const Sequence s = generate(config.alphabet_size, config.length, rng);
        results[i] = run_trial(table, s, config.include_codebook_cost);
      }
    }
  };

  unsigned workers = config.workers != 0
                         ? config.workers
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, trials));
  if (workers <= 1) {
    work(0, trials);
    return results;
  }

  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = trials * w / workers;
    const std::uint64_t end = trials * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

ExperimentReport summarize(const ExperimentConfig& config,
                           std::span<const TrialResult> results) {
  if (results.empty())
    throw Error(ErrorCode::invalid_argument, "no trial results");
  ExperimentReport rep;
  rep.config = config;
  rep.rng = SplitMix64::kName;
  rep.mode = config.exhaustive ? "exhaustive" : "monte-carlo";
  rep.trials = results.size();
  rep.nh0_s = reduce(results, [](const TrialResult& r) { return r.nh0_s; });
  rep.nh0_fs = reduce(results, [](const TrialResult& r) { return r.nh0_fs; });
  rep.encoded_fs = reduce_bits(
      results, [](const TrialResult& r) { return r.encoded_fs; });
  rep.encoded_s = reduce_bits(
      results, [](const TrialResult& r) { return r.encoded_s; });
  rep.delta = rep.nh0_s.mean - rep.encoded_fs.mean;
  rep.codebook_cost_bits =
      config.include_codebook_cost ? codebook_cost(config.alphabet_size) : 0;
  return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& config,
                                const ShapingTable& table) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TrialResult> results = run_trials(config, table);
  ExperimentReport rep = summarize(config, results);
  rep.wall_time_s = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const ShapingTable table = ShapingTable::build(
      config.alphabet_size, config.length, config.shaping_order);
  ExperimentReport rep = run_experiment(config, table);
  rep.wall_time_s = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return rep;
}

namespace {

std::string json_object(const ExperimentReport& r, bool include_timing,
                        const char* indent) {
  const auto& c = r.config;
  std::string out = "{\n";
  auto field = [&](const char* key, const std::string& value, bool last) {
    out += fmt::format("{}  \"{}\": {}{}\n", indent, key, value,
                       last ? "" : ",");
  };
  auto real = [](double v) { return fmt::format("{:.6f}", v); };
  field("alphabet_size", fmt::format("{}", c.alphabet_size), false);
  field("n", fmt::format("{}", c.length), false);
  field("k", fmt::format("{}", c.shaping_order), false);
  field("trials", fmt::format("{}", r.trials), false);
  field("seed", fmt::format("{}", c.seed), false);
  field("rng", fmt::format("\"{}\"", r.rng), false);
  field("mode", fmt::format("\"{}\"", r.mode), false);
  field("avg_nh0_s", real(r.nh0_s.mean), false);
  field("stderr_nh0_s", real(r.nh0_s.std_error), false);
  field("avg_encoded_fs", real(r.encoded_fs.mean), false);
  field("stderr_encoded_fs", real(r.encoded_fs.std_error), false);
  field("avg_nh0_fs", real(r.nh0_fs.mean), false);
  field("stderr_nh0_fs", real(r.nh0_fs.std_error), false);
  field("avg_encoded_s", real(r.encoded_s.mean), false);
  field("stderr_encoded_s", real(r.encoded_s.std_error), false);
  field("delta", real(r.delta), false);
  field("include_codebook_cost", c.include_codebook_cost ? "true" : "false",
        false);
  field("codebook_cost_bits", fmt::format("{}", r.codebook_cost_bits), false);
  field("wall_time_s", include_timing ? real(r.wall_time_s) : "null", true);
  out += fmt::format("{}}}", indent);
  return out;
}

}  // namespace

std::string format_json(std::span<const ExperimentReport> reports,
                        bool include_timing) {
  if (reports.size() == 1)
    return json_object(reports[0], include_timing, "") + "\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += "  " + json_object(reports[i], include_timing, "  ");
    out += i + 1 < reports.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string format_csv(std::span<const ExperimentReport> reports) {
  const bool baselines =
      !reports.empty() && reports.front().config.emit_baselines;
  std::string out = "alphabet_size,avg_nh0_s,avg_encoded_fs";
  if (baselines) out += ",avg_nh0_fs,avg_encoded_s";
  out += "\n";
  for (const auto& r : reports) {
    out += fmt::format("{},{:.6f},{:.6f}", r.config.alphabet_size,
                       r.nh0_s.mean, r.encoded_fs.mean);
    if (baselines)
      out += fmt::format(",{:.6f},{:.6f}", r.nh0_fs.mean, r.encoded_s.mean);
    out += "\n";
  }
  return out;
}

std::string format_summary(std::span<const ExperimentReport> reports) {
  std::string out = fmt::format("{:>5} {:>14} {:>18} {:>20} {:>16} {:>11}\n",
                                "|A|", "avg NH0(S)", "avg |Huff(f(S))|",
                                "avg (N+k)H0(f(S))", "avg |Huff(S)|",
                                "delta");
  for (const auto& r : reports)
    out += fmt::format("{:>5} {:>14.6f} {:>18.6f} {:>20.6f} {:>16.6f} "
                       "{:>11.6f}\n",
                       r.config.alphabet_size, r.nh0_s.mean,
                       r.encoded_fs.mean, r.nh0_fs.mean, r.encoded_s.mean,
                       r.delta);
  return out;
}

}  // namespace sst
