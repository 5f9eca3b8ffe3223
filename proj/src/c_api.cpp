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

#include "sst/sst.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "sst/entropy.hpp"
#include "sst/error.hpp"
#include "sst/experiment.hpp"
#include "sst/huffman.hpp"
#include "sst/selftest.hpp"
#include "sst/shaping.hpp"

struct sst_table {
  sst::ShapingTable table;
};

struct sst_codebook {
  sst::CodeBook code;
};

struct sst_report {
  sst::ExperimentReport report;
};

namespace {

thread_local std::string last_error;

sst_status to_status(sst::ErrorCode code) {
  using sst::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return SST_ERR_INVALID_ARGUMENT;
    case ErrorCode::out_of_range: return SST_ERR_OUT_OF_RANGE;
    case ErrorCode::shape_mismatch: return SST_ERR_SHAPE_MISMATCH;
    case ErrorCode::not_in_shaped_set: return SST_ERR_NOT_IN_SHAPED_SET;
    case ErrorCode::impossible_emission: return SST_ERR_IMPOSSIBLE_EMISSION;
    case ErrorCode::multiset_mismatch: return SST_ERR_MULTISET_MISMATCH;
    case ErrorCode::code_mismatch: return SST_ERR_CODE_MISMATCH;
    case ErrorCode::io: return SST_ERR_IO;
    case ErrorCode::corrupt_cache: return SST_ERR_CORRUPT_CACHE;
    case ErrorCode::bounds_exceeded: return SST_ERR_BOUNDS_EXCEEDED;
    case ErrorCode::internal: return SST_ERR_INTERNAL;
  }
  return SST_ERR_INTERNAL;
}

sst_status fail(sst_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
sst_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const sst::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SST_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SST_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SST_ERR_INTERNAL, "unknown error");
  }
}

sst::Sequence make_sequence(const uint32_t* symbols, size_t length,
                            uint32_t alphabet_size) {
  if (symbols == nullptr && length != 0)
    throw sst::Error(sst::ErrorCode::invalid_argument, "null symbol array");
  return sst::Sequence(std::vector<sst::Symbol>(symbols, symbols + length),
                       alphabet_size);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sst_status copy_out(const sst::Sequence& s, uint32_t* out,
                    size_t out_capacity) {
  if (out == nullptr) return fail(SST_ERR_INVALID_ARGUMENT, "null output");
  if (out_capacity < s.length())
    return fail(SST_ERR_BUFFER_TOO_SMALL,
                "output buffer holds " + std::to_string(out_capacity) +
                    " symbols, need " + std::to_string(s.length()));
  std::copy(s.symbols().begin(), s.symbols().end(), out);
  return SST_OK;
}

#define SST_REQUIRE(cond)                                              \
  do {                                                                 \
    if (!(cond)) return fail(SST_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* sst_version(void) { return "1.0.0"; }

const char* sst_last_error(void) { return last_error.c_str(); }

const char* sst_status_name(sst_status status) {
  switch (status) {
    case SST_OK: return "ok";
    case SST_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SST_ERR_OUT_OF_RANGE: return "out of range";
    case SST_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case SST_ERR_NOT_IN_SHAPED_SET: return "not in shaped set";
    case SST_ERR_IMPOSSIBLE_EMISSION: return "impossible emission";
    case SST_ERR_MULTISET_MISMATCH: return "multiset mismatch";
    case SST_ERR_CODE_MISMATCH: return "code mismatch";
    case SST_ERR_IO: return "i/o error";
    case SST_ERR_CORRUPT_CACHE: return "corrupt cache";
    case SST_ERR_BOUNDS_EXCEEDED: return "bounds exceeded";
    case SST_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SST_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sst_string_free(char* s) { std::free(s); }

sst_status sst_entropy(const uint32_t* symbols, size_t length,
                       uint32_t alphabet_size, double* h0, double* nh0) {
  return guarded([&] {
    const sst::Sequence s = make_sequence(symbols, length, alphabet_size);
    const double h = sst::h0(s);
    if (h0 != nullptr) *h0 = h;
    if (nh0 != nullptr) *nh0 = sst::nh0(s);
    return SST_OK;
  });
}

sst_status sst_self_information(const uint32_t* symbols, size_t length,
                                uint32_t alphabet_size, const double* probs,
                                double* bits) {
  return guarded([&] {
    SST_REQUIRE(probs != nullptr && bits != nullptr);
    const sst::Sequence s = make_sequence(symbols, length, alphabet_size);
    const sst::SourceDistribution q(
        std::vector<double>(probs, probs + alphabet_size));
    *bits = sst::self_information(s, q);
    return SST_OK;
  });
}

sst_status sst_check_bound(const uint32_t* symbols, size_t length,
                           uint32_t alphabet_size, const double* probs,
                           double* self_information, double* nh0,
                           int* holds) {
  return guarded([&] {
    SST_REQUIRE(probs != nullptr);
    const sst::Sequence s = make_sequence(symbols, length, alphabet_size);
    const sst::SourceDistribution q(
        std::vector<double>(probs, probs + alphabet_size));
    const sst::BoundCheck b = sst::check_self_information_bound(s, q);
    if (self_information != nullptr) *self_information = b.self_information;
    if (nh0 != nullptr) *nh0 = b.nh0;
    if (holds != nullptr) *holds = b.holds ? 1 : 0;
    return SST_OK;
  });
}

sst_status sst_table_build(uint32_t alphabet_size, uint32_t input_length,
                           uint32_t shaping_order, sst_table** out) {
  return guarded([&] {
    SST_REQUIRE(out != nullptr);
    *out = new sst_table{
        sst::ShapingTable::build(alphabet_size, input_length, shaping_order)};
    return SST_OK;
  });
}

sst_status sst_table_open_cached(const char* cache_dir,
                                 uint32_t alphabet_size,
                                 uint32_t input_length,
                                 uint32_t shaping_order, sst_table** out) {
  return guarded([&] {
    SST_REQUIRE(cache_dir != nullptr && out != nullptr);
    *out = new sst_table{sst::ShapingTable::open_cached(
        cache_dir, alphabet_size, input_length, shaping_order)};
    return SST_OK;
  });
}

sst_status sst_table_load(const char* path, sst_table** out) {
  return guarded([&] {
    SST_REQUIRE(path != nullptr && out != nullptr);
    *out = new sst_table{sst::ShapingTable::load_file(path)};
    return SST_OK;
  });
}

sst_status sst_table_save(const sst_table* table, const char* path) {
  return guarded([&] {
    SST_REQUIRE(table != nullptr && path != nullptr);
    table->table.save_file(path);
    return SST_OK;
  });
}

void sst_table_free(sst_table* table) { delete table; }

sst_status sst_table_get_info(const sst_table* table, sst_table_info* info) {
  return guarded([&] {
    SST_REQUIRE(table != nullptr && info != nullptr);
    const auto& t = table->table;
    info->alphabet_size = t.alphabet_size();
    info->input_length = t.input_length();
    info->shaping_order = t.shaping_order();
    info->shaped_length = t.shaped_length();
    info->class_count = t.class_count();
    info->boundary_index = t.boundary_index();
    return SST_OK;
  });
}

sst_status sst_table_size(const sst_table* table, int which, char** decimal) {
  return guarded([&] {
    SST_REQUIRE(table != nullptr && decimal != nullptr);
    const auto& t = table->table;
    switch (which) {
      case 0: *decimal = duplicate(sst::to_decimal(t.y_size())); break;
      case 1: *decimal = duplicate(sst::to_decimal(t.space_size())); break;
      case 2: *decimal = duplicate(sst::to_decimal(t.boundary_take())); break;
      default: return fail(SST_ERR_INVALID_ARGUMENT, "unknown size selector");
    }
    return SST_OK;
  });
}

sst_status sst_transform(const sst_table* table, const uint32_t* symbols,
                         size_t length, uint32_t* out, size_t out_capacity) {
  return guarded([&] {
    SST_REQUIRE(table != nullptr);
    const auto& t = table->table;
    return copy_out(
        t.transform(make_sequence(symbols, length, t.alphabet_size())), out,
        out_capacity);
  });
}

sst_status sst_inverse_transform(const sst_table* table,
                                 const uint32_t* symbols, size_t length,
                                 uint32_t* out, size_t out_capacity) {
  return guarded([&] {
    SST_REQUIRE(table != nullptr);
    const auto& t = table->table;
    return copy_out(t.inverse_transform(
                        make_sequence(symbols, length, t.alphabet_size())),
                    out, out_capacity);
  });
}

sst_status sst_rank_y(const sst_table* table, const uint32_t* symbols,
                      size_t length, char** decimal) {
  return guarded([&] {
    SST_REQUIRE(table != nullptr && decimal != nullptr);
    const auto& t = table->table;
    *decimal = duplicate(sst::to_decimal(
        t.rank_y(make_sequence(symbols, length, t.alphabet_size()))));
    return SST_OK;
  });
}

sst_status sst_unrank_y(const sst_table* table, const char* decimal,
                        uint32_t* out, size_t out_capacity) {
  return guarded([&] {
    SST_REQUIRE(table != nullptr && decimal != nullptr);
    return copy_out(table->table.unrank_y(sst::from_decimal(decimal)), out,
                    out_capacity);
  });
}

sst_status sst_huffman_build(const uint64_t* counts, uint32_t alphabet_size,
                             sst_codebook** out) {
  return guarded([&] {
    SST_REQUIRE(counts != nullptr && out != nullptr);
    *out = new sst_codebook{
        sst::build_code(std::span<const uint64_t>(counts, alphabet_size))};
    return SST_OK;
  });
}

void sst_codebook_free(sst_codebook* code) { delete code; }

size_t sst_codebook_size(const sst_codebook* code) {
  return code == nullptr ? 0 : code->code.distinct_symbols();
}

sst_status sst_codebook_entry(const sst_codebook* code, size_t index,
                              uint32_t* symbol, uint32_t* length,
                              const char** bits) {
  return guarded([&] {
    SST_REQUIRE(code != nullptr);
    const auto entries = code->code.entries();
    if (index >= entries.size())
      return fail(SST_ERR_OUT_OF_RANGE, "codebook index out of range");
    const auto& w = entries[index];
    if (symbol != nullptr) *symbol = w.symbol;
    if (length != nullptr) *length = w.length;
    if (bits != nullptr) *bits = w.bits.c_str();
    return SST_OK;
  });
}

sst_status sst_encoded_length(const uint64_t* counts, uint32_t alphabet_size,
                              const sst_codebook* code, uint64_t* bits) {
  return guarded([&] {
    SST_REQUIRE(counts != nullptr && code != nullptr && bits != nullptr);
    *bits = sst::encoded_length(
        std::span<const uint64_t>(counts, alphabet_size), code->code);
    return SST_OK;
  });
}

uint64_t sst_codebook_cost(uint32_t alphabet_size) {
  return sst::codebook_cost(alphabet_size);
}

void sst_experiment_config_init(sst_experiment_config* config) {
  if (config == nullptr) return;
  const sst::ExperimentConfig d;
  config->alphabet_size = d.alphabet_size;
  config->length = d.length;
  config->shaping_order = d.shaping_order;
  config->trials = d.trials;
  config->seed = d.seed;
  config->include_codebook_cost = 0;
  config->emit_baselines = 0;
  config->exhaustive = 0;
  config->workers = 0;
  config->table_cache_dir = nullptr;
}

sst_status sst_experiment_run(const sst_experiment_config* config,
                              sst_report** out) {
  return guarded([&] {
    SST_REQUIRE(config != nullptr && out != nullptr);
    sst::ExperimentConfig c;
    c.alphabet_size = config->alphabet_size;
    c.length = config->length;
    c.shaping_order = config->shaping_order;
    c.trials = config->trials;
    c.seed = config->seed;
    c.include_codebook_cost = config->include_codebook_cost != 0;
    c.emit_baselines = config->emit_baselines != 0;
    c.exhaustive = config->exhaustive != 0;
    c.workers = config->workers;
    c.validate();
    if (config->table_cache_dir == nullptr) {
      *out = new sst_report{sst::run_experiment(c)};
    } else {
      const auto start = std::chrono::steady_clock::now();
      const auto table = sst::ShapingTable::open_cached(
          config->table_cache_dir, c.alphabet_size, c.length,
          c.shaping_order);
      auto report = std::make_unique<sst_report>(
          sst_report{sst::run_experiment(c, table)});
      report->report.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      *out = report.release();
    }
    return SST_OK;
  });
}

void sst_report_free(sst_report* report) { delete report; }

sst_status sst_report_get_summary(const sst_report* report,
                                  sst_report_summary* summary) {
  return guarded([&] {
    SST_REQUIRE(report != nullptr && summary != nullptr);
    const auto& r = report->report;
    summary->trials = r.trials;
    summary->avg_nh0_s = r.nh0_s.mean;
    summary->stderr_nh0_s = r.nh0_s.std_error;
    summary->avg_encoded_fs = r.encoded_fs.mean;
    summary->stderr_encoded_fs = r.encoded_fs.std_error;
    summary->avg_nh0_fs = r.nh0_fs.mean;
    summary->stderr_nh0_fs = r.nh0_fs.std_error;
    summary->avg_encoded_s = r.encoded_s.mean;
    summary->stderr_encoded_s = r.encoded_s.std_error;
    summary->delta = r.delta;
    summary->wall_time_s = r.wall_time_s;
    return SST_OK;
  });
}

sst_status sst_reports_format(const sst_report* const* reports, size_t count,
                              int format, int include_timing, char** out) {
  return guarded([&] {
    SST_REQUIRE(reports != nullptr && out != nullptr && count > 0);
    std::vector<sst::ExperimentReport> rs;
    rs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      SST_REQUIRE(reports[i] != nullptr);
      rs.push_back(reports[i]->report);
    }
    switch (format) {
      case 0: *out = duplicate(sst::format_json(rs, include_timing != 0)); break;
      case 1: *out = duplicate(sst::format_csv(rs)); break;
      case 2: *out = duplicate(sst::format_summary(rs)); break;
      default: return fail(SST_ERR_INVALID_ARGUMENT, "unknown report format");
    }
    return SST_OK;
  });
}

void sst_selftest_config_init(sst_selftest_config* config) {
  if (config == nullptr) return;
  const sst::SelftestConfig d;
  config->max_alphabet = d.max_alphabet;
  config->max_length = d.max_length;
  config->max_k = d.max_k;
  config->inject_tie_break_fault = 0;
}

sst_status sst_selftest_run(const sst_selftest_config* config, int* passed,
                            char** log) {
  return guarded([&] {
    SST_REQUIRE(config != nullptr && passed != nullptr);
    sst::SelftestConfig c;
    c.max_alphabet = config->max_alphabet;
    c.max_length = config->max_length;
    c.max_k = config->max_k;
    c.inject_tie_break_fault = config->inject_tie_break_fault != 0;
    const sst::SelftestResult r = sst::run_selftest(c);
    *passed = r.passed ? 1 : 0;
    if (log != nullptr) {
      std::string text;
      for (const auto& line : r.log) text += line + "\n";
      if (!r.passed) text += "counterexample: " + r.counterexample + "\n";
      *log = duplicate(text);
    }
    return SST_OK;
  });
}

}  // extern "C"
