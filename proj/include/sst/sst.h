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

/*
 * C interface to the set-shaping laboratory.
 *
 * Every function that can fail returns an sst_status. On failure a
 * description is available from sst_last_error() on the same thread until
 * the next failing call. Objects are opaque handles released with the
 * matching *_free function. Strings returned through char** out-parameters
 * are owned by the caller and released with sst_string_free().
 *
 * Big integers (ranks, set sizes) cross the interface as decimal strings.
 */
#ifndef SST_SST_H
#define SST_SST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SST_BUILDING_LIBRARY)
#    define SST_API __declspec(dllexport)
#  else
#    define SST_API __declspec(dllimport)
#  endif
#else
#  define SST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sst_status {
  SST_OK = 0,
  SST_ERR_INVALID_ARGUMENT = 1,
  SST_ERR_OUT_OF_RANGE = 2,
  SST_ERR_SHAPE_MISMATCH = 3,
  SST_ERR_NOT_IN_SHAPED_SET = 4,
  SST_ERR_IMPOSSIBLE_EMISSION = 5,
  SST_ERR_MULTISET_MISMATCH = 6,
  SST_ERR_CODE_MISMATCH = 7,
  SST_ERR_IO = 8,
  SST_ERR_CORRUPT_CACHE = 9,
  SST_ERR_BOUNDS_EXCEEDED = 10,
  SST_ERR_BUFFER_TOO_SMALL = 11,
  SST_ERR_INTERNAL = 12
} sst_status;

SST_API const char* sst_version(void);
SST_API const char* sst_last_error(void);
SST_API const char* sst_status_name(sst_status status);
SST_API void sst_string_free(char* s);

/* ---- entropy ---------------------------------------------------------- */

SST_API sst_status sst_entropy(const uint32_t* symbols, size_t length,
                               uint32_t alphabet_size, double* h0,
                               double* nh0);

/* probs has alphabet_size entries. */
SST_API sst_status sst_self_information(const uint32_t* symbols,
                                        size_t length,
                                        uint32_t alphabet_size,
                                        const double* probs, double* bits);

SST_API sst_status sst_check_bound(const uint32_t* symbols, size_t length,
                                   uint32_t alphabet_size,
                                   const double* probs,
                                   double* self_information, double* nh0,
                                   int* holds);

/* ---- shaping ---------------------------------------------------------- */

typedef struct sst_table sst_table;

typedef struct sst_table_info {
  uint32_t alphabet_size;
  uint32_t input_length;
  uint32_t shaping_order;
  uint32_t shaped_length;
  uint64_t class_count;
  uint64_t boundary_index;
} sst_table_info;

SST_API sst_status sst_table_build(uint32_t alphabet_size,
                                   uint32_t input_length,
                                   uint32_t shaping_order, sst_table** out);
/* Loads from cache_dir when a valid cache file exists, otherwise builds
 * and writes it. */
SST_API sst_status sst_table_open_cached(const char* cache_dir,
                                         uint32_t alphabet_size,
                                         uint32_t input_length,
                                         uint32_t shaping_order,
                                         sst_table** out);
SST_API sst_status sst_table_load(const char* path, sst_table** out);
SST_API sst_status sst_table_save(const sst_table* table, const char* path);
SST_API void sst_table_free(sst_table* table);

SST_API sst_status sst_table_get_info(const sst_table* table,
                                      sst_table_info* info);
/* Decimal strings: which = 0 for |Y| = A^N, 1 for A^(N+k), 2 for the
 * number of boundary-class strings taken into Y. */
SST_API sst_status sst_table_size(const sst_table* table, int which,
                                  char** decimal);

/* out must hold shaped_length symbols. */
SST_API sst_status sst_transform(const sst_table* table,
                                 const uint32_t* symbols, size_t length,
                                 uint32_t* out, size_t out_capacity);
/* out must hold input_length symbols. */
SST_API sst_status sst_inverse_transform(const sst_table* table,
                                         const uint32_t* symbols,
                                         size_t length, uint32_t* out,
                                         size_t out_capacity);
SST_API sst_status sst_rank_y(const sst_table* table, const uint32_t* symbols,
                              size_t length, char** decimal);
SST_API sst_status sst_unrank_y(const sst_table* table, const char* decimal,
                                uint32_t* out, size_t out_capacity);

/* ---- huffman ---------------------------------------------------------- */

typedef struct sst_codebook sst_codebook;

SST_API sst_status sst_huffman_build(const uint64_t* counts,
                                     uint32_t alphabet_size,
                                     sst_codebook** out);
SST_API void sst_codebook_free(sst_codebook* code);
SST_API size_t sst_codebook_size(const sst_codebook* code);
/* bits points into the codebook and lives as long as it does. */
SST_API sst_status sst_codebook_entry(const sst_codebook* code, size_t index,
                                      uint32_t* symbol, uint32_t* length,
                                      const char** bits);
SST_API sst_status sst_encoded_length(const uint64_t* counts,
                                      uint32_t alphabet_size,
                                      const sst_codebook* code,
                                      uint64_t* bits);
SST_API uint64_t sst_codebook_cost(uint32_t alphabet_size);

/* ---- experiment ------------------------------------------------------- */

typedef struct sst_experiment_config {
  uint32_t alphabet_size;
  uint32_t length;
  uint32_t shaping_order;
  uint64_t trials;
  uint64_t seed;
  int include_codebook_cost;
  int emit_baselines;
  int exhaustive;
  uint32_t workers;            /* 0: one per hardware thread */
  const char* table_cache_dir; /* NULL: build in memory */
} sst_experiment_config;

typedef struct sst_report_summary {
  uint64_t trials;
  double avg_nh0_s, stderr_nh0_s;
  double avg_encoded_fs, stderr_encoded_fs;
  double avg_nh0_fs, stderr_nh0_fs;
  double avg_encoded_s, stderr_encoded_s;
  double delta;
  double wall_time_s;
} sst_report_summary;

typedef struct sst_report sst_report;

/* A = 30, N = 60, k = 1, 100000 trials, seed 0, everything else off. */
SST_API void sst_experiment_config_init(sst_experiment_config* config);
SST_API sst_status sst_experiment_run(const sst_experiment_config* config,
                                      sst_report** out);
SST_API void sst_report_free(sst_report* report);
SST_API sst_status sst_report_get_summary(const sst_report* report,
                                          sst_report_summary* summary);

/* format: 0 JSON (timing included iff include_timing), 1 CSV, 2 text. */
SST_API sst_status sst_reports_format(const sst_report* const* reports,
                                      size_t count, int format,
                                      int include_timing, char** out);

/* ---- self-test -------------------------------------------------------- */

typedef struct sst_selftest_config {
  uint32_t max_alphabet;
  uint32_t max_length;
  uint32_t max_k;
  int inject_tie_break_fault;
} sst_selftest_config;

SST_API void sst_selftest_config_init(sst_selftest_config* config);
/* *passed is 1 when every suite passed. *log receives one line per suite
 * followed by the first counterexample, if any. */
SST_API sst_status sst_selftest_run(const sst_selftest_config* config,
                                    int* passed, char** log);

#ifdef __cplusplus
}
#endif

#endif /* SST_SST_H */
