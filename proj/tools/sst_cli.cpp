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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sst/sst.h"

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  sst_status status;
  ApiError(sst_status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
};

void check(sst_status s) {
  if (s != SST_OK) throw ApiError(s, sst_last_error());
}

int exit_code(sst_status s) {
  switch (s) {
    case SST_ERR_INVALID_ARGUMENT:
    case SST_ERR_BOUNDS_EXCEEDED:
    case SST_ERR_IO:
      return kUsage;
    case SST_ERR_OUT_OF_RANGE:
    case SST_ERR_SHAPE_MISMATCH:
    case SST_ERR_NOT_IN_SHAPED_SET:
    case SST_ERR_IMPOSSIBLE_EMISSION:
    case SST_ERR_MULTISET_MISMATCH:
    case SST_ERR_CODE_MISMATCH:
      return kDomain;
    default:
      return kFailed;
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { sst_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct TableDeleter {
  void operator()(sst_table* t) const { sst_table_free(t); }
};
using TablePtr = std::unique_ptr<sst_table, TableDeleter>;

struct ReportDeleter {
  void operator()(sst_report* r) const { sst_report_free(r); }
};
using ReportPtr = std::unique_ptr<sst_report, ReportDeleter>;

struct CodebookDeleter {
  void operator()(sst_codebook* c) const { sst_codebook_free(c); }
};
using CodebookPtr = std::unique_ptr<sst_codebook, CodebookDeleter>;

// Symbol input shared by the sequence subcommands.
struct SymbolInput {
  std::string text;
  std::string file;
  std::string charset;
  unsigned alphabet = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("input", text,
                    "symbols: decimal integers separated by spaces or "
                    "commas, or characters when --charset is given");
    cmd->add_option("--file", file, "read the symbols from a file");
    cmd->add_option("--charset", charset,
                    "map single characters to symbol indices in this order");
    cmd->add_option("-A,--alphabet", alphabet, "alphabet size")
                  ->check(CLI::Range(2u, 1u << 20));
  }

  unsigned alphabet_size() const {
    if (alphabet != 0) return alphabet;
    if (!charset.empty()) return static_cast<unsigned>(charset.size());
    throw UsageError("--alphabet is required without --charset");
  }

  std::vector<uint32_t> read() const {
    std::string source = text;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot read " + file);
      std::ostringstream ss;
      ss << in.rdbuf();
      source = ss.str();
    }
    const unsigned a = alphabet_size();
    std::vector<uint32_t> out;
    if (!charset.empty()) {
      if (charset.size() < a)
        throw UsageError("--charset has fewer characters than the alphabet");
      for (char c : source) {
        if (c == ' ' || c == ',' || c == '\n' || c == '\t' || c == '\r')
          continue;
        const auto pos = charset.find(c);
        if (pos == std::string::npos || pos >= a)
          throw UsageError(std::string("character '") + c +
                           "' is not in the charset");
        out.push_back(static_cast<uint32_t>(pos));
      }
      return out;
    }
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(token, &used, 10);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || token.front() == '-' || token.front() == '+')
        throw UsageError("cannot parse symbol '" + token + "'");
      if (v >= a)
        throw UsageError("symbol " + token + " is outside the alphabet [0, " +
                         std::to_string(a) + ")");
      out.push_back(static_cast<uint32_t>(v));
      token.clear();
    };
    for (char c : source) {
      if (c == ' ' || c == ',' || c == '\n' || c == '\t' || c == '\r')
        flush();
      else
        token += c;
    }
    flush();
    return out;
  }

  std::string show(const std::vector<uint32_t>& s) const {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (charset.empty()) {
        if (i > 0) out += ' ';
        out += std::to_string(s[i]);
      } else {
        out += charset[s[i]];
      }
    }
    return out;
  }
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

TablePtr open_table(unsigned a, unsigned n, unsigned k,
                    const std::string& cache_dir) {
  sst_table* t = nullptr;
  if (cache_dir.empty())
    check(sst_table_build(a, n, k, &t));
  else
    check(sst_table_open_cached(cache_dir.c_str(), a, n, k, &t));
  return TablePtr(t);
}

int cmd_entropy(const SymbolInput& in) {
  const auto s = in.read();
  double h = 0, nh = 0;
  check(sst_entropy(s.data(), s.size(), in.alphabet_size(), &h, &nh));
  std::cout << "N=" << s.size() << "\nH0=" << fixed6(h)
            << "\nNH0=" << fixed6(nh) << "\n";
  return kOk;
}

struct ShapeArgs {
  std::optional<unsigned> length;
  unsigned k = 1;
  std::string cache_dir;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-N,--length", length, "input length N");
    cmd->add_option("-k,--k", k, "shaping order k")->capture_default_str();
    cmd->add_option("--table-cache", cache_dir,
                    "directory for cached shaping tables");
  }
};

int cmd_transform(const SymbolInput& in, const ShapeArgs& shape,
                  bool inverse) {
  const auto s = in.read();
  const unsigned a = in.alphabet_size();
  unsigned n = 0;
  if (shape.length) {
    n = *shape.length;
  } else if (inverse) {
    if (s.size() <= shape.k)
      throw UsageError("input shorter than k + 1; pass --length");
    n = static_cast<unsigned>(s.size() - shape.k);
  } else {
    n = static_cast<unsigned>(s.size());
  }
  const TablePtr table = open_table(a, n, shape.k, shape.cache_dir);
  std::vector<uint32_t> out(inverse ? n : n + shape.k);
  if (inverse)
    check(sst_inverse_transform(table.get(), s.data(), s.size(), out.data(),
                                out.size()));
  else
    check(sst_transform(table.get(), s.data(), s.size(), out.data(),
                        out.size()));
  std::cout << in.show(out) << "\n";
  return kOk;
}

int cmd_encode(const SymbolInput& in, bool include_cost) {
  const auto s = in.read();
  const unsigned a = in.alphabet_size();
  std::vector<uint64_t> counts(a, 0);
  for (auto x : s) ++counts[x];
  sst_codebook* raw = nullptr;
  check(sst_huffman_build(counts.data(), a, &raw));
  const CodebookPtr code(raw);
  uint64_t bits = 0;
  check(sst_encoded_length(counts.data(), a, code.get(), &bits));
  double h = 0, nh = 0;
  check(sst_entropy(s.data(), s.size(), a, &h, &nh));

  std::cout << "symbol count length codeword\n";
  for (std::size_t i = 0; i < sst_codebook_size(code.get()); ++i) {
    uint32_t symbol = 0, length = 0;
    const char* word = nullptr;
    check(sst_codebook_entry(code.get(), i, &symbol, &length, &word));
    std::cout << in.show({symbol}) << " " << counts[symbol] << " " << length
              << " " << (*word ? word : "-") << "\n";
  }
  std::cout << "N=" << s.size() << "\nNH0=" << fixed6(nh)
            << "\npayload_bits=" << bits << "\n";
  if (include_cost) {
    const uint64_t cost = sst_codebook_cost(a);
    std::cout << "codebook_cost_bits=" << cost
              << "\ntotal_bits=" << bits + cost << "\n";
  }
  return kOk;
}

struct ExperimentArgs {
  std::vector<unsigned> alphabets;
  unsigned length = 60;
  unsigned k = 1;
  uint64_t trials = 100000;
  uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  bool exhaustive = false;
  bool include_cost = false;
  bool baselines = false;
  bool timing = false;
  unsigned workers = 0;
  std::string cache_dir;
};

int cmd_experiment(const ExperimentArgs& args) {
  std::vector<ReportPtr> reports;
  for (unsigned a : args.alphabets) {
    sst_experiment_config c;
    sst_experiment_config_init(&c);
    c.alphabet_size = a;
    c.length = args.length;
    c.shaping_order = args.k;
    c.trials = args.trials;
    c.seed = args.seed;
    c.include_codebook_cost = args.include_cost;
    c.emit_baselines = args.baselines;
    c.exhaustive = args.exhaustive;
    c.workers = args.workers;
    c.table_cache_dir = args.cache_dir.empty() ? nullptr : args.cache_dir.c_str();
    sst_report* r = nullptr;
    check(sst_experiment_run(&c, &r));
    reports.emplace_back(r);
  }
  std::vector<const sst_report*> raw;
  for (const auto& r : reports) raw.push_back(r.get());

  const int format = args.format == "csv" ? 1 : 0;
  CString body;
  check(sst_reports_format(raw.data(), raw.size(), format, args.timing,
                           &body.p));
  if (args.out.empty()) {
    std::cout << body.str();
    return kOk;
  }
  std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + args.out);
  out << body.str();
  if (!out) throw UsageError("cannot write " + args.out);

  CString summary;
  check(sst_reports_format(raw.data(), raw.size(), 2, 0, &summary.p));
  std::cout << summary.str();
  for (const auto& r : reports) {
    sst_report_summary s;
    check(sst_report_get_summary(r.get(), &s));
    std::cerr << "trials=" << s.trials << " wall_time_s="
              << fixed6(s.wall_time_s) << "\n";
  }
  return kOk;
}

int cmd_selftest(const sst_selftest_config& config) {
  int passed = 0;
  CString log;
  check(sst_selftest_run(&config, &passed, &log.p));
  std::cout << log.str() << (passed ? "selftest passed\n" : "selftest FAILED\n");
  return passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-shaping compression laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sst_version()));

  SymbolInput entropy_in;
  auto* entropy = app.add_subcommand("entropy", "print H0 and N*H0");
  entropy_in.add_to(entropy);

  SymbolInput transform_in;
  ShapeArgs transform_shape;
  auto* transform = app.add_subcommand("transform", "print f(S)");
  transform_in.add_to(transform);
  transform_shape.add_to(transform);

  SymbolInput untransform_in;
  ShapeArgs untransform_shape;
  auto* untransform =
      app.add_subcommand("untransform", "print S for a shaped string f(S)");
  untransform_in.add_to(untransform);
  untransform_shape.add_to(untransform);

  SymbolInput encode_in;
  bool encode_cost = false;
  auto* encode = app.add_subcommand(
      "encode", "Huffman-code a sequence and report its length");
  encode_in.add_to(encode);
  encode->add_flag("--include-codebook-cost", encode_cost,
                   "also report the code description cost");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand(
      "experiment", "average N*H0(S) against the coded length of f(S)");
  experiment
      ->add_option("-A,--alphabet", exp.alphabets,
                   "alphabet sizes (repeat or comma-separate)")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(2u, 1023u));
  experiment->add_option("-N,--length", exp.length, "sequence length")
      ->capture_default_str()
      ->check(CLI::Range(1u, 126u));
  experiment->add_option("-k,--k", exp.k, "shaping order")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  experiment->add_option("--trials", exp.trials, "number of trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.seed, "64-bit seed")
      ->capture_default_str();
  experiment->add_option("--format", exp.format, "report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  experiment->add_option("--out", exp.out, "write the report to this file");
  experiment->add_flag("--exhaustive", exp.exhaustive,
                       "run every input once instead of sampling");
  experiment->add_flag("--include-codebook-cost", exp.include_cost,
                       "add the code description cost to both encodings");
  experiment->add_flag("--baselines", exp.baselines,
                       "add baseline columns to CSV output");
  experiment->add_flag("--timing", exp.timing,
                       "record wall time in the JSON report");
  experiment->add_option("--workers", exp.workers,
                         "worker threads (0: hardware concurrency)")
      ->capture_default_str();
  experiment->add_option("--table-cache", exp.cache_dir,
                         "directory for cached shaping tables");

  sst_selftest_config st;
  sst_selftest_config_init(&st);
  std::string fault;
  auto* selftest =
      app.add_subcommand("selftest", "run the exhaustive oracle suites");
  selftest->add_option("--max-alphabet", st.max_alphabet)
      ->capture_default_str();
  selftest->add_option("--max-length", st.max_length)->capture_default_str();
  selftest->add_option("--max-k", st.max_k)->capture_default_str();
  selftest
      ->add_option("--inject-fault", fault,
                   "deliberately break the implementation (tie-break)")
      ->check(CLI::IsMember({"tie-break"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*entropy) return cmd_entropy(entropy_in);
    if (*transform) return cmd_transform(transform_in, transform_shape, false);
    if (*untransform)
      return cmd_transform(untransform_in, untransform_shape, true);
    if (*encode) return cmd_encode(encode_in, encode_cost);
    if (*experiment) return cmd_experiment(exp);
    if (*selftest) {
      st.inject_tie_break_fault = fault == "tie-break";
      return cmd_selftest(st);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.status);
  }
  return kUsage;
}
