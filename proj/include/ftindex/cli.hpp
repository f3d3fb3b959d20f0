#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftindex/bench.hpp"

namespace ftindex::cli {

struct BuildOptions {
  std::filesystem::path corpus;
  std::string kind;  // sa | lut2 | lut3 | sahash | fbcsa
  std::filesystem::path out;
  std::uint32_t k = 8;
  std::uint32_t alpha_percent = 50;
  std::uint32_t bs = 32;
  std::uint32_t ss = 5;
  bool no_sentinel = false;
  bool small_blocks = false;
  std::optional<std::filesystem::path> sa_file;  // reuse a saved SA
};

struct QueryOptions {
  std::filesystem::path corpus;
  std::vector<std::filesystem::path> indexes;
  std::optional<std::string> pattern;
  std::optional<std::filesystem::path> patterns_file;
  std::string mode = "count";       // count | locate
  std::string narrowing = "auto";   // auto | none | lut2 | lut3 | hash
};

struct BenchOptions {
  std::filesystem::path corpus;
  std::vector<std::string> kinds;  // variant names; empty = all
  std::string op = "count";        // count | locate | access | extract
  std::vector<std::uint32_t> pattern_lengths{16};
  std::size_t patterns_per_length = 100'000;
  std::uint64_t seed = 1;
  std::uint32_t repetitions = 1;
  std::uint64_t extract_cells = 10;
  std::uint64_t random_queries = 1'000'000;
  std::uint32_t k = 8;
  std::vector<std::uint32_t> alpha_percents{50};
  std::uint32_t bs = 32;
  std::uint32_t ss = 5;
  std::vector<std::string> narrowings;  // fbcsa front ends; empty = all four
  std::optional<std::filesystem::path> csv;
  bool paper_scale = false;
  bool no_verify = false;
};

struct QgramsOptions {
  std::filesystem::path corpus;
  std::vector<std::uint32_t> qs;
};

struct PredictAllHtOptions {
  std::filesystem::path corpus;
  std::uint32_t m_min = 8;
  std::uint32_t alpha_percent = 50;
};

struct SynthOptions {
  std::filesystem::path out;
  std::uint64_t size = 50ull << 20;
  std::uint64_t seed = 1;
};

int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err);
int cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_qgrams(const QgramsOptions& options, std::ostream& out, std::ostream& err);
int cmd_predict_allht(const PredictAllHtOptions& options, std::ostream& out,
                      std::ostream& err);
int cmd_synth(const SynthOptions& options, std::ostream& out, std::ostream& err);

}  // namespace ftindex::cli
