#include <CLI11.hpp>

#include <iostream>

#include "ftindex/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ftindex - suffix-array full-text indexes and benchmarks"};
  app.require_subcommand(1);

  ftindex::cli::BuildOptions build;
  auto* cmd_build = app.add_subcommand("build", "build an index file");
  cmd_build->add_option("--corpus", build.corpus, "raw byte file to index")
      ->required()->check(CLI::ExistingFile);
  cmd_build->add_option("--kind", build.kind, "sa | lut2 | lut3 | sahash | fbcsa")
      ->required();
  cmd_build->add_option("--out", build.out, "output index file")->required();
  cmd_build->add_option("--k", build.k, "hashed prefix length (sahash)");
  cmd_build->add_option("--alpha", build.alpha_percent,
                        "hash load factor in percent (sahash)");
  cmd_build->add_option("--bs", build.bs, "fbcsa block size");
  cmd_build->add_option("--ss", build.ss, "fbcsa sampling step");
  cmd_build->add_flag("--no-sentinel", build.no_sentinel,
                      "do not append the terminator byte");
  cmd_build->add_flag("--small-blocks", build.small_blocks,
                      "allow fbcsa block sizes that are multiples of 8");
  std::string sa_file;
  cmd_build->add_option("--sa", sa_file, "reuse a saved sa index file");

  ftindex::cli::QueryOptions query;
  auto* cmd_query = app.add_subcommand("query", "run count/locate queries");
  cmd_query->add_option("--corpus", query.corpus)->required()
      ->check(CLI::ExistingFile);
  cmd_query->add_option("--index", query.indexes, "index file(s)")
      ->required()->check(CLI::ExistingFile);
  std::string pattern, patterns_file;
  cmd_query->add_option("--pattern", pattern, "pattern bytes");
  cmd_query->add_option("--patterns-file", patterns_file,
                        "file with one pattern per line");
  cmd_query->add_option("--mode", query.mode, "count | locate");
  cmd_query->add_option("--narrowing", query.narrowing,
                        "auto | none | lut2 | lut3 | hash");

  ftindex::cli::BenchOptions bench;
  auto* cmd_bench = app.add_subcommand("bench", "benchmark index variants");
  cmd_bench->add_option("--corpus", bench.corpus)->required()
      ->check(CLI::ExistingFile);
  cmd_bench->add_option("--kinds", bench.kinds,
                        "variants (sa sa-lut2 sa-lut3 sa-hash fbcsa "
                        "fbcsa-lut2 fbcsa-lut3 fbcsa-hash); default all");
  cmd_bench->add_option("--op", bench.op, "count | locate | access | extract");
  cmd_bench->add_option("--m", bench.pattern_lengths, "pattern lengths");
  cmd_bench->add_option("--count", bench.patterns_per_length,
                        "patterns per length");
  cmd_bench->add_option("--seed", bench.seed);
  cmd_bench->add_option("--reps", bench.repetitions, "timed repetitions");
  cmd_bench->add_option("--c", bench.extract_cells, "cells per extraction");
  cmd_bench->add_option("--queries", bench.random_queries,
                        "random draws for access/extract");
  cmd_bench->add_option("--k", bench.k, "hashed prefix length");
  cmd_bench->add_option("--alpha", bench.alpha_percents,
                        "hash load factors in percent");
  cmd_bench->add_option("--bs", bench.bs, "fbcsa block size");
  cmd_bench->add_option("--ss", bench.ss, "fbcsa sampling step");
  cmd_bench->add_option("--narrowing", bench.narrowings,
                        "fbcsa front ends to run (none lut2 lut3 hash)");
  std::string csv;
  cmd_bench->add_option("--csv", csv, "write the report to this file");
  cmd_bench->add_flag("--paper-scale", bench.paper_scale,
                      "500K patterns per length");
  cmd_bench->add_flag("--no-verify", bench.no_verify,
                      "skip the cross-index agreement pass");

  ftindex::cli::QgramsOptions qgrams;
  auto* cmd_qgrams = app.add_subcommand("qgrams", "count distinct q-grams");
  cmd_qgrams->add_option("--corpus", qgrams.corpus)->required()
      ->check(CLI::ExistingFile);
  cmd_qgrams->add_option("--q", qgrams.qs, "q values")->required();

  ftindex::cli::PredictAllHtOptions predict;
  auto* cmd_predict = app.add_subcommand(
      "predict-allht", "predict the footprint of per-length hash tables");
  cmd_predict->add_option("--corpus", predict.corpus)->required()
      ->check(CLI::ExistingFile);
  cmd_predict->add_option("--m-min", predict.m_min, "minimum pattern length");
  cmd_predict->add_option("--alpha", predict.alpha_percent,
                          "load factor in percent");

  ftindex::cli::SynthOptions synth;
  auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic corpus");
  cmd_synth->add_option("--out", synth.out)->required();
  cmd_synth->add_option("--size", synth.size, "bytes to generate");
  cmd_synth->add_option("--seed", synth.seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_build->parsed()) {
      if (!sa_file.empty()) build.sa_file = sa_file;
      return ftindex::cli::cmd_build(build, std::cout, std::cerr);
    }
    if (cmd_query->parsed()) {
      if (!pattern.empty()) query.pattern = pattern;
      if (!patterns_file.empty()) query.patterns_file = patterns_file;
      return ftindex::cli::cmd_query(query, std::cout, std::cerr);
    }
    if (cmd_bench->parsed()) {
      if (!csv.empty()) bench.csv = csv;
      return ftindex::cli::cmd_bench(bench, std::cout, std::cerr);
    }
    if (cmd_qgrams->parsed())
      return ftindex::cli::cmd_qgrams(qgrams, std::cout, std::cerr);
    if (cmd_predict->parsed())
      return ftindex::cli::cmd_predict_allht(predict, std::cout, std::cerr);
    if (cmd_synth->parsed())
      return ftindex::cli::cmd_synth(synth, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
