#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ftindex/corpus.hpp"
#include "ftindex/fbcsa.hpp"
#include "ftindex/index_io.hpp"
#include "ftindex/lut.hpp"
#include "ftindex/sa_hash.hpp"
#include "ftindex/suffix_array.hpp"

namespace ftindex {

enum class IndexVariant {
  sa,
  sa_lut2,
  sa_lut3,
  sa_hash,
  fbcsa_none,
  fbcsa_lut2,
  fbcsa_lut3,
  fbcsa_hash,
};

const char* variant_name(IndexVariant v);

enum class BenchOp { count, locate, access, extract };

/// One benchmark run: which variants to time, on which pattern lengths (or
/// cell-run lengths), against one corpus.
struct BenchConfig {
  std::string corpus_label = "corpus";
  std::vector<IndexVariant> variants;
  BenchOp op = BenchOp::count;
  std::vector<std::uint32_t> pattern_lengths{16};
  std::size_t patterns_per_length = 100'000;  // desk scale; 500'000 at paper scale
  std::uint64_t seed = 1;
  std::uint32_t repetitions = 1;
  std::uint64_t random_queries = 1'000'000;  // access/extract draws
  std::uint64_t extract_cells = 10;          // c
  std::uint32_t k = 8;
  std::vector<LoadFactor> alphas{{1, 2}};  // one hash table per load factor
  std::uint32_t bs = 32;
  std::uint32_t ss = 5;
  bool verify = true;
  unsigned verify_threads = 0;  // 0 = hardware concurrency
};

struct BenchRow {
  std::string corpus;
  std::string index;
  std::uint64_t m_or_c = 0;
  std::string alpha;  // "50%" for hashed variants, empty otherwise
  double mean_us = 0.0;
  double speedup = 0.0;  // plain SA = 1.00 for the same operation and length
  std::uint64_t index_bytes = 0;
  std::uint64_t occ_total = 0;
  std::uint64_t text_bytes = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  bool verified = true;
};

// Header + one row per configuration:
// corpus,index,m_or_c,alpha,mean_us,speedup,index_bytes
void write_csv(const BenchReport& report, std::ostream& out);

// Builds every structure the selected variants need, runs the cross-index
// agreement pass (all variants must report identical counts for every
// pattern; report.verified = false on any mismatch), then times the query
// loops single-threaded after a 1% warm-up.
BenchReport run_bench(const TextCorpus& corpus, const BenchConfig& config,
                      std::ostream& log);

/// Predicted footprint of a structure answering every pattern length without
/// binary search below m_min: SA + LUT2 + one hash table per prefix length
/// 3..m_min, sized from the distinct q-gram counts, plus the text.
struct AllHtPrediction {
  std::uint64_t text_bytes = 0;
  std::uint64_t sa_bytes = 0;
  std::uint64_t lut2_bytes = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> ht_bytes_per_q;
  std::uint64_t total = 0;
  double multiple_of_text = 0.0;
};

AllHtPrediction predict_allht(const TextCorpus& corpus, std::uint32_t m_min,
                              LoadFactor alpha);

}  // namespace ftindex
