#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

#include "ftindex/common.hpp"

namespace ftindex {

/// The indexed byte sequence. Immutable after construction; safe for shared
/// concurrent reads. When `sentinel_appended` is set, data.back() is byte 0,
/// it occurs nowhere else, and it sorts below every other byte.
struct TextCorpus {
  static constexpr std::uint8_t kSentinel = 0;

  Bytes data;
  std::uint32_t sigma = 0;  // distinct byte values present (sentinel included)
  bool sentinel_appended = false;

  std::uint64_t size() const { return data.size(); }

  // Length without the sentinel; pattern sampling and q-gram scans use this.
  std::uint64_t effective_size() const {
    return data.size() - (sentinel_appended ? 1 : 0);
  }

  ByteSpan bytes() const { return {data.data(), data.size()}; }
  ByteSpan effective_bytes() const { return {data.data(), effective_size()}; }
};

/// Fixed-length patterns extracted from a corpus, stored back to back.
struct PatternSet {
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
  Bytes flat;  // count() * m bytes

  std::size_t count() const { return m == 0 ? 0 : flat.size() / m; }
  ByteSpan pattern(std::size_t i) const {
    return {flat.data() + i * static_cast<std::size_t>(m), m};
  }
};

TextCorpus corpus_from_bytes(Bytes bytes, bool append_sentinel);
TextCorpus corpus_from_string(std::string_view text, bool append_sentinel);

// Reads a raw byte file (no header, no metadata). Throws io_error on a
// missing or empty file, and std::invalid_argument if a sentinel append is
// requested but byte 0 already occurs in the input.
TextCorpus load_text(const std::filesystem::path& path, bool append_sentinel);

// Extracts `count` substrings of length m at offsets drawn uniformly (with
// replacement) from [0, effective_size - m]. Deterministic for a fixed seed.
PatternSet sample_patterns(const TextCorpus& corpus, std::uint32_t m,
                           std::size_t count, std::uint64_t seed);

// Exact number of distinct length-q substrings of the sentinel-free text.
std::uint64_t distinct_qgrams(const TextCorpus& corpus, std::uint32_t q);

}  // namespace ftindex
