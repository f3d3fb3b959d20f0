#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftindex/suffix_array.hpp"

namespace ftindex {

/// SA intervals for every 2-byte prefix, first byte high. Suffixes shorter
/// than 2 bytes belong to no entry (they cannot match a pattern of length
/// >= 2). 65536 (lo,hi) pairs, 512 KiB.
struct Lut2 {
  static constexpr std::size_t kKeys = 1u << 16;
  std::vector<SaInterval> entries;

  const SaInterval& at(std::uint32_t key) const { return entries[key]; }
  std::uint64_t bytes() const { return entries.size() * sizeof(SaInterval); }
};

/// Begin-only bounds for every 3-byte prefix: bounds[x] is the smallest SA
/// rank whose suffix 3-byte prefix (zero-padded past the text end) reads
/// >= x as an integer, and bounds[2^24] = n. The interval for key x is
/// [bounds[x], bounds[x+1]-1]. A suffix shorter than 3 bytes can only fall
/// into an interval whose key has trailing zero bytes; the binary-search
/// refinement discards it there.
struct Lut3 {
  static constexpr std::size_t kKeys = 1u << 24;
  std::vector<std::uint32_t> bounds;  // kKeys + 1 entries

  std::uint64_t bytes() const { return bounds.size() * sizeof(std::uint32_t); }
};

Lut2 build_lut2(const TextCorpus& corpus, const SuffixArraySet& sas);
Lut3 build_lut3(const TextCorpus& corpus, const SuffixArraySet& sas);

// SA interval of suffixes sharing the pattern's first 2 (resp. 3) bytes.
// nullopt means the pattern is shorter than the key; the caller falls back
// to the full interval.
std::optional<SaInterval> lut_narrow(const Lut2& lut, ByteSpan pattern);
std::optional<SaInterval> lut_narrow(const Lut3& lut, ByteSpan pattern);

}  // namespace ftindex
