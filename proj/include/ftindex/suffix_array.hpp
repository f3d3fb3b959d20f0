#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

#include "ftindex/corpus.hpp"

namespace ftindex {

/// Inclusive range of suffix-array ranks. Empty is encoded as lo > hi.
struct SaInterval {
  std::uint32_t lo = 1;
  std::uint32_t hi = 0;

  bool empty() const { return lo > hi; }
  std::uint64_t length() const {
    return empty() ? 0 : std::uint64_t(hi) - lo + 1;
  }
  static SaInterval none() { return {1, 0}; }
  static SaInterval full(std::uint64_t n) {
    return {0, static_cast<std::uint32_t>(n - 1)};
  }
  friend bool operator==(const SaInterval&, const SaInterval&) = default;
};

/// Suffix array, its inverse, and the BWT of one corpus.
/// sa is the permutation sorting all suffixes; isa[sa[i]] = i;
/// bwt[i] = data[(sa[i] + n - 1) mod n]. Immutable after construction.
struct SuffixArraySet {
  std::vector<std::uint32_t> sa;
  std::vector<std::uint32_t> isa;
  Bytes bwt;
};

// Exact suffix array construction by induced sorting (linear time). Works on
// arbitrary byte sequences; a virtual terminator below byte 0 is used
// internally so the input needs no sentinel of its own.
std::vector<std::uint32_t> build_suffix_array(ByteSpan text);

SuffixArraySet build_sa(const TextCorpus& corpus);

// -1 / 0 / +1: suffix at `offset` versus `pattern`, comparing at most
// pattern.size() bytes; a suffix that runs out first orders below.
inline int suffix_prefix_compare(ByteSpan text, std::uint64_t offset,
                                 ByteSpan pattern) {
  const std::size_t avail = text.size() - offset;
  const std::size_t len = avail < pattern.size() ? avail : pattern.size();
  const int c = std::memcmp(text.data() + offset, pattern.data(), len);
  if (c != 0) return c > 0 ? 1 : -1;
  return avail >= pattern.size() ? 0 : -1;
}

// Binary search narrowing `start` to the maximal interval of ranks whose
// suffixes have `pattern` as a prefix. `sa_at(rank)` supplies SA values, so
// the same search runs over a plain array or a decoded compact one.
// An empty pattern returns `start` unchanged.
template <typename SaAt>
SaInterval refine_interval_with(ByteSpan text, ByteSpan pattern,
                                SaInterval start, SaAt&& sa_at) {
  if (start.empty() || pattern.empty()) return start;
  std::uint64_t lo = start.lo;
  std::uint64_t hi = std::uint64_t(start.hi) + 1;  // half-open
  // First rank whose suffix compares >= pattern.
  std::uint64_t a = lo, b = hi;
  while (a < b) {
    const std::uint64_t mid = a + (b - a) / 2;
    if (suffix_prefix_compare(text, sa_at(mid), pattern) < 0)
      a = mid + 1;
    else
      b = mid;
  }
  const std::uint64_t first = a;
  // First rank whose suffix compares > pattern.
  b = hi;
  while (a < b) {
    const std::uint64_t mid = a + (b - a) / 2;
    if (suffix_prefix_compare(text, sa_at(mid), pattern) <= 0)
      a = mid + 1;
    else
      b = mid;
  }
  if (first == a) return SaInterval::none();
  return {static_cast<std::uint32_t>(first), static_cast<std::uint32_t>(a - 1)};
}

SaInterval refine_interval(const TextCorpus& corpus, const SuffixArraySet& sas,
                           ByteSpan pattern, SaInterval start);

std::uint64_t count_plain(const TextCorpus& corpus, const SuffixArraySet& sas,
                          ByteSpan pattern);
std::vector<std::uint32_t> locate_plain(const TextCorpus& corpus,
                                        const SuffixArraySet& sas,
                                        ByteSpan pattern);

// Independent brute-force scan, O(n*m); the reference answer for everything.
std::vector<std::uint32_t> oracle_search(const TextCorpus& corpus,
                                         ByteSpan pattern);

}  // namespace ftindex
