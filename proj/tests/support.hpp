#pragma once

// Test-only oracles: brute-force reference implementations kept independent
// of the library's query paths, plus deterministic random-input helpers.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ftindex/corpus.hpp"

namespace ftest {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() { return state = splitmix64(state); }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Comparison-sort suffix array; the reference for every construction check.
inline std::vector<std::uint32_t> naive_sa(ftindex::ByteSpan text) {
  std::vector<std::uint32_t> sa(text.size());
  for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = i;
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(text.begin() + a, text.end(),
                                        text.begin() + b, text.end());
  });
  return sa;
}

inline std::vector<std::uint32_t> naive_isa(const std::vector<std::uint32_t>& sa) {
  std::vector<std::uint32_t> isa(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) isa[sa[i]] = i;
  return isa;
}

inline ftindex::Bytes naive_bwt(ftindex::ByteSpan text,
                                const std::vector<std::uint32_t>& sa) {
  ftindex::Bytes bwt(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i)
    bwt[i] = text[(std::uint64_t(sa[i]) + sa.size() - 1) % sa.size()];
  return bwt;
}

// Direct O(n*m) scan, written without any library search code.
inline std::vector<std::uint32_t> naive_occurrences(ftindex::ByteSpan text,
                                                    ftindex::ByteSpan pattern) {
  std::vector<std::uint32_t> hits;
  if (pattern.empty() || pattern.size() > text.size()) return hits;
  for (std::size_t j = 0; j + pattern.size() <= text.size(); ++j) {
    bool match = true;
    for (std::size_t d = 0; d < pattern.size(); ++d) {
      if (text[j + d] != pattern[d]) {
        match = false;
        break;
      }
    }
    if (match) hits.push_back(static_cast<std::uint32_t>(j));
  }
  return hits;
}

inline std::uint64_t naive_distinct_qgrams(ftindex::ByteSpan text,
                                           std::uint32_t q) {
  std::set<std::string> grams;
  for (std::size_t j = 0; j + q <= text.size(); ++j)
    grams.emplace(reinterpret_cast<const char*>(text.data() + j), q);
  return grams.size();
}

// Sigma distinct byte values, never the sentinel 0.
inline std::vector<std::uint8_t> alphabet_palette(std::uint32_t sigma) {
  std::vector<std::uint8_t> palette;
  if (sigma == 26) {
    for (int c = 'a'; c <= 'z'; ++c) palette.push_back(c);
  } else {
    for (std::uint32_t v = 1; v <= sigma; ++v)
      palette.push_back(static_cast<std::uint8_t>(v));
  }
  return palette;
}

inline ftindex::Bytes random_text(std::uint64_t n, std::uint32_t sigma,
                                  std::uint64_t seed) {
  const auto palette = alphabet_palette(sigma);
  ftindex::Bytes text(n);
  Rng rng(seed);
  for (auto& b : text) b = palette[rng.below(palette.size())];
  return text;
}

inline ftindex::TextCorpus random_corpus(std::uint64_t n, std::uint32_t sigma,
                                         std::uint64_t seed,
                                         bool append_sentinel = true) {
  return ftindex::corpus_from_bytes(random_text(n, sigma, seed),
                                    append_sentinel);
}

template <typename T>
bool set_equal(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace ftest
