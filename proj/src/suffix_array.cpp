#include "ftindex/suffix_array.hpp"

#include <algorithm>
#include <cassert>

namespace ftindex {

namespace {

// SA-IS over an integer sequence whose last element is a unique minimum
// (value 0). `sigma` bounds the symbol values. Writes the full suffix array
// of s into sa.
void sa_is(const std::uint32_t* s, std::uint32_t* sa, std::size_t n,
           std::size_t sigma) {
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  // Suffix types: true = S (suffix smaller than its right neighbour).
  std::vector<bool> is_s(n);
  is_s[n - 1] = true;
  for (std::size_t i = n - 1; i-- > 0;)
    is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
  auto is_lms = [&](std::size_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

  std::vector<std::uint32_t> bucket_size(sigma, 0);
  for (std::size_t i = 0; i < n; ++i) ++bucket_size[s[i]];
  std::vector<std::uint32_t> bucket(sigma);
  auto reset_heads = [&] {
    std::uint32_t sum = 0;
    for (std::size_t c = 0; c < sigma; ++c) {
      bucket[c] = sum;
      sum += bucket_size[c];
    }
  };
  auto reset_tails = [&] {
    std::uint32_t sum = 0;
    for (std::size_t c = 0; c < sigma; ++c) {
      sum += bucket_size[c];
      bucket[c] = sum;  // one past the end
    }
  };

  // Left-to-right pass induces L suffixes from bucket heads, then the
  // right-to-left pass induces S suffixes from bucket tails.
  auto induce = [&] {
    reset_heads();
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t j = sa[i];
      if (j == kNil32 || j == 0) continue;
      if (!is_s[j - 1]) sa[bucket[s[j - 1]]++] = j - 1;
    }
    reset_tails();
    for (std::size_t i = n; i-- > 0;) {
      const std::uint32_t j = sa[i];
      if (j == kNil32 || j == 0) continue;
      if (is_s[j - 1]) sa[--bucket[s[j - 1]]] = j - 1;
    }
  };

  // Pass 1: seed LMS positions in any order; induction sorts LMS substrings.
  std::fill(sa, sa + n, kNil32);
  reset_tails();
  for (std::size_t i = 1; i < n; ++i)
    if (is_lms(i)) sa[--bucket[s[i]]] = static_cast<std::uint32_t>(i);
  induce();

  std::vector<std::uint32_t> lms_sorted;
  for (std::size_t i = 0; i < n; ++i)
    if (sa[i] != kNil32 && is_lms(sa[i])) lms_sorted.push_back(sa[i]);
  const std::size_t m = lms_sorted.size();

  // Name the LMS substrings. Two are equal iff their symbols match all the
  // way to a simultaneous next-LMS endpoint; types then match as well.
  auto lms_equal = [&](std::size_t a, std::size_t b) {
    if (s[a] != s[b]) return false;
    for (std::size_t d = 1;; ++d) {
      const bool la = is_lms(a + d), lb = is_lms(b + d);
      if (la || lb) return la && lb && s[a + d] == s[b + d];
      if (s[a + d] != s[b + d]) return false;
    }
  };

  // LMS positions are at least 2 apart, so i/2 indexing is collision-free.
  std::vector<std::uint32_t> names(n / 2 + 1, kNil32);
  std::uint32_t last_name = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (r > 0 && !lms_equal(lms_sorted[r - 1], lms_sorted[r])) ++last_name;
    names[lms_sorted[r] / 2] = last_name;
  }
  const std::uint32_t name_count = m == 0 ? 0 : last_name + 1;

  std::vector<std::uint32_t> lms_positions;  // text order
  std::vector<std::uint32_t> reduced;
  lms_positions.reserve(m);
  reduced.reserve(m);
  for (std::size_t i = 1; i < n; ++i) {
    if (is_lms(i)) {
      lms_positions.push_back(static_cast<std::uint32_t>(i));
      reduced.push_back(names[i / 2]);
    }
  }
  names.clear();
  names.shrink_to_fit();

  std::vector<std::uint32_t> sa1(m);
  if (name_count == m) {
    for (std::size_t j = 0; j < m; ++j) sa1[reduced[j]] = static_cast<std::uint32_t>(j);
  } else {
    // The reduced string ends with the unique smallest name (the terminator's
    // LMS substring), so the precondition holds recursively.
    sa_is(reduced.data(), sa1.data(), m, name_count);
  }

  // Pass 2: seed LMS positions in their true order and induce the final SA.
  std::fill(sa, sa + n, kNil32);
  reset_tails();
  for (std::size_t r = m; r-- > 0;) {
    const std::uint32_t pos = lms_positions[sa1[r]];
    sa[--bucket[s[pos]]] = pos;
  }
  induce();
}

}  // namespace

std::vector<std::uint32_t> build_suffix_array(ByteSpan text) {
  const std::size_t n = text.size();
  if (n == 0) return {};
  // Shift bytes to 1..256 and append a virtual terminator 0. The extended
  // order restricted to real suffixes equals the plain byte order, since a
  // proper prefix sorts first either way.
  std::vector<std::uint32_t> shifted(n + 1);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = std::uint32_t(text[i]) + 1;
  shifted[n] = 0;
  std::vector<std::uint32_t> sa_ext(n + 1);
  sa_is(shifted.data(), sa_ext.data(), n + 1, 257);
  assert(sa_ext[0] == n);
  return {sa_ext.begin() + 1, sa_ext.end()};
}

SuffixArraySet build_sa(const TextCorpus& corpus) {
  SuffixArraySet sas;
  sas.sa = build_suffix_array(corpus.bytes());
  const std::size_t n = sas.sa.size();
  sas.isa.resize(n);
  sas.bwt.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sas.isa[sas.sa[i]] = static_cast<std::uint32_t>(i);
    sas.bwt[i] = corpus.data[(std::uint64_t(sas.sa[i]) + n - 1) % n];
  }
  return sas;
}

SaInterval refine_interval(const TextCorpus& corpus, const SuffixArraySet& sas,
                           ByteSpan pattern, SaInterval start) {
  return refine_interval_with(corpus.bytes(), pattern, start,
                              [&](std::uint64_t i) { return sas.sa[i]; });
}

std::uint64_t count_plain(const TextCorpus& corpus, const SuffixArraySet& sas,
                          ByteSpan pattern) {
  return refine_interval(corpus, sas, pattern, SaInterval::full(corpus.size()))
      .length();
}

std::vector<std::uint32_t> locate_plain(const TextCorpus& corpus,
                                        const SuffixArraySet& sas,
                                        ByteSpan pattern) {
  const SaInterval iv =
      refine_interval(corpus, sas, pattern, SaInterval::full(corpus.size()));
  std::vector<std::uint32_t> out;
  if (iv.empty()) return out;
  out.reserve(iv.length());
  for (std::uint64_t i = iv.lo; i <= iv.hi; ++i) out.push_back(sas.sa[i]);
  return out;
}

std::vector<std::uint32_t> oracle_search(const TextCorpus& corpus,
                                         ByteSpan pattern) {
  std::vector<std::uint32_t> out;
  const std::uint64_t n = corpus.size();
  const std::uint64_t m = pattern.size();
  if (m == 0 || m > n) return out;
  for (std::uint64_t j = 0; j + m <= n; ++j) {
    if (std::memcmp(corpus.data.data() + j, pattern.data(), m) == 0)
      out.push_back(static_cast<std::uint32_t>(j));
  }
  return out;
}

}  // namespace ftindex
