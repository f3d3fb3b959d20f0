#include <doctest.h>

#include "ftindex/lut.hpp"
#include "support.hpp"

using namespace ftindex;

namespace {

std::uint32_t key2(const char* s) {
  return (std::uint32_t(std::uint8_t(s[0])) << 8) | std::uint8_t(s[1]);
}

}  // namespace

TEST_CASE("lut2 intervals on banana") {
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  const Lut2 lut = build_lut2(corpus, sas);
  // Oracle ranks from the brute-force sa [5,3,1,0,4,2]: suffixes "ana" and
  // "anana" sit at ranks 1 and 2.
  CHECK(lut.at(key2("an")) == SaInterval{1, 2});
  CHECK(lut.at(key2("zz")).empty());
  CHECK(lut.at(key2("ba")) == SaInterval{3, 3});
  CHECK(lut.at(key2("na")) == SaInterval{4, 5});
}

TEST_CASE("lut3 interval for ban is the single whole-text suffix") {
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  const Lut3 lut = build_lut3(corpus, sas);
  const auto iv = lut_narrow(lut, as_bytes("ban"));
  REQUIRE(iv.has_value());
  CHECK(*iv == SaInterval{3, 3});
}

TEST_CASE("lut_narrow on banana patterns") {
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  const Lut2 lut = build_lut2(corpus, sas);
  const auto nan = lut_narrow(lut, as_bytes("nan"));
  REQUIRE(nan.has_value());
  CHECK(*nan == SaInterval{4, 5});
  const auto ab = lut_narrow(lut, as_bytes("ab"));
  REQUIRE(ab.has_value());
  CHECK(ab->empty());
  // A pattern shorter than the key signals fallback.
  CHECK_FALSE(lut_narrow(lut, as_bytes("a")).has_value());
}

TEST_CASE("narrow-then-refine equals full refine for every pattern") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::uint32_t sigma = seed % 2 ? 2 : 4;
    const TextCorpus corpus = ftest::random_corpus(1 + seed * 41, sigma, seed);
    const SuffixArraySet sas = build_sa(corpus);
    const Lut2 lut2 = build_lut2(corpus, sas);
    const Lut3 lut3 = build_lut3(corpus, sas);
    const SaInterval full = SaInterval::full(corpus.size());

    // Exhaustive over all substrings up to length 5 plus absent patterns.
    std::vector<Bytes> patterns;
    const std::uint64_t n_eff = corpus.effective_size();
    for (std::uint64_t m = 2; m <= std::min<std::uint64_t>(5, n_eff); ++m)
      for (std::uint64_t off = 0; off + m <= n_eff; ++off)
        patterns.emplace_back(corpus.data.begin() + off,
                              corpus.data.begin() + off + m);
    patterns.push_back(Bytes{9, 9});
    patterns.push_back(Bytes{9, 9, 9});

    for (const Bytes& pattern : patterns) {
      const ByteSpan p{pattern.data(), pattern.size()};
      const SaInterval expect = refine_interval(corpus, sas, p, full);
      if (const auto iv = lut_narrow(lut2, p)) {
        const SaInterval got =
            iv->empty() ? SaInterval::none()
                        : refine_interval(corpus, sas, p, *iv);
        REQUIRE(got.length() == expect.length());
        if (!expect.empty()) REQUIRE(got == expect);
      }
      if (const auto iv = lut_narrow(lut3, p)) {
        const SaInterval got =
            iv->empty() ? SaInterval::none()
                        : refine_interval(corpus, sas, p, *iv);
        REQUIRE(got.length() == expect.length());
        if (!expect.empty()) REQUIRE(got == expect);
      }
    }
  }
}

TEST_CASE("narrowing stays sound on texts with natural zero bytes") {
  // No sentinel here; byte 0 occurs inside the text and in patterns, so
  // zero-padded keys of short suffixes can collide with real patterns.
  ftest::Rng rng(404);
  Bytes text(600);
  for (auto& b : text) b = static_cast<std::uint8_t>(rng.below(3));  // 0,1,2
  const TextCorpus corpus = corpus_from_bytes(text, false);
  const SuffixArraySet sas = build_sa(corpus);
  const Lut2 lut2 = build_lut2(corpus, sas);
  const Lut3 lut3 = build_lut3(corpus, sas);
  const SaInterval full = SaInterval::full(corpus.size());

  for (int t = 0; t < 400; ++t) {
    const std::uint64_t m = 2 + rng.below(4);
    Bytes pattern;
    for (std::uint64_t j = 0; j < m; ++j)
      pattern.push_back(static_cast<std::uint8_t>(rng.below(3)));
    const ByteSpan p{pattern.data(), pattern.size()};
    const SaInterval expect = refine_interval(corpus, sas, p, full);
    for (const auto& iv :
         {lut_narrow(lut2, p), lut_narrow(lut3, p)}) {
      if (!iv) continue;
      const SaInterval got = iv->empty()
                                 ? SaInterval::none()
                                 : refine_interval(corpus, sas, p, *iv);
      REQUIRE(got.length() == expect.length());
    }
  }
}

TEST_CASE("lut2 entries partition the length>=2 suffixes") {
  const TextCorpus corpus = ftest::random_corpus(777, 26, 5);
  const SuffixArraySet sas = build_sa(corpus);
  const Lut2 lut = build_lut2(corpus, sas);
  std::uint64_t covered = 0;
  std::uint32_t prev_hi = 0;
  bool first = true;
  for (const SaInterval& iv : lut.entries) {
    if (iv.empty()) continue;
    covered += iv.length();
    if (!first) CHECK(iv.lo > prev_hi);  // ordered by key, disjoint
    prev_hi = iv.hi;
    first = false;
    // Every suffix inside shares the entry's 2-byte prefix.
    const std::uint64_t off = sas.sa[iv.lo];
    for (std::uint64_t r = iv.lo; r <= iv.hi; ++r) {
      REQUIRE(sas.sa[r] + 2 <= corpus.size());
      REQUIRE(corpus.data[sas.sa[r]] == corpus.data[off]);
      REQUIRE(corpus.data[sas.sa[r] + 1] == corpus.data[off + 1]);
    }
  }
  std::uint64_t qualifying = 0;
  for (std::uint64_t i = 0; i < corpus.size(); ++i)
    qualifying += sas.sa[i] + 2 <= corpus.size();
  CHECK(covered == qualifying);
}

TEST_CASE("lut3 memory matches the fixed footprint") {
  const TextCorpus corpus = corpus_from_string("tiny", false);
  const SuffixArraySet sas = build_sa(corpus);
  const Lut3 lut = build_lut3(corpus, sas);
  CHECK(lut.bytes() == (std::uint64_t(1) << 24) * 4 + 4);
  // Within 1% of 0.321x a 200 MiB text.
  const double twohundred_mb = 200.0 * 1024 * 1024;
  CHECK(double(lut.bytes()) / (0.321 * twohundred_mb) > 0.99);
  CHECK(double(lut.bytes()) / (0.321 * twohundred_mb) < 1.01);
}
