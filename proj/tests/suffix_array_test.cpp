#include <doctest.h>

#include <array>

#include "ftindex/suffix_array.hpp"
#include "support.hpp"

using namespace ftindex;

TEST_CASE("banana suffix array, inverse, and bwt") {
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  // Frozen from the comparison-sort oracle.
  CHECK(sas.sa == std::vector<std::uint32_t>{5, 3, 1, 0, 4, 2});
  CHECK(sas.isa == std::vector<std::uint32_t>{3, 2, 5, 1, 4, 0});
  CHECK(sas.bwt == Bytes{'n', 'n', 'b', 'a', 'a', 'a'});
  // And re-derived here for good measure.
  CHECK(sas.sa == ftest::naive_sa(corpus.bytes()));
  CHECK(sas.isa == ftest::naive_isa(sas.sa));
  CHECK(sas.bwt == ftest::naive_bwt(corpus.bytes(), sas.sa));
}

TEST_CASE("construction equals the comparison sorter on random inputs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::uint32_t sigma =
        std::array<std::uint32_t, 5>{1, 2, 4, 26, 255}[seed % 5];
    const std::uint64_t n = 1 + ftest::Rng(seed * 77).below(5000);
    const bool sentinel = seed % 3 != 0;
    const TextCorpus corpus = ftest::random_corpus(n, sigma, seed, sentinel);
    const SuffixArraySet sas = build_sa(corpus);
    REQUIRE(sas.sa == ftest::naive_sa(corpus.bytes()));

    // Permutation property.
    std::vector<std::uint32_t> sorted = sas.sa;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) REQUIRE(sorted[i] == i);

    // Adjacent suffixes strictly increase.
    const ByteSpan text = corpus.bytes();
    for (std::size_t i = 0; i + 1 < sas.sa.size(); ++i) {
      REQUIRE(std::lexicographical_compare(
          text.begin() + sas.sa[i], text.end(), text.begin() + sas.sa[i + 1],
          text.end()));
    }

    for (std::size_t i = 0; i < sas.sa.size(); ++i)
      REQUIRE(sas.isa[sas.sa[i]] == i);
  }
}

TEST_CASE("single byte and repeated byte corpora") {
  const TextCorpus one = corpus_from_string("x", false);
  CHECK(build_sa(one).sa == std::vector<std::uint32_t>{0});
  const TextCorpus rep = corpus_from_string("aaaa", false);
  CHECK(build_sa(rep).sa == std::vector<std::uint32_t>{3, 2, 1, 0});
}

TEST_CASE("construction handles adversarial shapes") {
  std::vector<Bytes> texts;
  // Alternating symbols, with both parities.
  Bytes ab, ba;
  for (int i = 0; i < 1025; ++i) {
    ab.push_back(i % 2 ? 'b' : 'a');
    ba.push_back(i % 2 ? 'a' : 'b');
  }
  texts.push_back(ab);
  texts.push_back(ba);
  // Long run with a single disturbance at either end.
  Bytes run(2000, 'a');
  run.front() = 'b';
  texts.push_back(run);
  run.front() = 'a';
  run.back() = 'b';
  texts.push_back(run);
  // Every byte value once, ascending and descending.
  Bytes asc, desc;
  for (int v = 1; v < 256; ++v) asc.push_back(v);
  desc.assign(asc.rbegin(), asc.rend());
  texts.push_back(asc);
  texts.push_back(desc);
  // Nested repeats, the classic grinder for rank doubling and naming.
  Bytes fib_a{'a'}, fib_b{'a', 'b'};
  while (fib_b.size() < 3000) {
    Bytes next = fib_b;
    next.insert(next.end(), fib_a.begin(), fib_a.end());
    fib_a.swap(fib_b);
    fib_b.swap(next);
  }
  texts.push_back(fib_b);
  // Zero bytes inside the text (no sentinel involved).
  texts.push_back(Bytes{0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 1});

  for (const Bytes& text : texts) {
    const TextCorpus corpus = corpus_from_bytes(text, false);
    const SuffixArraySet sas = build_sa(corpus);
    REQUIRE(sas.sa == ftest::naive_sa(corpus.bytes()));
  }
}

TEST_CASE("refine_interval narrows to exactly the matching suffixes") {
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  const SaInterval full = SaInterval::full(corpus.size());

  // Oracle: occurrences of "ana" at offsets 1 and 3; their ranks are 1, 2.
  const auto ana_hits = ftest::naive_occurrences(corpus.bytes(), as_bytes("ana"));
  REQUIRE(ana_hits == std::vector<std::uint32_t>{1, 3});
  CHECK(refine_interval(corpus, sas, as_bytes("ana"), full) == SaInterval{1, 2});

  CHECK(refine_interval(corpus, sas, as_bytes("x"), full).empty());
  CHECK(refine_interval(corpus, sas, as_bytes("banana"), {3, 3}) ==
        SaInterval{3, 3});
  // Empty pattern keeps the start interval.
  CHECK(refine_interval(corpus, sas, {}, full) == full);
  CHECK(count_plain(corpus, sas, {}) == corpus.size());
}

TEST_CASE("refine_interval result is maximal") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TextCorpus corpus = ftest::random_corpus(300, 4, seed);
    const SuffixArraySet sas = build_sa(corpus);
    const PatternSet patterns = sample_patterns(corpus, 1 + seed % 6, 10, seed);
    for (std::size_t i = 0; i < patterns.count(); ++i) {
      const ByteSpan p = patterns.pattern(i);
      const SaInterval iv =
          refine_interval(corpus, sas, p, SaInterval::full(corpus.size()));
      REQUIRE(!iv.empty());
      if (iv.lo > 0)
        CHECK(suffix_prefix_compare(corpus.bytes(), sas.sa[iv.lo - 1], p) != 0);
      if (iv.hi + 1 < corpus.size())
        CHECK(suffix_prefix_compare(corpus.bytes(), sas.sa[iv.hi + 1], p) != 0);
    }
  }
}

TEST_CASE("count and locate examples") {
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  CHECK(count_plain(corpus, sas, as_bytes("ana")) == 2);
  CHECK(ftest::set_equal(locate_plain(corpus, sas, as_bytes("ana")),
                         std::vector<std::uint32_t>{1, 3}));
  CHECK(count_plain(corpus, sas, as_bytes("a")) == 3);
  CHECK(ftest::set_equal(locate_plain(corpus, sas, as_bytes("a")),
                         std::vector<std::uint32_t>{1, 3, 5}));
  CHECK(count_plain(corpus, sas, as_bytes("nanan")) == 0);
  CHECK(locate_plain(corpus, sas, as_bytes("nanan")).empty());
}

TEST_CASE("oracle_search agrees with inspection") {
  const TextCorpus banana = corpus_from_string("banana", false);
  CHECK(oracle_search(banana, as_bytes("ana")) ==
        std::vector<std::uint32_t>{1, 3});
  const TextCorpus aaaa = corpus_from_string("aaaa", false);
  CHECK(oracle_search(aaaa, as_bytes("aa")) ==
        std::vector<std::uint32_t>{0, 1, 2});
  CHECK(oracle_search(banana, as_bytes("banana")) ==
        std::vector<std::uint32_t>{0});
}

TEST_CASE("locate_plain equals the brute-force oracle on random pairs") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; checked < 1000; ++seed) {
    const std::uint32_t sigma =
        std::array<std::uint32_t, 5>{1, 2, 4, 26, 255}[seed % 5];
    const std::uint64_t n = 1 + ftest::Rng(seed * 31).below(5000);
    const TextCorpus corpus = ftest::random_corpus(n, sigma, seed);
    const SuffixArraySet sas = build_sa(corpus);
    ftest::Rng rng(seed ^ 0xabcdef);
    for (int t = 0; t < 25; ++t, ++checked) {
      const std::uint64_t m =
          1 + rng.below(std::min<std::uint64_t>(corpus.effective_size(), 16));
      Bytes pattern;
      if (t % 4 == 0) {
        // Arbitrary bytes: usually absent from the text.
        for (std::uint64_t j = 0; j < m; ++j)
          pattern.push_back(static_cast<std::uint8_t>(1 + rng.below(255)));
      } else {
        const std::uint64_t off = rng.below(corpus.effective_size() - m + 1);
        pattern.assign(corpus.data.begin() + off, corpus.data.begin() + off + m);
      }
      const ByteSpan p{pattern.data(), pattern.size()};
      REQUIRE(ftest::set_equal(locate_plain(corpus, sas, p),
                               ftest::naive_occurrences(corpus.bytes(), p)));
      REQUIRE(count_plain(corpus, sas, p) ==
              ftest::naive_occurrences(corpus.bytes(), p).size());
    }
  }
}
