#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "ftindex/index_io.hpp"
#include "support.hpp"

using namespace ftindex;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ftindex_io_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

Bytes slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

void spit(const std::filesystem::path& p, const Bytes& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

}  // namespace

TEST_CASE("suffix array round trip") {
  TempDir dir;
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  const auto path = dir.path / "banana.sa";
  const std::uint64_t written = save_index(sas, corpus, path);
  CHECK(written == std::filesystem::file_size(path));
  const SuffixArraySet loaded = load_sa(path);
  CHECK(loaded.sa == sas.sa);
  CHECK(loaded.isa == sas.isa);
  CHECK(loaded.bwt == sas.bwt);
  const IndexFileHeader h = read_header(path);
  CHECK(h.kind == IndexKind::sa);
  CHECK(h.n == corpus.size());
  CHECK(h.corpus_checksum == corpus_checksum(corpus));
}

TEST_CASE("every kind survives a round trip") {
  TempDir dir;
  const TextCorpus corpus = ftest::random_corpus(600, 26, 42);
  const SuffixArraySet sas = build_sa(corpus);
  const Lut2 lut2 = build_lut2(corpus, sas);
  const Lut3 lut3 = build_lut3(corpus, sas);
  const HashBucketIndex ht = build_ht(corpus, sas, 3, {4, 5});
  const FbcsaIndex fb = build_fbcsa(corpus, sas, 32, 5);

  save_index(lut2, corpus, dir.path / "x.lut2");
  CHECK(load_lut2(dir.path / "x.lut2").entries == lut2.entries);

  save_index(lut3, corpus, dir.path / "x.lut3");
  CHECK(load_lut3(dir.path / "x.lut3").bounds == lut3.bounds);

  save_index(ht, corpus, dir.path / "x.ht");
  const HashBucketIndex ht2 = load_ht(dir.path / "x.ht");
  CHECK(ht2.slots == ht.slots);
  CHECK(ht2.k == ht.k);
  CHECK(ht2.alpha == ht.alpha);
  CHECK(ht2.key_count == ht.key_count);

  save_index(fb, corpus, dir.path / "x.fbcsa");
  const FbcsaIndex fb2 = load_fbcsa(dir.path / "x.fbcsa");
  CHECK(fb2.arr1 == fb.arr1);
  CHECK(fb2.arr2 == fb.arr2);
  CHECK(fb2.bs == fb.bs);
  CHECK(fb2.ss == fb.ss);
  CHECK(fb2.n == fb.n);

  // Decode sweep after reload equals the sweep before.
  for (std::uint64_t i = 0; i < corpus.size(); ++i)
    REQUIRE(decode_cell(fb2, i) == sas.sa[i]);
}

TEST_CASE("serialization is byte deterministic") {
  TempDir dir;
  const TextCorpus corpus = ftest::random_corpus(500, 4, 7);
  const SuffixArraySet sas = build_sa(corpus);
  const HashBucketIndex ht = build_ht(corpus, sas, 2, {1, 2});
  save_index(ht, corpus, dir.path / "a.ht");
  const HashBucketIndex rebuilt = build_ht(corpus, sas, 2, {1, 2});
  save_index(rebuilt, corpus, dir.path / "b.ht");
  CHECK(slurp(dir.path / "a.ht") == slurp(dir.path / "b.ht"));
}

TEST_CASE("header corruption is detected") {
  TempDir dir;
  const TextCorpus corpus = corpus_from_string("banana", false);
  const SuffixArraySet sas = build_sa(corpus);
  const auto path = dir.path / "banana.sa";
  save_index(sas, corpus, path);

  SUBCASE("bad magic") {
    Bytes bytes = slurp(path);
    bytes[0] = 'Z';
    spit(path, bytes);
    CHECK_THROWS_WITH_AS(load_sa(path), "bad magic; not an index file",
                         format_error);
  }
  SUBCASE("version mismatch") {
    Bytes bytes = slurp(path);
    bytes[4] = 0x7f;
    spit(path, bytes);
    CHECK_THROWS_AS(load_sa(path), format_error);
  }
  SUBCASE("truncated payload") {
    Bytes bytes = slurp(path);
    bytes.resize(bytes.size() - 5);
    spit(path, bytes);
    CHECK_THROWS_AS(load_sa(path), format_error);
  }
  SUBCASE("kind mismatch") {
    CHECK_THROWS_AS(load_lut2(path), format_error);
  }
  SUBCASE("trailing garbage") {
    Bytes bytes = slurp(path);
    bytes.push_back(0xee);
    spit(path, bytes);
    CHECK_THROWS_AS(load_sa(path), format_error);
  }
}

TEST_CASE("load_index dispatches on the stored kind") {
  TempDir dir;
  const TextCorpus corpus = corpus_from_string("abracadabra", false);
  const SuffixArraySet sas = build_sa(corpus);
  const HashBucketIndex ht = build_ht(corpus, sas, 2, {1, 2});
  save_index(ht, corpus, dir.path / "x.ht");
  const AnyIndex any = load_index(dir.path / "x.ht");
  CHECK(any.header.kind == IndexKind::ht);
  CHECK(std::get<HashBucketIndex>(any.value).slots == ht.slots);
}

TEST_CASE("fnv checksum pins known values") {
  // FNV-1a 64 of the empty string is the offset basis.
  CHECK(fnv1a64({}) == 14695981039346656037ull);
  CHECK(fnv1a64(as_bytes("a")) == 0xaf63dc4c8601ec8cull);
}
