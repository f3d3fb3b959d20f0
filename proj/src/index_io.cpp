#include "ftindex/index_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace ftindex {

namespace {

void require_little_endian() {
  if constexpr (std::endian::native != std::endian::little)
    throw format_error("big-endian hosts are unsupported");
}

class Writer {
 public:
  explicit Writer(const std::filesystem::path& path)
      : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw io_error("cannot write " + path.string());
  }

  template <typename T>
  void scalar(T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
    written_ += sizeof(T);
  }

  template <typename T>
  void array(const std::vector<T>& v) {
    static_assert(std::is_trivially_copyable_v<T>);
    out_.write(reinterpret_cast<const char*>(v.data()),
               static_cast<std::streamsize>(v.size() * sizeof(T)));
    written_ += v.size() * sizeof(T);
  }

  std::uint64_t finish() {
    out_.flush();
    if (!out_) throw io_error("write failed");
    return written_;
  }

 private:
  std::ofstream out_;
  std::uint64_t written_ = 0;
};

class Reader {
 public:
  explicit Reader(const std::filesystem::path& path)
      : in_(path, std::ios::binary) {
    if (!in_) throw io_error("cannot open " + path.string());
  }

  template <typename T>
  T scalar() {
    T v{};
    in_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in_) throw format_error("truncated index file");
    return v;
  }

  template <typename T>
  void array(std::vector<T>& v, std::size_t count) {
    v.resize(count);
    in_.read(reinterpret_cast<char*>(v.data()),
             static_cast<std::streamsize>(count * sizeof(T)));
    if (!in_) throw format_error("truncated index payload");
  }

  void expect_eof() {
    char c;
    if (in_.read(&c, 1)) throw format_error("trailing bytes after payload");
  }

 private:
  std::ifstream in_;
};

void write_header(Writer& w, const IndexFileHeader& h) {
  w.scalar(IndexFileHeader::kMagic[0]);
  w.scalar(IndexFileHeader::kMagic[1]);
  w.scalar(IndexFileHeader::kMagic[2]);
  w.scalar(IndexFileHeader::kMagic[3]);
  w.scalar(h.version);
  w.scalar(static_cast<std::uint8_t>(h.kind));
  w.scalar(static_cast<std::uint8_t>(h.sentinel_appended ? 1 : 0));
  w.scalar(h.k);
  w.scalar(h.alpha.num);
  w.scalar(h.alpha.den);
  w.scalar(std::uint16_t{0});  // reserved
  w.scalar(h.bs);
  w.scalar(h.ss);
  w.scalar(h.corpus_checksum);
  w.scalar(h.n);
  w.scalar(h.payload_length);
}

IndexFileHeader read_header(Reader& r) {
  char magic[4];
  for (char& c : magic) c = r.scalar<char>();
  if (std::memcmp(magic, IndexFileHeader::kMagic, 4) != 0)
    throw format_error("bad magic; not an index file");
  IndexFileHeader h;
  h.version = r.scalar<std::uint16_t>();
  if (h.version != IndexFileHeader::kVersion)
    throw format_error("unsupported index file version " +
                       std::to_string(h.version));
  const auto kind = r.scalar<std::uint8_t>();
  if (kind < 1 || kind > 5) throw format_error("unknown index kind");
  h.kind = static_cast<IndexKind>(kind);
  h.sentinel_appended = r.scalar<std::uint8_t>() != 0;
  h.k = r.scalar<std::uint16_t>();
  h.alpha.num = r.scalar<std::uint16_t>();
  h.alpha.den = r.scalar<std::uint16_t>();
  r.scalar<std::uint16_t>();  // reserved
  h.bs = r.scalar<std::uint32_t>();
  h.ss = r.scalar<std::uint32_t>();
  h.corpus_checksum = r.scalar<std::uint64_t>();
  h.n = r.scalar<std::uint64_t>();
  h.payload_length = r.scalar<std::uint64_t>();
  return h;
}

IndexFileHeader base_header(IndexKind kind, const TextCorpus& corpus) {
  IndexFileHeader h;
  h.kind = kind;
  h.sentinel_appended = corpus.sentinel_appended;
  h.corpus_checksum = corpus_checksum(corpus);
  h.n = corpus.size();
  return h;
}

IndexFileHeader load_checked(Reader& r, IndexKind expected) {
  const IndexFileHeader h = read_header(r);
  if (h.kind != expected) throw format_error("index file holds another kind");
  return h;
}

}  // namespace

std::uint64_t fnv1a64(ByteSpan bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t corpus_checksum(const TextCorpus& corpus) {
  return fnv1a64(corpus.bytes());
}

std::uint64_t save_index(const SuffixArraySet& sas, const TextCorpus& corpus,
                         const std::filesystem::path& path) {
  require_little_endian();
  IndexFileHeader h = base_header(IndexKind::sa, corpus);
  h.payload_length = sas.sa.size() * 4 + sas.isa.size() * 4 + sas.bwt.size();
  Writer w(path);
  write_header(w, h);
  w.array(sas.sa);
  w.array(sas.isa);
  w.array(sas.bwt);
  return w.finish();
}

std::uint64_t save_index(const Lut2& lut, const TextCorpus& corpus,
                         const std::filesystem::path& path) {
  require_little_endian();
  IndexFileHeader h = base_header(IndexKind::lut2, corpus);
  h.payload_length = lut.entries.size() * sizeof(SaInterval);
  Writer w(path);
  write_header(w, h);
  w.array(lut.entries);
  return w.finish();
}

std::uint64_t save_index(const Lut3& lut, const TextCorpus& corpus,
                         const std::filesystem::path& path) {
  require_little_endian();
  IndexFileHeader h = base_header(IndexKind::lut3, corpus);
  h.payload_length = lut.bounds.size() * 4;
  Writer w(path);
  write_header(w, h);
  w.array(lut.bounds);
  return w.finish();
}

std::uint64_t save_index(const HashBucketIndex& ht, const TextCorpus& corpus,
                         const std::filesystem::path& path) {
  require_little_endian();
  IndexFileHeader h = base_header(IndexKind::ht, corpus);
  h.k = static_cast<std::uint16_t>(ht.k);
  h.alpha = ht.alpha;
  h.payload_length = 16 + ht.slots.size() * sizeof(HtSlot);
  Writer w(path);
  write_header(w, h);
  w.scalar(ht.key_count);
  w.scalar(std::uint64_t{ht.slots.size()});
  w.array(ht.slots);
  return w.finish();
}

std::uint64_t save_index(const FbcsaIndex& idx, const TextCorpus& corpus,
                         const std::filesystem::path& path) {
  require_little_endian();
  IndexFileHeader h = base_header(IndexKind::fbcsa, corpus);
  h.bs = idx.bs;
  h.ss = idx.ss;
  h.payload_length = 16 + idx.arr1.size() * 4 + idx.arr2.size() * 4;
  Writer w(path);
  write_header(w, h);
  w.scalar(std::uint64_t{idx.arr1.size()});
  w.scalar(std::uint64_t{idx.arr2.size()});
  w.array(idx.arr1);
  w.array(idx.arr2);
  return w.finish();
}

IndexFileHeader read_header(const std::filesystem::path& path) {
  require_little_endian();
  Reader r(path);
  return read_header(r);
}

SuffixArraySet load_sa(const std::filesystem::path& path) {
  require_little_endian();
  Reader r(path);
  const IndexFileHeader h = load_checked(r, IndexKind::sa);
  if (h.payload_length != h.n * 9)
    throw format_error("payload length does not fit the stated n");
  SuffixArraySet sas;
  r.array(sas.sa, h.n);
  r.array(sas.isa, h.n);
  r.array(sas.bwt, h.n);
  r.expect_eof();
  return sas;
}

Lut2 load_lut2(const std::filesystem::path& path) {
  require_little_endian();
  Reader r(path);
  const IndexFileHeader h = load_checked(r, IndexKind::lut2);
  if (h.payload_length != Lut2::kKeys * sizeof(SaInterval))
    throw format_error("payload length does not fit a LUT2");
  Lut2 lut;
  r.array(lut.entries, Lut2::kKeys);
  r.expect_eof();
  return lut;
}

Lut3 load_lut3(const std::filesystem::path& path) {
  require_little_endian();
  Reader r(path);
  const IndexFileHeader h = load_checked(r, IndexKind::lut3);
  if (h.payload_length != (Lut3::kKeys + 1) * 4)
    throw format_error("payload length does not fit a LUT3");
  Lut3 lut;
  r.array(lut.bounds, Lut3::kKeys + 1);
  r.expect_eof();
  return lut;
}

HashBucketIndex load_ht(const std::filesystem::path& path) {
  require_little_endian();
  Reader r(path);
  const IndexFileHeader h = load_checked(r, IndexKind::ht);
  HashBucketIndex ht;
  ht.k = h.k;
  ht.alpha = h.alpha;
  ht.key_count = r.scalar<std::uint64_t>();
  const auto slot_count = r.scalar<std::uint64_t>();
  if (h.payload_length != 16 + slot_count * sizeof(HtSlot))
    throw format_error("payload length does not fit the slot count");
  r.array(ht.slots, slot_count);
  r.expect_eof();
  return ht;
}

FbcsaIndex load_fbcsa(const std::filesystem::path& path) {
  require_little_endian();
  Reader r(path);
  const IndexFileHeader h = load_checked(r, IndexKind::fbcsa);
  FbcsaIndex idx;
  idx.bs = h.bs;
  idx.ss = h.ss;
  idx.n = h.n;
  const auto arr1_words = r.scalar<std::uint64_t>();
  const auto arr2_words = r.scalar<std::uint64_t>();
  if (h.payload_length != 16 + (arr1_words + arr2_words) * 4)
    throw format_error("payload length does not fit the array sizes");
  r.array(idx.arr1, arr1_words);
  r.array(idx.arr2, arr2_words);
  r.expect_eof();
  return idx;
}

AnyIndex load_index(const std::filesystem::path& path) {
  const IndexFileHeader h = read_header(path);
  AnyIndex any;
  any.header = h;
  switch (h.kind) {
    case IndexKind::sa: any.value = load_sa(path); break;
    case IndexKind::lut2: any.value = load_lut2(path); break;
    case IndexKind::lut3: any.value = load_lut3(path); break;
    case IndexKind::ht: any.value = load_ht(path); break;
    case IndexKind::fbcsa: any.value = load_fbcsa(path); break;
  }
  return any;
}

}  // namespace ftindex
