#include "ftindex/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>

namespace ftindex {

namespace {

std::uint32_t count_distinct_bytes(ByteSpan data) {
  std::array<bool, 256> seen{};
  for (std::uint8_t b : data) seen[b] = true;
  return static_cast<std::uint32_t>(std::count(seen.begin(), seen.end(), true));
}

// splitmix64; used to decorrelate user seeds before feeding the generator.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

TextCorpus finish_corpus(Bytes bytes, bool append_sentinel) {
  if (bytes.empty()) throw std::invalid_argument("corpus must be non-empty");
  if (append_sentinel) {
    if (std::find(bytes.begin(), bytes.end(), TextCorpus::kSentinel) != bytes.end())
      throw std::invalid_argument("input already contains the sentinel byte 0");
    bytes.push_back(TextCorpus::kSentinel);
  }
  if (bytes.size() >= kNil32)
    throw std::invalid_argument("corpus too large for 32-bit ranks");
  TextCorpus corpus;
  corpus.data = std::move(bytes);
  corpus.sigma = count_distinct_bytes({corpus.data.data(), corpus.data.size()});
  corpus.sentinel_appended = append_sentinel;
  return corpus;
}

}  // namespace

TextCorpus corpus_from_bytes(Bytes bytes, bool append_sentinel) {
  return finish_corpus(std::move(bytes), append_sentinel);
}

TextCorpus corpus_from_string(std::string_view text, bool append_sentinel) {
  Bytes bytes(text.begin(), text.end());
  return finish_corpus(std::move(bytes), append_sentinel);
}

TextCorpus load_text(const std::filesystem::path& path, bool append_sentinel) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());
  in.seekg(0, std::ios::end);
  auto len = in.tellg();
  if (len <= 0) throw io_error("empty file " + path.string());
  in.seekg(0, std::ios::beg);
  Bytes bytes(static_cast<std::size_t>(len));
  in.read(reinterpret_cast<char*>(bytes.data()), len);
  if (!in) throw io_error("short read on " + path.string());
  return finish_corpus(std::move(bytes), append_sentinel);
}

PatternSet sample_patterns(const TextCorpus& corpus, std::uint32_t m,
                           std::size_t count, std::uint64_t seed) {
  const std::uint64_t n_eff = corpus.effective_size();
  if (m < 1 || m > n_eff)
    throw std::invalid_argument("pattern length exceeds usable text");
  PatternSet set;
  set.m = m;
  set.seed = seed;
  set.flat.resize(count * static_cast<std::size_t>(m));
  const std::uint64_t range = n_eff - m + 1;  // valid start offsets
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < count; ++i) {
    state = mix64(state);
    const std::uint64_t off = state % range;
    std::memcpy(set.flat.data() + i * m, corpus.data.data() + off, m);
  }
  return set;
}

namespace {

// Open-addressing set of text offsets compared by their q-byte windows.
// Exact by construction; grows before the table passes 60% load.
class QgramSet {
 public:
  QgramSet(const std::uint8_t* text, std::uint32_t q) : text_(text), q_(q) {
    slots_.assign(kInitialSlots, kNil32);
  }

  void insert(std::uint32_t offset) {
    if ((count_ + 1) * 5 > slots_.size() * 3) grow();
    const std::uint64_t mask = slots_.size() - 1;
    std::uint64_t j = hash(offset) & mask;
    while (slots_[j] != kNil32) {
      if (std::memcmp(text_ + slots_[j], text_ + offset, q_) == 0) return;
      j = (j + 1) & mask;
    }
    slots_[j] = offset;
    ++count_;
  }

  std::uint64_t count() const { return count_; }

 private:
  static constexpr std::size_t kInitialSlots = 1024;

  std::uint64_t hash(std::uint32_t offset) const {
    std::uint64_t h = 14695981039346656037ull;  // FNV-1a
    const std::uint8_t* p = text_ + offset;
    for (std::uint32_t i = 0; i < q_; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
    return h;
  }

  void grow() {
    std::vector<std::uint32_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, kNil32);
    const std::uint64_t mask = slots_.size() - 1;
    for (std::uint32_t off : old) {
      if (off == kNil32) continue;
      std::uint64_t j = hash(off) & mask;
      while (slots_[j] != kNil32) j = (j + 1) & mask;
      slots_[j] = off;
    }
  }

  const std::uint8_t* text_;
  std::uint32_t q_;
  std::uint64_t count_ = 0;
  std::vector<std::uint32_t> slots_;
};

}  // namespace

std::uint64_t distinct_qgrams(const TextCorpus& corpus, std::uint32_t q) {
  const std::uint64_t n_eff = corpus.effective_size();
  if (q < 1 || q > n_eff) throw std::invalid_argument("q out of range");
  QgramSet set(corpus.data.data(), q);
  for (std::uint64_t off = 0; off + q <= n_eff; ++off)
    set.insert(static_cast<std::uint32_t>(off));
  return set.count();
}

}  // namespace ftindex
