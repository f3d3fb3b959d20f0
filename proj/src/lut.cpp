#include "ftindex/lut.hpp"

namespace ftindex {

Lut2 build_lut2(const TextCorpus& corpus, const SuffixArraySet& sas) {
  const std::uint64_t n = corpus.size();
  Lut2 lut;
  lut.entries.assign(Lut2::kKeys, SaInterval::none());
  std::uint32_t open_key = 0;
  bool open = false;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t off = sas.sa[i];
    if (off + 2 > n) continue;  // suffix shorter than the key
    const std::uint32_t key =
        (std::uint32_t(corpus.data[off]) << 8) | corpus.data[off + 1];
    if (!open || key != open_key) {
      lut.entries[key].lo = static_cast<std::uint32_t>(i);
      open_key = key;
      open = true;
    }
    lut.entries[key].hi = static_cast<std::uint32_t>(i);
  }
  return lut;
}

Lut3 build_lut3(const TextCorpus& corpus, const SuffixArraySet& sas) {
  const std::uint64_t n = corpus.size();
  Lut3 lut;
  lut.bounds.assign(Lut3::kKeys + 1, 0);
  // Suffixes shorter than 3 bytes take a zero-padded key; the padded key is
  // monotone in suffix order, so one ascending scan fills every bound.
  std::uint64_t next_key = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t off = sas.sa[i];
    std::uint32_t key = std::uint32_t(corpus.data[off]) << 16;
    if (off + 1 < n) key |= std::uint32_t(corpus.data[off + 1]) << 8;
    if (off + 2 < n) key |= corpus.data[off + 2];
    for (std::uint64_t x = next_key; x <= key; ++x)
      lut.bounds[x] = static_cast<std::uint32_t>(i);
    if (key + 1ull > next_key) next_key = key + 1ull;
  }
  for (std::uint64_t x = next_key; x <= Lut3::kKeys; ++x)
    lut.bounds[x] = static_cast<std::uint32_t>(n);
  return lut;
}

std::optional<SaInterval> lut_narrow(const Lut2& lut, ByteSpan pattern) {
  if (pattern.size() < 2) return std::nullopt;
  const std::uint32_t key = (std::uint32_t(pattern[0]) << 8) | pattern[1];
  return lut.entries[key];
}

std::optional<SaInterval> lut_narrow(const Lut3& lut, ByteSpan pattern) {
  if (pattern.size() < 3) return std::nullopt;
  const std::uint32_t key = (std::uint32_t(pattern[0]) << 16) |
                            (std::uint32_t(pattern[1]) << 8) | pattern[2];
  const std::uint32_t lo = lut.bounds[key];
  const std::uint32_t hi = lut.bounds[key + 1];
  if (lo >= hi) return SaInterval::none();
  return SaInterval{lo, hi - 1};
}

}  // namespace ftindex
