#include "ftindex/sa_hash.hpp"

namespace ftindex {

std::uint64_t ht_slot_count(std::uint64_t key_count, LoadFactor alpha) {
  // ceil(key_count / alpha) with alpha = num/den.
  return (key_count * alpha.den + alpha.num - 1) / alpha.num;
}

HashBucketIndex build_ht(const TextCorpus& corpus, const SuffixArraySet& sas,
                         std::uint32_t k, LoadFactor alpha) {
  if (k < 2) throw std::invalid_argument("prefix length k must be >= 2");
  if (!alpha.valid()) throw std::invalid_argument("load factor must be in (0,1]");
  const std::uint64_t n = corpus.size();
  if (n <= k) throw std::invalid_argument("corpus shorter than prefix length");

  const std::uint8_t* text = corpus.data.data();
  auto keeps = [&](std::uint64_t rank) { return sas.sa[rank] + std::uint64_t(k) <= n; };

  std::uint64_t key_count = 0;
  std::uint64_t prev = kNil32;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!keeps(i)) continue;
    if (prev == kNil32 || std::memcmp(text + sas.sa[i], text + prev, k) != 0)
      ++key_count;
    prev = sas.sa[i];
  }

  HashBucketIndex ht;
  ht.k = k;
  ht.alpha = alpha;
  ht.key_count = key_count;
  ht.slots.assign(ht_slot_count(key_count, alpha), HtSlot{});
  const std::uint64_t z = ht.z();

  // One group is open at a time: its slot is found by probing when the group
  // starts and written when the next group starts (or at the end), so probe
  // chains never cross a slot that is still pending.
  std::uint64_t open_slot = kNil32;
  std::uint32_t left = 0, last_kept = 0;
  prev = kNil32;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!keeps(i)) continue;
    if (prev == kNil32 || std::memcmp(text + sas.sa[i], text + prev, k) != 0) {
      if (open_slot != kNil32)
        ht.slots[open_slot] = {left, last_kept};
      std::uint64_t j = sdbm_hash({text + sas.sa[i], k}, z);
      while (!ht.slots[j].is_nil()) j = (j + 1) % z;
      open_slot = j;
      left = static_cast<std::uint32_t>(i);
    }
    last_kept = static_cast<std::uint32_t>(i);
    prev = sas.sa[i];
  }
  if (open_slot != kNil32) ht.slots[open_slot] = {left, last_kept};
  return ht;
}

SaInterval search_hash(const TextCorpus& corpus, const SuffixArraySet& sas,
                       const HashBucketIndex& ht, const Lut2& lut2,
                       ByteSpan pattern) {
  if (pattern.size() < ht.k)
    throw std::invalid_argument("pattern shorter than the hashed prefix");
  return search_hash_with(corpus.bytes(), ht, lut2, pattern,
                          [&](std::uint64_t i) { return sas.sa[i]; });
}

SaInterval search_short(const TextCorpus& corpus, const SuffixArraySet& sas,
                        const Lut2& lut2, ByteSpan pattern) {
  SaInterval start = SaInterval::full(corpus.size());
  if (const auto narrowed = lut_narrow(lut2, pattern)) {
    if (narrowed->empty()) return SaInterval::none();
    start = *narrowed;
  }
  return refine_interval(corpus, sas, pattern, start);
}

}  // namespace ftindex
