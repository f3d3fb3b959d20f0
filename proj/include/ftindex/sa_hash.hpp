#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

#include "ftindex/lut.hpp"
#include "ftindex/suffix_array.hpp"

namespace ftindex {

/// Target load factor kept as a rational so headers and slot arithmetic stay
/// exact. value() = num/den, required in (0, 1].
struct LoadFactor {
  std::uint16_t num = 1;
  std::uint16_t den = 2;

  double value() const { return double(num) / den; }
  bool valid() const { return num >= 1 && den >= 1 && num <= den; }
  friend bool operator==(const LoadFactor&, const LoadFactor&) = default;
};

/// One slot of the open-addressing table: the SA interval of one distinct
/// k-byte prefix. NIL slots have left == kNil32.
struct HtSlot {
  std::uint32_t left = kNil32;
  std::uint32_t right = kNil32;

  bool is_nil() const { return left == kNil32; }
  friend bool operator==(const HtSlot&, const HtSlot&) = default;
};

/// Open-addressing hash table over the distinct k-byte suffix prefixes, with
/// linear probing. Slot count is ceil(key_count / alpha); reported memory is
/// slots * 8 bytes (two 4-byte ranks per slot).
struct HashBucketIndex {
  std::vector<HtSlot> slots;
  std::uint32_t k = 0;
  LoadFactor alpha;
  std::uint64_t key_count = 0;

  std::uint64_t z() const { return slots.size(); }
  std::uint64_t bytes() const { return slots.size() * sizeof(HtSlot); }
};

// sdbm fold: h <- byte + 65599*h in wrapping unsigned 64-bit arithmetic,
// reduced mod z once at the end.
inline std::uint64_t sdbm_hash(ByteSpan bytes, std::uint64_t z) {
  std::uint64_t h = 0;
  for (std::uint8_t b : bytes) h = b + 65599ull * h;
  return h % z;
}

std::uint64_t ht_slot_count(std::uint64_t key_count, LoadFactor alpha);

// Two passes over the suffix array: count the distinct k-grams to size the
// table, then insert one (first rank, last rank) interval per k-gram.
// Suffixes shorter than k bytes are skipped; length exactly k is kept.
HashBucketIndex build_ht(const TextCorpus& corpus, const SuffixArraySet& sas,
                         std::uint32_t k, LoadFactor alpha);

// Full pattern search for m >= k: LUT2 cut-off, then probe from
// sdbm(P[0..k-1]); a slot passing the containment check and the k-byte text
// comparison is refined by binary search. `sa_at` supplies SA values so the
// verify-by-text step works on plain and compact arrays alike.
template <typename SaAt>
SaInterval search_hash_with(ByteSpan text, const HashBucketIndex& ht,
                            const Lut2& lut2, ByteSpan pattern, SaAt&& sa_at) {
  const auto narrowed = lut_narrow(lut2, pattern);
  if (!narrowed || narrowed->empty()) return SaInterval::none();
  const std::uint32_t beg = narrowed->lo;
  const std::uint32_t end = narrowed->hi;
  const ByteSpan prefix = pattern.subspan(0, ht.k);
  const std::uint64_t z = ht.z();
  std::uint64_t j = sdbm_hash(prefix, z);
  for (std::uint64_t probes = 0; probes < z; ++probes) {
    const HtSlot& slot = ht.slots[j];
    if (slot.is_nil()) return SaInterval::none();
    if (beg <= slot.left && slot.left <= end) {
      const std::uint64_t off = sa_at(slot.left);
      if (std::memcmp(text.data() + off, prefix.data(), ht.k) == 0)
        return refine_interval_with(text, pattern, {slot.left, slot.right},
                                    sa_at);
    }
    j = (j + 1) % z;
  }
  return SaInterval::none();  // table saturated (alpha = 1), key absent
}

SaInterval search_hash(const TextCorpus& corpus, const SuffixArraySet& sas,
                       const HashBucketIndex& ht, const Lut2& lut2,
                       ByteSpan pattern);

// Fallback for 1 <= m < k: LUT2 narrowing when m >= 2, then binary search.
SaInterval search_short(const TextCorpus& corpus, const SuffixArraySet& sas,
                        const Lut2& lut2, ByteSpan pattern);

}  // namespace ftindex
