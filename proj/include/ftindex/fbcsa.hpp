#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "ftindex/lut.hpp"
#include "ftindex/sa_hash.hpp"
#include "ftindex/suffix_array.hpp"

namespace ftindex {

/// Fixed-block compact suffix array. Blocks of bs consecutive SA cells are
/// encoded against the three most frequent symbols (MFS) of the block's BWT
/// slice: a cell preceded by MFS[c] is recovered by following the block's
/// link for c and adding 1, everything else is stored verbatim. Every cell
/// whose value is a multiple of ss is also stored verbatim, which bounds the
/// recovery recursion below ss steps.
///
/// arr1 is a bit stream; block b starts at bit b*(3*bs+32) and holds, in
/// order: 2*bs code bits (two per cell, low bit first), bs explicit flags,
/// and one 32-bit word with the byte length of arr2 before this block.
/// arr2 holds, per block, 3 link words (kNil32 for NIL) followed by one word
/// per explicit cell in block order. Bit packing is little-endian: bit t of
/// the stream lives in word t/32 at in-word position t%32.
struct FbcsaIndex {
  std::uint32_t bs = 0;
  std::uint32_t ss = 0;
  std::uint64_t n = 0;
  std::vector<std::uint32_t> arr1;
  std::vector<std::uint32_t> arr2;

  std::uint64_t block_count() const { return (n + bs - 1) / bs; }
  std::uint64_t block_bits() const { return 3ull * bs + 32; }

  std::uint32_t code_at(std::uint64_t block, std::uint32_t off) const;
  bool flag_at(std::uint64_t block, std::uint32_t off) const;
  std::uint32_t a2s_of(std::uint64_t block) const;

  // Set flags (resp. code-c cells) strictly before `off` within the block.
  std::uint32_t flag_rank(std::uint64_t block, std::uint32_t off) const;
  std::uint32_t code_rank(std::uint64_t block, std::uint32_t off,
                          std::uint32_t code) const;
};

/// Per-block encoding facts: the MFS symbols (-1 NIL, descending frequency,
/// ties to the smaller byte), their first in-block offsets, the predecessor
/// links, and the explicit layout.
struct BlockView {
  std::array<std::int32_t, 3> mfs{-1, -1, -1};
  std::array<std::int32_t, 3> first_pos{-1, -1, -1};
  std::array<std::uint32_t, 3> links{kNil32, kNil32, kNil32};
  std::vector<std::uint8_t> codes;       // 0..2 = MFS index, 3 = other
  std::vector<bool> explicit_flags;      // code 3 or value % ss == 0
  std::vector<std::uint32_t> explicit_values;
};

/// Encodes one block of bs (or fewer, at the end) SA cells. `isa_of(v)` must
/// return the rank of value v; it is only consulted for v = value - 1 at the
/// first occurrence of each MFS symbol. `exclude_symbol` (-1 for none) is
/// barred from MFS candidacy; with the corpus sentinel excluded, no link can
/// ever target the predecessor of offset 0.
template <typename IsaFn>
BlockView analyze_block(ByteSpan bwt_slice,
                        std::span<const std::uint32_t> sa_slice, IsaFn&& isa_of,
                        std::uint32_t ss, int exclude_symbol) {
  BlockView view;
  const std::size_t len = bwt_slice.size();

  std::array<std::uint32_t, 256> freq{};
  for (std::uint8_t b : bwt_slice) ++freq[b];
  if (exclude_symbol >= 0) freq[exclude_symbol] = 0;

  for (int slot = 0; slot < 3; ++slot) {
    int best = -1;
    std::uint32_t best_count = 0;
    for (int b = 0; b < 256; ++b) {
      if (freq[b] > best_count) {
        best = b;
        best_count = freq[b];
      }
    }
    if (best < 0) break;
    view.mfs[slot] = best;
    freq[best] = 0;
  }

  view.codes.resize(len);
  view.explicit_flags.resize(len);
  for (std::size_t o = 0; o < len; ++o) {
    std::uint32_t code = 3;
    for (int c = 0; c < 3; ++c) {
      if (view.mfs[c] == bwt_slice[o]) {
        code = static_cast<std::uint32_t>(c);
        if (view.first_pos[c] < 0) view.first_pos[c] = static_cast<std::int32_t>(o);
        break;
      }
    }
    view.codes[o] = static_cast<std::uint8_t>(code);
    const bool is_explicit = code == 3 || sa_slice[o] % ss == 0;
    view.explicit_flags[o] = is_explicit;
    if (is_explicit) view.explicit_values.push_back(sa_slice[o]);
  }

  for (int c = 0; c < 3; ++c) {
    if (view.first_pos[c] < 0) continue;
    const std::uint32_t value = sa_slice[view.first_pos[c]];
    view.links[c] = isa_of(value - 1);
  }
  return view;
}

// Requires the corpus sentinel (the unique smallest terminator): it keeps
// every link target well defined and makes the one cell whose preceding
// symbol is the sentinel explicit. bs must be a multiple of 32, or of 8 when
// `allow_small_blocks` is set. A final partial block is padded with explicit
// cells that carry no stored value and are never queried.
FbcsaIndex build_fbcsa(const TextCorpus& corpus, const SuffixArraySet& sas,
                       std::uint32_t bs, std::uint32_t ss,
                       bool allow_small_blocks = false);

// SA[i], recovered from the block encoding. Throws corrupt_index_error on a
// NIL link or an out-of-range hop.
std::uint32_t decode_cell(const FbcsaIndex& idx, std::uint64_t i);

// As decode_cell, also reporting how many link hops were taken (< ss).
std::uint32_t decode_cell_traced(const FbcsaIndex& idx, std::uint64_t i,
                                 std::uint32_t& depth);

// SA[i..i+c-1], each cell decoded independently.
std::vector<std::uint32_t> extract_run(const FbcsaIndex& idx, std::uint64_t i,
                                       std::uint64_t c);

enum class Narrowing { none, lut2, lut3, hash };

/// Optional interval-narrowing structures for FBCSA searches. hash requires
/// both `ht` and `lut2`.
struct NarrowingContext {
  const Lut2* lut2 = nullptr;
  const Lut3* lut3 = nullptr;
  const HashBucketIndex* ht = nullptr;
};

// Maximal SA interval of suffixes prefixed by `pattern`; every SA access
// goes through decode_cell. A pattern shorter than the narrowing key falls
// back to LUT2 (hash) or the full interval (lut3).
SaInterval fbcsa_find(const TextCorpus& corpus, const FbcsaIndex& idx,
                      ByteSpan pattern, Narrowing narrowing,
                      const NarrowingContext& ctx);

std::uint64_t count_fbcsa(const TextCorpus& corpus, const FbcsaIndex& idx,
                          ByteSpan pattern, Narrowing narrowing,
                          const NarrowingContext& ctx);
std::vector<std::uint32_t> locate_fbcsa(const TextCorpus& corpus,
                                        const FbcsaIndex& idx, ByteSpan pattern,
                                        Narrowing narrowing,
                                        const NarrowingContext& ctx);

struct FbcsaSizeReport {
  std::uint64_t arr1_bytes = 0;
  std::uint64_t arr2_bytes = 0;
  std::uint64_t total = 0;
};

FbcsaSizeReport size_report(const FbcsaIndex& idx);

}  // namespace ftindex
