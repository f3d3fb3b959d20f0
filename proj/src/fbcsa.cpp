#include "ftindex/fbcsa.hpp"

#include <bit>

namespace ftindex {

namespace {

constexpr std::uint32_t kPairLowBits = 0x55555555u;

std::uint32_t read_bits(const std::vector<std::uint32_t>& words,
                        std::uint64_t bitpos, std::uint32_t width) {
  const std::uint64_t w = bitpos >> 5;
  const std::uint32_t b = static_cast<std::uint32_t>(bitpos & 31);
  std::uint64_t v = words[w] >> b;
  if (b + width > 32) v |= std::uint64_t(words[w + 1]) << (32 - b);
  if (width == 32) return static_cast<std::uint32_t>(v);
  return static_cast<std::uint32_t>(v & ((1ull << width) - 1));
}

void write_bits(std::vector<std::uint32_t>& words, std::uint64_t bitpos,
                std::uint32_t width, std::uint32_t value) {
  const std::uint64_t w = bitpos >> 5;
  const std::uint32_t b = static_cast<std::uint32_t>(bitpos & 31);
  words[w] |= value << b;
  if (b + width > 32) words[w + 1] |= value >> (32 - b);
}

// Set bits in [start, start+len) of the stream.
std::uint32_t popcount_range(const std::vector<std::uint32_t>& words,
                             std::uint64_t start, std::uint32_t len) {
  std::uint32_t count = 0;
  std::uint64_t pos = start;
  while (len > 0) {
    const std::uint64_t w = pos >> 5;
    const std::uint32_t b = static_cast<std::uint32_t>(pos & 31);
    const std::uint32_t take = std::min(32 - b, len);
    std::uint32_t word = words[w] >> b;
    if (take < 32) word &= (1u << take) - 1;
    count += std::popcount(word);
    pos += take;
    len -= take;
  }
  return count;
}

}  // namespace

std::uint32_t FbcsaIndex::code_at(std::uint64_t block, std::uint32_t off) const {
  return read_bits(arr1, block * block_bits() + 2ull * off, 2);
}

bool FbcsaIndex::flag_at(std::uint64_t block, std::uint32_t off) const {
  return read_bits(arr1, block * block_bits() + 2ull * bs + off, 1) != 0;
}

std::uint32_t FbcsaIndex::a2s_of(std::uint64_t block) const {
  return read_bits(arr1, block * block_bits() + 3ull * bs, 32);
}

std::uint32_t FbcsaIndex::flag_rank(std::uint64_t block,
                                    std::uint32_t off) const {
  return popcount_range(arr1, block * block_bits() + 2ull * bs, off);
}

std::uint32_t FbcsaIndex::code_rank(std::uint64_t block, std::uint32_t off,
                                    std::uint32_t code) const {
  // Count 2-bit fields equal to `code` among fields [0, off). Field start
  // bits are even, so a field never straddles a word boundary.
  const std::uint32_t pattern =
      (code & 1 ? kPairLowBits : 0u) | (code & 2 ? kPairLowBits << 1 : 0u);
  std::uint64_t bit = block * block_bits();
  std::uint32_t remaining = off;
  std::uint32_t count = 0;
  while (remaining > 0) {
    const std::uint64_t w = bit >> 5;
    const std::uint32_t b = static_cast<std::uint32_t>(bit & 31);
    const std::uint32_t fields = std::min((32 - b) / 2, remaining);
    const std::uint32_t word = arr1[w] >> b;
    std::uint32_t match = ~(word ^ pattern);
    match &= match >> 1;
    match &= fields == 16 ? kPairLowBits
                          : ((1u << (2 * fields)) - 1) & kPairLowBits;
    count += std::popcount(match);
    bit += 2ull * fields;
    remaining -= fields;
  }
  return count;
}

FbcsaIndex build_fbcsa(const TextCorpus& corpus, const SuffixArraySet& sas,
                       std::uint32_t bs, std::uint32_t ss,
                       bool allow_small_blocks) {
  if (!corpus.sentinel_appended)
    throw std::invalid_argument("fbcsa requires the corpus sentinel");
  if (ss < 1) throw std::invalid_argument("sampling step must be >= 1");
  const std::uint32_t granularity = allow_small_blocks ? 8 : 32;
  if (bs == 0 || bs % granularity != 0)
    throw std::invalid_argument("block size must be a positive multiple of " +
                                std::to_string(granularity));

  FbcsaIndex idx;
  idx.bs = bs;
  idx.ss = ss;
  idx.n = corpus.size();
  const std::uint64_t blocks = idx.block_count();
  const std::uint64_t total_bits = blocks * idx.block_bits();
  idx.arr1.assign((total_bits + 31) / 32, 0);

  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t start = b * bs;
    const std::uint32_t real =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(bs, idx.n - start));
    const BlockView view = analyze_block(
        ByteSpan(sas.bwt.data() + start, real),
        std::span<const std::uint32_t>(sas.sa.data() + start, real),
        [&](std::uint32_t v) { return sas.isa[v]; }, ss,
        TextCorpus::kSentinel);

    const std::uint64_t base = b * idx.block_bits();
    for (std::uint32_t o = 0; o < real; ++o)
      write_bits(idx.arr1, base + 2ull * o, 2, view.codes[o]);
    for (std::uint32_t o = real; o < bs; ++o)
      write_bits(idx.arr1, base + 2ull * o, 2, 3);
    for (std::uint32_t o = 0; o < real; ++o)
      if (view.explicit_flags[o])
        write_bits(idx.arr1, base + 2ull * bs + o, 1, 1);
    for (std::uint32_t o = real; o < bs; ++o)
      write_bits(idx.arr1, base + 2ull * bs + o, 1, 1);

    const std::uint64_t a2s = idx.arr2.size() * 4;
    if (a2s > 0xFFFFFFFFull)
      throw std::invalid_argument("fbcsa arr2 exceeds the 4 GiB layout limit");
    write_bits(idx.arr1, base + 3ull * bs, 32, static_cast<std::uint32_t>(a2s));

    for (int c = 0; c < 3; ++c) idx.arr2.push_back(view.links[c]);
    for (std::uint32_t v : view.explicit_values) idx.arr2.push_back(v);
  }
  return idx;
}

namespace {

std::uint32_t decode_impl(const FbcsaIndex& idx, std::uint64_t i,
                          std::uint32_t* depth_out) {
  if (i >= idx.n) throw std::out_of_range("cell index out of range");
  std::uint32_t steps = 0;
  for (;;) {
    const std::uint64_t block = i / idx.bs;
    const std::uint32_t off = static_cast<std::uint32_t>(i % idx.bs);
    const std::uint32_t a2s = idx.a2s_of(block);
    const std::uint64_t arr2_base = a2s / 4;
    if (idx.flag_at(block, off)) {
      const std::uint32_t r = idx.flag_rank(block, off);
      if (arr2_base + 3 + r >= idx.arr2.size())
        throw corrupt_index_error("block bookkeeping points past arr2");
      if (depth_out) *depth_out = steps;
      return idx.arr2[arr2_base + 3 + r] + steps;
    }
    const std::uint32_t code = idx.code_at(block, off);
    if (code == 3)
      throw corrupt_index_error("non-explicit cell outside the MFS codes");
    if (arr2_base + code >= idx.arr2.size())
      throw corrupt_index_error("block bookkeeping points past arr2");
    const std::uint32_t link = idx.arr2[arr2_base + code];
    if (link == kNil32)
      throw corrupt_index_error("NIL link reached from a non-explicit cell");
    const std::uint32_t r = idx.code_rank(block, off, code);
    i = std::uint64_t(link) + r;
    if (i >= idx.n) throw corrupt_index_error("link hop out of range");
    if (++steps >= idx.ss)
      throw corrupt_index_error("decode exceeded the sampling depth bound");
  }
}

}  // namespace

std::uint32_t decode_cell(const FbcsaIndex& idx, std::uint64_t i) {
  return decode_impl(idx, i, nullptr);
}

std::uint32_t decode_cell_traced(const FbcsaIndex& idx, std::uint64_t i,
                                 std::uint32_t& depth) {
  return decode_impl(idx, i, &depth);
}

std::vector<std::uint32_t> extract_run(const FbcsaIndex& idx, std::uint64_t i,
                                       std::uint64_t c) {
  if (i + c > idx.n) throw std::out_of_range("run exceeds the cell count");
  std::vector<std::uint32_t> out;
  out.reserve(c);
  for (std::uint64_t j = 0; j < c; ++j) out.push_back(decode_cell(idx, i + j));
  return out;
}

SaInterval fbcsa_find(const TextCorpus& corpus, const FbcsaIndex& idx,
                      ByteSpan pattern, Narrowing narrowing,
                      const NarrowingContext& ctx) {
  const ByteSpan text = corpus.bytes();
  auto sa_at = [&](std::uint64_t i) { return decode_cell(idx, i); };
  SaInterval start = SaInterval::full(idx.n);

  switch (narrowing) {
    case Narrowing::none:
      break;
    case Narrowing::lut2:
      if (!ctx.lut2) throw std::invalid_argument("lut2 narrowing without a LUT2");
      if (const auto iv = lut_narrow(*ctx.lut2, pattern)) {
        if (iv->empty()) return SaInterval::none();
        start = *iv;
      }
      break;
    case Narrowing::lut3:
      if (!ctx.lut3) throw std::invalid_argument("lut3 narrowing without a LUT3");
      if (const auto iv = lut_narrow(*ctx.lut3, pattern)) {
        if (iv->empty()) return SaInterval::none();
        start = *iv;
      }
      break;
    case Narrowing::hash: {
      if (!ctx.ht || !ctx.lut2)
        throw std::invalid_argument("hash narrowing needs both HT and LUT2");
      if (pattern.size() >= ctx.ht->k)
        return search_hash_with(text, *ctx.ht, *ctx.lut2, pattern, sa_at);
      // Short-pattern fallback, as for the plain hashed index.
      if (const auto iv = lut_narrow(*ctx.lut2, pattern)) {
        if (iv->empty()) return SaInterval::none();
        start = *iv;
      }
      break;
    }
  }
  return refine_interval_with(text, pattern, start, sa_at);
}

std::uint64_t count_fbcsa(const TextCorpus& corpus, const FbcsaIndex& idx,
                          ByteSpan pattern, Narrowing narrowing,
                          const NarrowingContext& ctx) {
  return fbcsa_find(corpus, idx, pattern, narrowing, ctx).length();
}

std::vector<std::uint32_t> locate_fbcsa(const TextCorpus& corpus,
                                        const FbcsaIndex& idx, ByteSpan pattern,
                                        Narrowing narrowing,
                                        const NarrowingContext& ctx) {
  const SaInterval iv = fbcsa_find(corpus, idx, pattern, narrowing, ctx);
  if (iv.empty()) return {};
  return extract_run(idx, iv.lo, iv.length());
}

FbcsaSizeReport size_report(const FbcsaIndex& idx) {
  FbcsaSizeReport report;
  report.arr1_bytes = idx.block_count() * (3ull * idx.bs + 32) / 8;
  report.arr2_bytes = idx.arr2.size() * 4;
  report.total = report.arr1_bytes + report.arr2_bytes;
  return report;
}

}  // namespace ftindex
