#pragma once

#include <cstdint>
#include <filesystem>
#include <variant>

#include "ftindex/fbcsa.hpp"
#include "ftindex/lut.hpp"
#include "ftindex/sa_hash.hpp"
#include "ftindex/suffix_array.hpp"

namespace ftindex {

/// On-disk index kinds. The numeric values are part of the file format.
enum class IndexKind : std::uint8_t {
  sa = 1,
  lut2 = 2,
  lut3 = 3,
  ht = 4,
  fbcsa = 5,
};

/// 48-byte little-endian file header; see docs/index-format.md for the byte
/// layout and a worked hex example. The corpus checksum (FNV-1a over the
/// corpus bytes, sentinel included) ties an index file to its text.
struct IndexFileHeader {
  static constexpr std::uint16_t kVersion = 1;
  static constexpr char kMagic[4] = {'F', 'T', 'I', 'X'};

  std::uint16_t version = kVersion;
  IndexKind kind = IndexKind::sa;
  bool sentinel_appended = false;
  std::uint16_t k = 0;
  LoadFactor alpha{0, 0};
  std::uint32_t bs = 0;
  std::uint32_t ss = 0;
  std::uint64_t corpus_checksum = 0;
  std::uint64_t n = 0;
  std::uint64_t payload_length = 0;
};

std::uint64_t fnv1a64(ByteSpan bytes);
std::uint64_t corpus_checksum(const TextCorpus& corpus);

// Each saver returns the number of bytes written.
std::uint64_t save_index(const SuffixArraySet& sas, const TextCorpus& corpus,
                         const std::filesystem::path& path);
std::uint64_t save_index(const Lut2& lut, const TextCorpus& corpus,
                         const std::filesystem::path& path);
std::uint64_t save_index(const Lut3& lut, const TextCorpus& corpus,
                         const std::filesystem::path& path);
std::uint64_t save_index(const HashBucketIndex& ht, const TextCorpus& corpus,
                         const std::filesystem::path& path);
std::uint64_t save_index(const FbcsaIndex& idx, const TextCorpus& corpus,
                         const std::filesystem::path& path);

IndexFileHeader read_header(const std::filesystem::path& path);

// Typed loaders; throw format_error when the file's kind differs.
SuffixArraySet load_sa(const std::filesystem::path& path);
Lut2 load_lut2(const std::filesystem::path& path);
Lut3 load_lut3(const std::filesystem::path& path);
HashBucketIndex load_ht(const std::filesystem::path& path);
FbcsaIndex load_fbcsa(const std::filesystem::path& path);

/// A loaded index of any kind plus its header.
struct AnyIndex {
  IndexFileHeader header;
  std::variant<SuffixArraySet, Lut2, Lut3, HashBucketIndex, FbcsaIndex> value;
};

AnyIndex load_index(const std::filesystem::path& path);

}  // namespace ftindex
