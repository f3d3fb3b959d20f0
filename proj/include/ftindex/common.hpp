#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string_view>
#include <string>
#include <vector>

namespace ftindex {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

// Rank/offset sentinel; valid ranks and offsets are < 0xFFFFFFFF.
inline constexpr std::uint32_t kNil32 = std::numeric_limits<std::uint32_t>::max();

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// A structurally damaged index was detected at query time.
class corrupt_index_error : public std::runtime_error {
 public:
  explicit corrupt_index_error(const std::string& what) : std::runtime_error(what) {}
};

inline ByteSpan as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace ftindex
