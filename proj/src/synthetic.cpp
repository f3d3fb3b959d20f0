#include "ftindex/synthetic.hpp"

#include <array>

namespace ftindex {

namespace {

constexpr int kAlphabet = 27;  // 'a'..'z' and ' '

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

char symbol_of(int s) { return s < 26 ? static_cast<char>('a' + s) : ' '; }

struct Context {
  // Successors with cumulative weights; weights fall off by 4x down the
  // list, so the first choice dominates the way frequent digrams do in
  // natural text (conditional entropy near 1.2 bits per symbol).
  std::array<std::uint8_t, 8> successor{};
  std::array<std::uint32_t, 8> cumulative{};
  std::uint32_t total = 0;
  std::uint32_t arity = 0;
};

}  // namespace

Bytes generate_markov_text(std::uint64_t size, std::uint64_t seed) {
  std::vector<Context> table(kAlphabet * kAlphabet);
  for (int a = 0; a < kAlphabet; ++a) {
    for (int b = 0; b < kAlphabet; ++b) {
      Context& ctx = table[a * kAlphabet + b];
      std::uint64_t h = splitmix64(seed ^ (std::uint64_t(a) << 32) ^ b);
      ctx.arity = 2 + static_cast<std::uint32_t>(h % 4);  // 2..5 successors
      std::uint32_t weight = 1;
      for (std::uint32_t s = 1; s < ctx.arity; ++s) weight *= 4;
      for (std::uint32_t s = 0; s < ctx.arity; ++s) {
        h = splitmix64(h);
        ctx.successor[s] = static_cast<std::uint8_t>(h % kAlphabet);
        ctx.total += weight;
        ctx.cumulative[s] = ctx.total;
        weight = weight > 1 ? weight / 4 : 1;
      }
    }
  }

  Bytes text(size);
  std::uint64_t state = splitmix64(seed ^ 0x5ca1ab1eull);
  int a = static_cast<int>(state % kAlphabet);
  state = splitmix64(state);
  int b = static_cast<int>(state % kAlphabet);
  for (std::uint64_t i = 0; i < size; ++i) {
    const Context& ctx = table[a * kAlphabet + b];
    state = splitmix64(state);
    const std::uint32_t r = static_cast<std::uint32_t>(state % ctx.total);
    std::uint32_t pick = 0;
    while (ctx.cumulative[pick] <= r) ++pick;
    const int next = ctx.successor[pick];
    text[i] = static_cast<std::uint8_t>(symbol_of(next));
    a = b;
    b = next;
  }
  return text;
}

}  // namespace ftindex
