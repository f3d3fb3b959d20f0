#pragma once

#include <cstdint>

#include "ftindex/common.hpp"

namespace ftindex {

// Order-2 Markov chain over the 26 lowercase letters plus space. Each
// two-symbol context allows a small pseudo-random set of successors with
// skewed weights, giving word-like byte statistics: repeated frequent
// q-grams, a distinct-8-gram count well below n. Deterministic in the seed.
Bytes generate_markov_text(std::uint64_t size, std::uint64_t seed);

}  // namespace ftindex
