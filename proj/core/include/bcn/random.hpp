#pragma once

#include <cstdint>

#include "bcn/assr.hpp"
#include "bcn/network.hpp"

namespace bcn {

// Uniformly random transition matrix: every (input, state) column gets an
// independent uniformly random successor. Uses the raw mt19937_64 stream, so
// the result is identical on every platform for a given seed.
LogicalMatrix random_transition(unsigned n, unsigned m, std::uint64_t seed);

// A network with uniformly random update functions, in minterm form (see
// decompile). Throws std::invalid_argument unless 1 <= n and m <= n, and
// CapExceeded if n + m > cap_bits.
NetworkDef random_network(unsigned n, unsigned m, std::uint64_t seed,
                          unsigned cap_bits = kDefaultCapBits);

}  // namespace bcn
