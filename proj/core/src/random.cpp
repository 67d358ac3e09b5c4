#include "bcn/random.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "bcn/error.hpp"

namespace bcn {

LogicalMatrix random_transition(unsigned n, unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t columns = std::size_t{1} << (n + m);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint32_t> targets(columns);
  for (auto& t : targets) t = static_cast<std::uint32_t>(rng() & mask);
  return LogicalMatrix::from_zero_based(std::size_t{1} << n, std::move(targets));
}

NetworkDef random_network(unsigned n, unsigned m, std::uint64_t seed,
                          unsigned cap_bits) {
  if (n < 1 || m > n) {
    throw std::invalid_argument("random network needs 1 <= n and m <= n");
  }
  if (n + m > cap_bits || n + m > 31) {
    throw CapExceeded("random network with " + std::to_string(n + m) +
                      " bits exceeds cap " + std::to_string(cap_bits));
  }
  return decompile(AssrModel(n, m, random_transition(n, m, seed)));
}

}  // namespace bcn
