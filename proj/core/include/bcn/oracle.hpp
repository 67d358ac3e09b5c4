#pragma once

// Brute-force counterparts of the spectral machinery, kept independent of
// it: walk counting on M, trajectory enumeration by direct simulation of the
// update formulas, and subset enumeration for closed sets.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bcn/network.hpp"
#include "bcn/stp.hpp"

namespace bcn {

using BigInt = boost::multiprecision::cpp_int;

// Number of length-j walks in the graph of M: the sum of all entries of
// M^{j-1}. j = 1 gives the vertex count. Throws std::invalid_argument if
// j = 0.
BigInt count_walks(const BoolMatrix& m, std::size_t j);

inline constexpr std::uint64_t kTrajectoryGuard = 10'000'000;

// Number of distinct state sequences X(0) ... X(j-1) over all initial
// states and all j-1 step control sequences, by simulation. Throws
// CapExceeded if 2^n · 2^{m(j-1)} > guard.
BigInt enumerate_trajectories(const NetworkDef& net, std::size_t j,
                              std::uint64_t guard = kTrajectoryGuard);

// log2 of a positive integer of any size.
double log2_big(const BigInt& x);

struct EntropyEstimate {
  // (1/j) log2 count_walks(M, j) for j = 1 .. j_max.
  std::vector<double> per_step;
  // log2(count(j_max) / count(j_max - 1)). Converges to the entropy when the
  // dominant component is aperiodic; per_step always converges.
  double ratio = 0.0;
};

EntropyEstimate entropy_estimate(const BoolMatrix& m, std::size_t j_max);

inline constexpr std::size_t kClosedSetOracleMaxStates = 12;

// Union of all state sets S (0-based, ascending) whose members each have
// exactly v successors, all in S. Throws CapExceeded above
// kClosedSetOracleMaxStates states.
std::vector<std::uint32_t> maximal_closed_set_bruteforce(const BoolMatrix& m,
                                                         std::size_t v);

}  // namespace bcn
