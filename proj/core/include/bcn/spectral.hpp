#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bcn/assr.hpp"
#include "bcn/stp.hpp"

namespace bcn {

// Largest / smallest number of ones in a column of a square 0/1 matrix.
std::size_t max_column_sum(const BoolMatrix& m);
std::size_t min_column_sum(const BoolMatrix& m);

struct PerronBounds {
  std::size_t lo;
  std::size_t hi;
};

// Column-sum enclosure of the Perron root: lo <= perron_root(m) <= hi.
PerronBounds perron_bounds(const BoolMatrix& m);

// Strongly connected components of the digraph with an edge j -> i whenever
// m(i, j) = 1. Each component lists 0-based vertices in ascending order;
// components come out in reverse topological order.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(
    const BoolMatrix& m);

struct PowerIterationOptions {
  double tolerance = 1e-12;
  // Iteration cap is factor × matrix dimension.
  std::size_t cap_factor = 100;
};

// Spectral radius of a square 0/1 matrix. Each nontrivial strongly connected
// component C is handled by power iteration on M_C + I, which is primitive;
// the answer is the largest component value minus one. Throws
// ConvergenceError when an iteration hits its cap.
double perron_root(const BoolMatrix& m, const PowerIterationOptions& options = {});

struct Entropy {
  double bits = 0.0;
  double lambda = 0.0;
  // λ = 0: no cycles, the trajectory count eventually vanishes. Reported as
  // zero bits.
  bool nilpotent = false;
};

// log2 of the Perron root.
Entropy entropy_bits(const BoolMatrix& m, const PowerIterationOptions& options = {});

// The largest state set Y (0-based, ascending) in which every member has
// exactly v successors, all inside Y. Computed as the greatest fixpoint of
// S ↦ {j ∈ S : succ(j) ⊆ S} starting from the columns with sum v.
std::vector<std::uint32_t> maximal_closed_set(const BoolMatrix& m, std::size_t v);

// P M P' = [B C; 0 D] with the closed set Y listed first.
struct LogVDecomposition {
  std::size_t v;
  std::size_t r;
  // permutation[k] = 1-based original index placed at position k+1;
  // Y ascending, then the rest ascending.
  std::vector<Index> permutation;
  BoolMatrix b;
  BoolMatrix c;
  BoolMatrix d;
};

// Applies the permutation: result(a, b) = m(perm[a]-1, perm[b]-1).
BoolMatrix permute(const BoolMatrix& m, const std::vector<Index>& permutation);

// Decomposition witnessing h = log v, or nullopt when none exists (and then
// h < log v). The block conditions are verified entrywise before returning;
// a violation throws std::logic_error.
std::optional<LogVDecomposition> check_log_v(const BoolMatrix& m);

// Maximal entropy for m inputs, in bits.
constexpr double h_max_bits(unsigned m) { return static_cast<double>(m); }

// Exact decision of h = m bits, without floating point.
bool is_max_entropy(const AssrModel& model);

// Every state reaches every state in one step, i.e. M is all ones.
bool is_one_step_controllable(const BoolMatrix& m);

struct SpectralReport {
  std::size_t v = 0;
  std::size_t min_column_sum = 0;
  double lambda = 0.0;
  double entropy_bits = 0.0;
  double h_max_bits = 0.0;
  bool nilpotent = false;
  bool is_log_v = false;
  // 1-based, ascending; empty when there is no closed set.
  std::vector<Index> closed_set;
  std::size_t r = 0;
  std::vector<Index> permutation;
  bool is_max_entropy = false;
  bool is_one_step_controllable = false;
};

SpectralReport analyze(const AssrModel& model,
                       const PowerIterationOptions& options = {});

}  // namespace bcn
