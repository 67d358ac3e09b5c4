#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "bcn/network.hpp"
#include "bcn/stp.hpp"

namespace bcn {

inline constexpr unsigned kDefaultCapBits = 24;

// Algebraic state-space form x(k+1) = L ⋉ u(k) ⋉ x(k) of a network with n
// states and m inputs. Column (iu-1)·2^n + ix of L (1-based) is the successor
// of state ix under input iu.
class AssrModel {
 public:
  // Derives the slices and the merged matrix from L. Throws
  // std::invalid_argument if L is not 2^n × 2^{n+m}.
  AssrModel(unsigned n, unsigned m, LogicalMatrix transition);

  unsigned state_bits() const noexcept { return n_; }
  unsigned input_bits() const noexcept { return m_; }
  std::size_t state_count() const noexcept { return std::size_t{1} << n_; }
  std::size_t input_count() const noexcept { return std::size_t{1} << m_; }

  const LogicalMatrix& transition() const noexcept { return transition_; }
  // L ⋉ e_{2^m}^i for i = 1..2^m, stored 0-based.
  const std::vector<LogicalMatrix>& slices() const noexcept { return slices_; }
  const LogicalMatrix& slice(Index input) const { return slices_.at(input - 1); }
  // OR of all slices: M[i][j] = 1 iff some input moves state j to state i.
  const BoolMatrix& merged() const noexcept { return merged_; }

 private:
  unsigned n_;
  unsigned m_;
  LogicalMatrix transition_;
  std::vector<LogicalMatrix> slices_;
  BoolMatrix merged_;
};

struct CompileOptions {
  unsigned cap_bits = kDefaultCapBits;
  // Worker threads for column evaluation; the result does not depend on it.
  unsigned threads = 1;
};

// Evaluates every update formula on all 2^{n+m} (input, state) pairs.
// Throws CapExceeded if n + m > options.cap_bits.
AssrModel compile(const NetworkDef& net, const CompileOptions& options = {});

// Truth-table network (one disjunction of minterms per state, states X1..Xn,
// inputs U1..Um) with compile(decompile(model)).transition() ==
// model.transition().
NetworkDef decompile(const AssrModel& model);

// States reachable from `state` in one step under some input (rows of the
// ones in column `state` of M). Throws std::out_of_range.
std::set<Index> one_step_reachable(const AssrModel& model, Index state);

struct TransitionEdge {
  Index from;
  Index to;
  // Inputs driving `from` to `to`, ascending.
  std::vector<Index> inputs;

  friend bool operator==(const TransitionEdge&, const TransitionEdge&) = default;
};

struct TransitionGraph {
  std::size_t vertex_count = 0;
  // Sorted by (from, to).
  std::vector<TransitionEdge> edges;
};

TransitionGraph transition_graph(const AssrModel& model);

}  // namespace bcn
