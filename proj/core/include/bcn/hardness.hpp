#pragma once

// Reduction from satisfiability to the maximal-entropy question: for a
// formula g over z_1..z_n the network X_i' = U_i & !g(X_1..X_n), i = 1..n,
// has maximal entropy exactly when g is unsatisfiable. A satisfying state is
// sent to all-FALSE by every control, which leaves a single one in its
// column of M; otherwise X' = U and M is all ones.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcn/formula.hpp"
#include "bcn/network.hpp"
#include "bcn/stp.hpp"

namespace bcn {

class ReductionResult {
 public:
  ReductionResult(Formula source, std::vector<std::string> variables,
                  NetworkDef network)
      : source_(std::move(source)),
        variables_(std::move(variables)),
        network_(std::move(network)) {}

  const Formula& source_formula() const noexcept { return source_; }
  // Variable order of the source formula; variable k becomes state X_k.
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const NetworkDef& network() const noexcept { return network_; }

  // True iff the source formula is unsatisfiable. Decided by brute force, so
  // this is exponential; the reduction itself is not.
  bool predicted_max_entropy(
      std::size_t variable_cap = kDefaultSatVariableCap) const;

 private:
  Formula source_;
  std::vector<std::string> variables_;
  NetworkDef network_;
};

// Builds the reduction network in time linear in the formula size; the
// negated formula is shared between all n updates. Throws
// std::invalid_argument if `variables` is empty, has duplicates, or misses a
// variable of g.
ReductionResult reduce_sat(const Formula& g, const std::vector<std::string>& variables);

inline constexpr std::size_t kVerifyMaxVariables = 4;

struct ReductionVerification {
  bool satisfiable = false;
  std::optional<Assignment> witness;
  bool max_entropy = false;
  // satisfiable == !max_entropy
  bool equivalence_holds = false;
  // 1-based states whose variable assignment satisfies g.
  std::vector<Index> satisfying_states;
  // Each satisfying state's column of M is exactly e_{2^n}^{2^n}.
  bool satisfying_columns_collapse = false;
  bool merged_all_ones = false;

  bool ok() const noexcept {
    return equivalence_holds && satisfying_columns_collapse &&
           (satisfiable || merged_all_ones);
  }
};

// Desk-scale exhaustive check of the reduction. Throws CapExceeded above
// kVerifyMaxVariables variables.
ReductionVerification verify_reduction(const Formula& g,
                                       const std::vector<std::string>& variables);

struct CnfFormula {
  Formula formula;
  // x1 .. xV from the problem line.
  std::vector<std::string> variables;
  std::size_t clause_count = 0;
};

// DIMACS CNF: `c` comment lines, a `p cnf V C` header, clauses of nonzero
// literals terminated by 0. Variable k is named "x<k>". An empty clause
// yields FALSE; no clauses yields TRUE.
CnfFormula parse_dimacs(std::string_view text);

}  // namespace bcn
