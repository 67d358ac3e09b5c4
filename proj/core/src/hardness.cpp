#include "bcn/hardness.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "bcn/assr.hpp"
#include "bcn/error.hpp"
#include "bcn/spectral.hpp"

namespace bcn {

bool ReductionResult::predicted_max_entropy(std::size_t variable_cap) const {
  return !satisfiable_bruteforce(source_, variables_, variable_cap).has_value();
}

ReductionResult reduce_sat(const Formula& g, const std::vector<std::string>& variables) {
  if (variables.empty()) {
    throw std::invalid_argument("reduction needs at least one variable");
  }
  const std::size_t n = variables.size();
  std::map<std::string, Formula, std::less<>> rename;
  std::vector<std::string> states, inputs;
  for (std::size_t i = 0; i < n; ++i) {
    states.push_back("X" + std::to_string(i + 1));
    inputs.push_back("U" + std::to_string(i + 1));
    if (!rename.emplace(variables[i], Formula::var(states.back())).second) {
      throw std::invalid_argument("duplicate variable '" + variables[i] + "'");
    }
  }
  for (const auto& name : g.variables()) {
    if (!rename.contains(name)) {
      throw std::invalid_argument("formula variable '" + name +
                                  "' missing from the variable list");
    }
  }
  const Formula blocked = Formula::negate(substitute(g, rename));
  std::vector<Formula> updates;
  updates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    updates.push_back(Formula::conj(Formula::var(inputs[i]), blocked));
  }
  return ReductionResult(g, variables,
                         NetworkDef(std::move(states), std::move(inputs),
                                    std::move(updates)));
}

ReductionVerification verify_reduction(const Formula& g,
                                       const std::vector<std::string>& variables) {
  if (variables.size() > kVerifyMaxVariables) {
    throw CapExceeded("reduction verification is limited to " +
                      std::to_string(kVerifyMaxVariables) + " variables");
  }
  const ReductionResult reduction = reduce_sat(g, variables);
  const AssrModel model = compile(reduction.network());
  const BoolMatrix& m = model.merged();
  const auto n = static_cast<unsigned>(variables.size());

  ReductionVerification report;
  report.witness = satisfiable_bruteforce(g, variables);
  report.satisfiable = report.witness.has_value();
  report.max_entropy = is_max_entropy(model);
  report.equivalence_holds = report.satisfiable != report.max_entropy;
  report.merged_all_ones = m.is_all_ones();

  report.satisfying_columns_collapse = true;
  const std::uint32_t all_false_row = (std::uint32_t{1} << n) - 1;
  for (Index state = 1; state <= model.state_count(); ++state) {
    const auto bits = index_to_bits(state, n);
    Assignment a;
    for (unsigned i = 0; i < n; ++i) a[variables[i]] = bits[i];
    if (!eval(g, a)) continue;
    report.satisfying_states.push_back(state);
    const auto column = m.column(state - 1);
    if (column.size() != 1 || column[0] != all_false_row) {
      report.satisfying_columns_collapse = false;
    }
  }
  return report;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared_vars;
  std::size_t declared_clauses = 0;
  std::vector<std::vector<long>> clauses;
  std::vector<long> current;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first[0] == 'c' || first == "%") continue;
    if (first == "p") {
      std::string format;
      long vars = -1, count = -1;
      if (declared_vars || !(tokens >> format >> vars >> count) ||
          format != "cnf" || vars < 0 || count < 0) {
        throw ParseError("malformed problem line", line_no, 1);
      }
      declared_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      continue;
    }
    if (!declared_vars) throw ParseError("clause before problem line", line_no, 1);
    std::istringstream lits(line);
    std::string token;
    while (lits >> token) {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("invalid literal '" + token + "'", line_no, 1);
      }
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(lit)) > *declared_vars) {
        throw ParseError("literal " + token + " exceeds declared variables",
                         line_no, 1);
      }
      current.push_back(lit);
    }
  }
  if (!declared_vars) throw ParseError("missing problem line", 0, 0);
  if (!current.empty()) clauses.push_back(std::move(current));
  if (clauses.size() != declared_clauses) {
    throw ParseError("expected " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(clauses.size()),
                     0, 0);
  }

  CnfFormula out{Formula::constant(true), {}, clauses.size()};
  for (std::size_t k = 1; k <= *declared_vars; ++k) {
    out.variables.push_back("x" + std::to_string(k));
  }
  std::optional<Formula> conj;
  for (const auto& clause : clauses) {
    std::optional<Formula> disj;
    for (long lit : clause) {
      Formula atom = Formula::var("x" + std::to_string(std::labs(lit)));
      if (lit < 0) atom = Formula::negate(std::move(atom));
      disj = disj ? Formula::disj(std::move(*disj), std::move(atom)) : std::move(atom);
    }
    Formula c = disj ? std::move(*disj) : Formula::constant(false);
    conj = conj ? Formula::conj(std::move(*conj), std::move(c)) : std::move(c);
  }
  if (conj) out.formula = std::move(*conj);
  return out;
}

}  // namespace bcn
