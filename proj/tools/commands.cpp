#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcn/assr.hpp"
#include "bcn/error.hpp"
#include "bcn/hardness.hpp"
#include "bcn/network.hpp"
#include "bcn/oracle.hpp"
#include "bcn/random.hpp"
#include "bcn/serialize.hpp"
#include "bcn/spectral.hpp"

namespace bcn::cli {

using nlohmann::json;

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

AssrModel load_model(const AnalysisConfig& config, std::istream& in) {
  const NetworkDef net = parse_network(read_input(config.input, in));
  return compile(net, {.cap_bits = config.cap_bits});
}

std::string index_list(const std::vector<Index>& items, const char* open = "{",
                       const char* close = "}") {
  std::ostringstream out;
  out << open;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out << ", ";
    out << items[k];
  }
  out << close;
  return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::size_t> column_sums(const BoolMatrix& m) {
  std::vector<std::size_t> sums;
  for (std::size_t c = 0; c < m.cols(); ++c) sums.push_back(m.column_count(c));
  return sums;
}

void print_block(std::ostream& out, const char* name, const BoolMatrix& m) {
  out << name << " (" << m.rows() << "x" << m.cols() << ")";
  if (m.rows() == 0 || m.cols() == 0) {
    out << " empty\n";
    return;
  }
  out << ":\n";
  for (const auto& row : m.row_strings()) out << "  " << row << '\n';
}

}  // namespace

void cmd_compile(const AnalysisConfig& config, std::istream& in, std::ostream& out) {
  const AssrModel model = load_model(config, in);
  if (config.format == OutputFormat::kJson) {
    out << to_json(model) << '\n';
    return;
  }
  out << "n = " << model.state_bits() << ", m = " << model.input_bits() << '\n';
  out << "L = " << index_list(model.transition().col_index(), "[", "]") << '\n';
  out << "M =\n";
  for (const auto& row : model.merged().row_strings()) out << "  " << row << '\n';
}

void cmd_entropy(const AnalysisConfig& config, std::istream& in, std::ostream& out) {
  const AssrModel model = load_model(config, in);
  const SpectralReport report = analyze(model);
  if (config.format == OutputFormat::kJson) {
    out << to_json(report) << '\n';
    return;
  }
  out << std::setprecision(12) << std::fixed;
  out << "v     = " << report.v << '\n';
  out << "λ_M   = " << report.lambda << '\n';
  out << "h_S   = " << report.entropy_bits << " bits\n";
  out << "h_max = " << report.h_max_bits << " bits\n";
  out << "h_S = log v: " << yes_no(report.is_log_v) << '\n';
  out << "Y     = " << index_list(report.closed_set) << '\n';
  out << "r     = " << report.r << '\n';
  out << "maximal entropy: " << yes_no(report.is_max_entropy) << '\n';
  out << "one-step controllable: " << yes_no(report.is_one_step_controllable) << '\n';
  out << "nilpotent: " << yes_no(report.nilpotent) << '\n';
}

void cmd_check_max(const AnalysisConfig& config, std::istream& in, std::ostream& out) {
  const AssrModel model = load_model(config, in);
  const bool maximal = is_max_entropy(model);
  const std::size_t v = max_column_sum(model.merged());
  const auto decomposition = maximal ? check_log_v(model.merged()) : std::nullopt;

  if (config.format == OutputFormat::kJson) {
    json j;
    j["verdict"] = maximal ? "MAX" : "NOT-MAX";
    j["is_max_entropy"] = maximal;
    j["v"] = v;
    j["inputs"] = model.input_count();
    if (decomposition) {
      j["r"] = decomposition->r;
      j["permutation"] = decomposition->permutation;
      j["b_column_sums"] = column_sums(decomposition->b);
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << (maximal ? "MAX" : "NOT-MAX") << '\n';
  out << "v = " << v << ", 2^m = " << model.input_count() << '\n';
  if (decomposition) {
    std::vector<Index> sums;
    for (std::size_t s : column_sums(decomposition->b)) sums.push_back(s);
    out << "r = " << decomposition->r << '\n';
    out << "P = " << index_list(decomposition->permutation, "[", "]") << '\n';
    out << "B column sums = " << index_list(sums, "[", "]") << '\n';
  } else if (v < model.input_count()) {
    out << "no state has 2^m distinct successors\n";
  } else {
    out << "no closed set of states with 2^m successors each\n";
  }
}

void cmd_decompose(const AnalysisConfig& config, std::istream& in, std::ostream& out) {
  const AssrModel model = load_model(config, in);
  const auto decomposition = check_log_v(model.merged());
  if (config.format == OutputFormat::kJson) {
    json j;
    j["v"] = max_column_sum(model.merged());
    j["is_log_v"] = decomposition.has_value();
    if (decomposition) {
      j["r"] = decomposition->r;
      j["permutation"] = decomposition->permutation;
      j["B"] = decomposition->b.row_strings();
      j["C"] = decomposition->c.row_strings();
      j["D"] = decomposition->d.row_strings();
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "v = " << max_column_sum(model.merged()) << '\n';
  if (!decomposition) {
    out << "no decomposition: h_S < log v\n";
    return;
  }
  out << "r = " << decomposition->r << '\n';
  out << "P = " << index_list(decomposition->permutation, "[", "]") << '\n';
  print_block(out, "B", decomposition->b);
  print_block(out, "C", decomposition->c);
  print_block(out, "D", decomposition->d);
}

void cmd_count(const AnalysisConfig& config, std::istream& in, std::ostream& out) {
  if (config.horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  const AssrModel model = load_model(config, in);
  out << "j,count,bits_per_step\n";
  out << std::setprecision(12) << std::fixed;
  for (std::size_t j = 1; j <= config.horizon; ++j) {
    const BigInt count = count_walks(model.merged(), j);
    out << j << ',' << count << ',' << log2_big(count) / static_cast<double>(j)
        << '\n';
  }
}

void cmd_export_dot(const AnalysisConfig& config, std::istream& in, std::ostream& out) {
  const AssrModel model = load_model(config, in);
  out << to_dot(transition_graph(model), model.state_bits(), model.input_bits());
}

void cmd_random(unsigned n, unsigned m, const AnalysisConfig& config, std::ostream& out) {
  const NetworkDef net = random_network(n, m, config.seed, config.cap_bits);
  out << "# random network: n=" << n << " m=" << m << " seed=" << config.seed << '\n';
  out << to_dsl(net);
}

void cmd_reduce_sat(const AnalysisConfig& config, const ReduceOptions& options,
                    std::istream& in, std::ostream& out) {
  const std::string text = read_input(config.input, in);
  const bool dimacs = options.dimacs || text.find("p cnf") != std::string::npos;

  Formula g = Formula::constant(false);
  std::vector<std::string> variables;
  if (dimacs) {
    CnfFormula cnf = parse_dimacs(text);
    g = std::move(cnf.formula);
    variables = std::move(cnf.variables);
  } else {
    g = parse_formula(text);
    variables = g.variables();
  }
  if (!options.variables.empty()) {
    variables.clear();
    std::istringstream names(options.variables);
    std::string name;
    while (std::getline(names, name, ',')) {
      if (!name.empty()) variables.push_back(name);
    }
  }
  if (variables.empty()) {
    throw InvalidNetwork("formula has no variables; pass --vars");
  }
  const ReductionResult reduction = reduce_sat(g, variables);

  std::optional<json> verdict;
  if (options.verify) {
    const ReductionVerification v = verify_reduction(g, variables);
    json j;
    j["satisfiable"] = v.satisfiable;
    if (v.witness) {
      json w = json::object();
      for (const auto& [name, value] : *v.witness) w[name] = value ? 1 : 0;
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    j["max_entropy"] = v.max_entropy;
    j["equivalence_holds"] = v.equivalence_holds;
    j["satisfying_states"] = v.satisfying_states;
    j["satisfying_columns_collapse"] = v.satisfying_columns_collapse;
    j["merged_all_ones"] = v.merged_all_ones;
    j["ok"] = v.ok();
    verdict = std::move(j);
  }

  std::ostringstream dsl;
  dsl << "# reduction of: " << to_string(g) << '\n';
  dsl << to_dsl(reduction.network());

  if (!options.output.empty()) {
    std::ofstream file(options.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + options.output + "'");
    file << dsl.str();
    if (verdict) out << verdict->dump(2) << '\n';
    return;
  }
  if (config.format == OutputFormat::kJson) {
    json j;
    j["network"] = dsl.str();
    if (verdict) j["verdict"] = *verdict;
    out << j.dump(2) << '\n';
    return;
  }
  if (verdict) out << "# verdict: " << verdict->dump() << '\n';
  out << dsl.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Topological entropy of Boolean control networks", "bcn"};
  app.require_subcommand(1);

  AnalysisConfig config;
  bool as_json = false;
  unsigned n = 0, m = 0;
  ReduceOptions reduce;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) {
      sub->add_option("input", config.input, "Network file, or - for stdin")
          ->required();
    }
    sub->add_flag("--json", as_json, "Emit JSON");
    sub->add_option("--cap-bits", config.cap_bits, "Largest n + m to compile")
        ->check(CLI::Range(1U, 31U));
  };

  auto* compile_cmd = app.add_subcommand("compile", "Print L and M");
  add_common(compile_cmd, true);
  auto* entropy_cmd = app.add_subcommand("entropy", "Full spectral report");
  add_common(entropy_cmd, true);
  auto* check_cmd = app.add_subcommand("check-max", "Decide maximal entropy");
  add_common(check_cmd, true);
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Block form P M P' for h_S = log v");
  add_common(decompose_cmd, true);
  auto* count_cmd = app.add_subcommand("count", "Trajectory counts as CSV");
  add_common(count_cmd, true);
  count_cmd->add_option("--horizon", config.horizon, "Largest trajectory length")
      ->check(CLI::PositiveNumber);
  auto* dot_cmd = app.add_subcommand("export-dot", "State transition graph as DOT");
  add_common(dot_cmd, true);

  auto* random_cmd = app.add_subcommand("random", "Random network in minterm form");
  add_common(random_cmd, false);
  random_cmd->add_option("-n,--states", n, "State variables")->required();
  random_cmd->add_option("-m,--inputs", m, "Input variables")->required();
  random_cmd->add_option("--seed", config.seed, "RNG seed");

  auto* reduce_cmd =
      app.add_subcommand("reduce-sat", "Network whose maximality encodes unsatisfiability");
  add_common(reduce_cmd, true);
  reduce_cmd->add_option("--vars", reduce.variables, "Comma-separated variable order");
  reduce_cmd->add_flag("--dimacs", reduce.dimacs, "Input is DIMACS CNF");
  reduce_cmd->add_flag("--verify", reduce.verify, "Check the reduction exhaustively");
  reduce_cmd->add_option("-o,--output", reduce.output, "Write the network here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bcn: " << e.what() << '\n';
    return kUsage;
  }
  if (as_json) config.format = OutputFormat::kJson;

  try {
    if (compile_cmd->parsed()) cmd_compile(config, in, out);
    if (entropy_cmd->parsed()) cmd_entropy(config, in, out);
    if (check_cmd->parsed()) cmd_check_max(config, in, out);
    if (decompose_cmd->parsed()) cmd_decompose(config, in, out);
    if (count_cmd->parsed()) {
      config.format = OutputFormat::kCsv;
      cmd_count(config, in, out);
    }
    if (dot_cmd->parsed()) cmd_export_dot(config, in, out);
    if (random_cmd->parsed()) cmd_random(n, m, config, out);
    if (reduce_cmd->parsed()) cmd_reduce_sat(config, reduce, in, out);
  } catch (const ParseError& e) {
    err << "bcn: parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const InvalidNetwork& e) {
    err << "bcn: invalid network: " << e.what() << '\n';
    return kParseFailure;
  } catch (const CapExceeded& e) {
    err << "bcn: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "bcn: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace bcn::cli
