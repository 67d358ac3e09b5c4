#include "bcn/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "bcn/error.hpp"

namespace bcn {

using nlohmann::json;

std::string to_json(const AssrModel& model) {
  json out;
  out["n"] = model.state_bits();
  out["m"] = model.input_bits();
  out["L"] = model.transition().col_index();
  out["M"] = model.merged().row_strings();
  return out.dump(2);
}

AssrModel model_from_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0, 0);
  }
  try {
    const auto n = in.at("n").get<unsigned>();
    const auto m = in.at("m").get<unsigned>();
    if (n < 1 || m > n || n + m > 31) {
      throw ParseError("model dimensions out of range", 0, 0);
    }
    const auto columns = in.at("L").get<std::vector<Index>>();
    AssrModel model(n, m, LogicalMatrix(std::size_t{1} << n, columns));
    if (in.contains("M") &&
        in.at("M").get<std::vector<std::string>>() != model.merged().row_strings()) {
      throw ParseError("\"M\" does not match \"L\"", 0, 0);
    }
    return model;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model: ") + e.what(), 0, 0);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("malformed model: ") + e.what(), 0, 0);
  }
}

std::string to_json(const SpectralReport& report) {
  json out;
  out["v"] = report.v;
  out["lambda"] = report.lambda;
  out["entropy_bits"] = report.entropy_bits;
  out["h_max_bits"] = report.h_max_bits;
  out["is_log_v"] = report.is_log_v;
  out["closed_set"] = report.closed_set;
  out["r"] = report.r;
  out["is_max_entropy"] = report.is_max_entropy;
  out["is_one_step_controllable"] = report.is_one_step_controllable;
  out["nilpotent"] = report.nilpotent;
  return out.dump(2);
}

std::string to_dot(const TransitionGraph& graph, unsigned state_bits,
                   unsigned input_bits) {
  std::ostringstream out;
  out << "digraph bcn {\n";
  out << "  node [shape=circle];\n";
  for (Index s = 1; s <= graph.vertex_count; ++s) {
    std::string pattern;
    for (bool b : index_to_bits(s, state_bits)) pattern += b ? '1' : '0';
    out << "  s" << s << " [label=\"" << s << "\\n" << pattern << "\"];\n";
  }
  for (const auto& edge : graph.edges) {
    out << "  s" << edge.from << " -> s" << edge.to;
    if (input_bits > 0) {
      out << " [label=\"u=";
      for (std::size_t k = 0; k < edge.inputs.size(); ++k) {
        if (k) out << ',';
        out << edge.inputs[k];
      }
      out << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bcn
