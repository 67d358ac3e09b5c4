#include "bcn/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "bcn/error.hpp"

namespace bcn {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

NetworkDef::NetworkDef(std::vector<std::string> state_names,
                       std::vector<std::string> input_names,
                       std::vector<Formula> updates)
    : state_names_(std::move(state_names)),
      input_names_(std::move(input_names)),
      updates_(std::move(updates)) {
  if (state_names_.empty()) {
    throw InvalidNetwork("network needs at least one state variable");
  }
  if (input_names_.size() > state_names_.size()) {
    throw InvalidNetwork("more inputs (" + std::to_string(input_names_.size()) +
                         ") than states (" +
                         std::to_string(state_names_.size()) + ")");
  }
  if (updates_.size() != state_names_.size()) {
    throw InvalidNetwork("expected " + std::to_string(state_names_.size()) +
                         " updates, got " + std::to_string(updates_.size()));
  }
  std::set<std::string, std::less<>> declared;
  for (const auto* names : {&state_names_, &input_names_}) {
    for (const auto& name : *names) {
      if (!is_identifier(name)) {
        throw InvalidNetwork("invalid identifier '" + name + "'");
      }
      if (!declared.insert(name).second) {
        throw InvalidNetwork("duplicate name '" + name + "'");
      }
    }
  }
  for (std::size_t i = 0; i < updates_.size(); ++i) {
    for (const auto& name : updates_[i].variables()) {
      if (!declared.contains(name)) {
        throw InvalidNetwork("update of '" + state_names_[i] +
                             "' uses undeclared identifier '" + name + "'");
      }
    }
  }
}

std::vector<std::string> NetworkDef::variable_order() const {
  std::vector<std::string> order = input_names_;
  order.insert(order.end(), state_names_.begin(), state_names_.end());
  return order;
}

namespace {

std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (leading) *leading = b;
  return s.substr(b, e - b);
}

std::vector<std::string> split_names(std::string_view s, std::size_t line,
                                     std::size_t column) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
           s[j] != ',') {
      ++j;
    }
    std::string name(s.substr(i, j - i));
    if (!is_identifier(name)) {
      throw ParseError("invalid identifier '" + name + "'", line, column + i);
    }
    out.push_back(std::move(name));
    i = j;
  }
  return out;
}

struct UpdateLine {
  Formula formula;
  std::size_t line;
  std::size_t column;
};

}  // namespace

NetworkDef parse_network(std::string_view text) {
  std::optional<std::vector<std::string>> states;
  std::optional<std::vector<std::string>> inputs;
  std::map<std::string, UpdateLine, std::less<>> updates;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::size_t lead = 0;
    const std::string_view line = trim(raw, &lead);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    const auto eq = line.find('=');
    if (colon != std::string_view::npos &&
        (eq == std::string_view::npos || colon < eq)) {
      const std::string_view keyword = trim(line.substr(0, colon));
      const std::size_t body_column = lead + colon + 2;
      auto names = split_names(line.substr(colon + 1), line_no, body_column);
      auto* slot = keyword == "states"   ? &states
                   : keyword == "inputs" ? &inputs
                                         : nullptr;
      if (!slot) {
        throw ParseError("unknown header '" + std::string(keyword) + "'",
                         line_no, lead + 1);
      }
      if (slot->has_value()) {
        throw ParseError("duplicate '" + std::string(keyword) + ":' header",
                         line_no, lead + 1);
      }
      *slot = std::move(names);
      continue;
    }

    if (eq == std::string_view::npos) {
      throw ParseError("expected header or update line", line_no, lead + 1);
    }
    std::string_view lhs = trim(line.substr(0, eq));
    if (lhs.empty() || lhs.back() != '\'') {
      throw ParseError("update target must be written NAME'", line_no,
                       lead + 1);
    }
    lhs = trim(lhs.substr(0, lhs.size() - 1));
    if (!is_identifier(lhs)) {
      throw ParseError("invalid update target '" + std::string(lhs) + "'",
                       line_no, lead + 1);
    }
    const std::size_t rhs_column = lead + eq + 2;
    Formula f = parse_formula(line.substr(eq + 1), line_no, rhs_column);
    auto [it, inserted] = updates.emplace(
        std::string(lhs), UpdateLine{std::move(f), line_no, rhs_column});
    if (!inserted) {
      throw ParseError("duplicate update for '" + std::string(lhs) + "'",
                       line_no, lead + 1);
    }
  }

  if (!states || states->empty()) {
    throw ParseError("missing 'states:' header", 0, 0);
  }
  if (!inputs) inputs.emplace();

  std::set<std::string, std::less<>> declared(states->begin(), states->end());
  declared.insert(inputs->begin(), inputs->end());
  for (const auto& [target, update] : updates) {
    if (std::find(states->begin(), states->end(), target) == states->end()) {
      throw ParseError("update for undeclared state '" + target + "'",
                       update.line, 1);
    }
    for (const auto& name : update.formula.variables()) {
      if (!declared.contains(name)) {
        throw ParseError("undeclared identifier '" + name + "'", update.line,
                         update.column);
      }
    }
  }

  std::vector<Formula> ordered;
  ordered.reserve(states->size());
  for (const auto& name : *states) {
    auto it = updates.find(name);
    if (it == updates.end()) {
      throw ParseError("missing update for state '" + name + "'", 0, 0);
    }
    ordered.push_back(it->second.formula);
  }
  try {
    return NetworkDef(std::move(*states), std::move(*inputs),
                      std::move(ordered));
  } catch (const InvalidNetwork& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

std::string to_dsl(const NetworkDef& net) {
  std::ostringstream out;
  out << "states:";
  for (const auto& name : net.state_names()) out << ' ' << name;
  out << '\n';
  if (net.input_count() > 0) {
    out << "inputs:";
    for (const auto& name : net.input_names()) out << ' ' << name;
    out << '\n';
  }
  for (std::size_t i = 0; i < net.state_count(); ++i) {
    out << net.state_names()[i] << "' = " << to_string(net.updates()[i])
        << '\n';
  }
  return out.str();
}

}  // namespace bcn
