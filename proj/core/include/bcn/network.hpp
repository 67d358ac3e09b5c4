#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bcn/formula.hpp"

namespace bcn {

// A Boolean control network: n state variables updated synchronously by n
// formulas over the states and m inputs. m = 0 is a plain Boolean network.
class NetworkDef {
 public:
  // Throws InvalidNetwork unless 1 <= n, m <= n, names are unique valid
  // identifiers, there is one update per state, and every update refers only
  // to declared names.
  NetworkDef(std::vector<std::string> state_names,
             std::vector<std::string> input_names,
             std::vector<Formula> updates);

  std::size_t state_count() const noexcept { return state_names_.size(); }
  std::size_t input_count() const noexcept { return input_names_.size(); }

  const std::vector<std::string>& state_names() const noexcept {
    return state_names_;
  }
  const std::vector<std::string>& input_names() const noexcept {
    return input_names_;
  }
  const std::vector<Formula>& updates() const noexcept { return updates_; }

  // Inputs followed by states: the order in which the ASSR encodes them.
  std::vector<std::string> variable_order() const;

 private:
  std::vector<std::string> state_names_;
  std::vector<std::string> input_names_;
  std::vector<Formula> updates_;
};

bool is_identifier(std::string_view name);

// Network file format:
//
//   # comment
//   states: X1 X2
//   inputs: U          (optional; absent means m = 0)
//   X1' = X1
//   X2' = (!U & X1 & !X2) | (U & X1 & X2)
//
// Update lines may appear in any order; the result follows the order of the
// `states:` header.
NetworkDef parse_network(std::string_view text);

// Renders a network in the format read by parse_network.
std::string to_dsl(const NetworkDef& net);

}  // namespace bcn
