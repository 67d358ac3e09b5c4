#pragma once

#include <string>
#include <string_view>

#include "bcn/assr.hpp"
#include "bcn/spectral.hpp"

namespace bcn {

// {"n", "m", "L": [1-based column indices], "M": ["0101", ...one per row]}
std::string to_json(const AssrModel& model);
// Rebuilds the model from "n", "m" and "L"; "M", when present, must match.
// Throws ParseError on malformed input.
AssrModel model_from_json(std::string_view text);

// {"v", "lambda", "entropy_bits", "h_max_bits", "is_log_v", "closed_set",
//  "r", "is_max_entropy", "is_one_step_controllable", "nilpotent"}
std::string to_json(const SpectralReport& report);

// Graphviz digraph with one vertex per state, labelled with its index and
// bit pattern, and one edge per (from, to) pair labelled with the inputs
// that realise it. Vertex and edge order are deterministic.
std::string to_dot(const TransitionGraph& graph, unsigned state_bits,
                   unsigned input_bits);

}  // namespace bcn
