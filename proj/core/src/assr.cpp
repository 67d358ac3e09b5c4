#include "bcn/assr.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "bcn/error.hpp"

namespace bcn {

AssrModel::AssrModel(unsigned n, unsigned m, LogicalMatrix transition)
    : n_(n), m_(m), transition_(std::move(transition)), merged_(0, 0) {
  if (n + m >= 32 || transition_.rows() != state_count() ||
      transition_.cols() != state_count() * input_count()) {
    throw std::invalid_argument("transition matrix must be 2^n x 2^(n+m)");
  }
  const std::size_t states = state_count();
  slices_.reserve(input_count());
  for (std::size_t i = 0; i < input_count(); ++i) {
    slices_.push_back(transition_.block(i * states, states));
  }
  std::vector<std::vector<std::uint32_t>> columns(states);
  for (const auto& slice : slices_) {
    const auto targets = slice.zero_based();
    for (std::size_t c = 0; c < states; ++c) columns[c].push_back(targets[c]);
  }
  merged_ = BoolMatrix::from_columns(states, std::move(columns));
}

namespace {

// Lane patterns for slots 0..5 within a 64-column block: lane l holds the
// value of bit `slot` of ~l.
constexpr std::array<std::uint64_t, 6> kLowSlotWords = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

void compile_range(const std::vector<CompiledFormula>& programs, unsigned n,
                   unsigned total_bits, std::size_t first_block,
                   std::size_t last_block, std::vector<std::uint32_t>& targets) {
  const std::size_t columns = targets.size();
  const std::uint32_t state_mask = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint64_t> words(std::max(total_bits, 6U));
  std::vector<std::uint64_t> results(programs.size());
  for (std::size_t block = first_block; block < last_block; ++block) {
    const std::uint64_t base = block * 64;
    // Variable at slot s is bit s of ~column.
    for (unsigned s = 0; s < total_bits; ++s) {
      words[s] = s < 6 ? kLowSlotWords[s]
                       : (((~base) >> s) & 1U ? ~std::uint64_t{0} : 0);
    }
    for (std::size_t i = 0; i < programs.size(); ++i) {
      results[i] = programs[i].eval_lanes(words);
    }
    const std::size_t lanes = std::min<std::size_t>(64, columns - base);
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      std::uint32_t next = 0;  // state i at bit n-1-i
      for (std::size_t i = 0; i < programs.size(); ++i) {
        next = (next << 1) | static_cast<std::uint32_t>((results[i] >> lane) & 1U);
      }
      // 0-based canonical row is the bitwise complement.
      targets[base + lane] = ~next & state_mask;
    }
  }
}

}  // namespace

AssrModel compile(const NetworkDef& net, const CompileOptions& options) {
  const auto n = static_cast<unsigned>(net.state_count());
  const auto m = static_cast<unsigned>(net.input_count());
  const unsigned total = n + m;
  if (total > options.cap_bits || total > 31) {
    throw CapExceeded("network has " + std::to_string(total) +
                      " state+input bits; cap is " +
                      std::to_string(options.cap_bits));
  }

  // Inputs precede states; the first variable is the most significant bit
  // of the packed assignment, which is the complement of the 0-based column.
  std::map<std::string, unsigned, std::less<>> slots;
  const auto order = net.variable_order();
  for (unsigned p = 0; p < total; ++p) slots.emplace(order[p], total - 1 - p);
  std::vector<CompiledFormula> programs;
  programs.reserve(n);
  for (const auto& update : net.updates()) programs.emplace_back(update, slots);

  const std::size_t columns = std::size_t{1} << total;
  std::vector<std::uint32_t> targets(columns);
  const std::size_t blocks = (columns + 63) / 64;
  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, blocks);
  if (workers == 1) {
    compile_range(programs, n, total, 0, blocks, targets);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t per = (blocks + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = w * per;
      const std::size_t last = std::min(blocks, first + per);
      if (first >= last) break;
      pool.emplace_back([&, first, last] {
        compile_range(programs, n, total, first, last, targets);
      });
    }
  }
  return AssrModel(n, m,
                   LogicalMatrix::from_zero_based(std::size_t{1} << n,
                                                  std::move(targets)));
}

NetworkDef decompile(const AssrModel& model) {
  const unsigned n = model.state_bits();
  const unsigned m = model.input_bits();
  const unsigned total = n + m;
  std::vector<std::string> states, inputs;
  for (unsigned i = 1; i <= n; ++i) states.push_back("X" + std::to_string(i));
  for (unsigned i = 1; i <= m; ++i) inputs.push_back("U" + std::to_string(i));
  std::vector<std::string> order = inputs;
  order.insert(order.end(), states.begin(), states.end());

  const auto targets = model.transition().zero_based();
  const std::uint32_t state_mask = (std::uint32_t{1} << n) - 1;
  std::vector<std::optional<Formula>> updates(n);
  std::vector<std::size_t> true_count(n, 0);
  for (std::size_t c = 0; c < targets.size(); ++c) {
    const std::uint64_t assignment = ~static_cast<std::uint64_t>(c) &
                                     ((std::uint64_t{1} << total) - 1);
    const std::uint32_t next = ~targets[c] & state_mask;
    std::optional<Formula> minterm;
    for (unsigned i = 0; i < n; ++i) {
      if (!((next >> (n - 1 - i)) & 1U)) continue;
      if (!minterm) {
        for (unsigned p = 0; p < total; ++p) {
          Formula lit = Formula::var(order[p]);
          if (!((assignment >> (total - 1 - p)) & 1U)) {
            lit = Formula::negate(std::move(lit));
          }
          minterm = minterm ? Formula::conj(std::move(*minterm), std::move(lit))
                            : std::move(lit);
        }
      }
      ++true_count[i];
      updates[i] = updates[i] ? Formula::disj(std::move(*updates[i]), *minterm)
                              : *minterm;
    }
  }
  std::vector<Formula> formulas;
  formulas.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    if (true_count[i] == 0) {
      formulas.push_back(Formula::constant(false));
    } else if (true_count[i] == targets.size()) {
      formulas.push_back(Formula::constant(true));
    } else {
      formulas.push_back(std::move(*updates[i]));
    }
  }
  return NetworkDef(std::move(states), std::move(inputs), std::move(formulas));
}

std::set<Index> one_step_reachable(const AssrModel& model, Index state) {
  if (state < 1 || state > model.state_count()) {
    throw std::out_of_range("state index " + std::to_string(state) +
                            " out of range");
  }
  std::set<Index> out;
  for (std::uint32_t r : model.merged().column(state - 1)) out.insert(Index{r} + 1);
  return out;
}

TransitionGraph transition_graph(const AssrModel& model) {
  TransitionGraph graph;
  graph.vertex_count = model.state_count();
  for (std::size_t j = 0; j < model.state_count(); ++j) {
    std::map<Index, std::vector<Index>> by_target;
    for (std::size_t u = 0; u < model.input_count(); ++u) {
      by_target[Index{model.slices()[u].zero_based()[j]} + 1].push_back(u + 1);
    }
    for (auto& [to, inputs] : by_target) {
      graph.edges.push_back({Index{j} + 1, to, std::move(inputs)});
    }
  }
  return graph;
}

}  // namespace bcn
