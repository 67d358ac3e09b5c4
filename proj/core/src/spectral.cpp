#include "bcn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bcn/error.hpp"

namespace bcn {

namespace {

void require_square(const BoolMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
}

}  // namespace

std::size_t max_column_sum(const BoolMatrix& m) {
  std::size_t best = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, m.column_count(c));
  return best;
}

std::size_t min_column_sum(const BoolMatrix& m) {
  if (m.cols() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t c = 0; c < m.cols(); ++c) best = std::min(best, m.column_count(c));
  return best;
}

PerronBounds perron_bounds(const BoolMatrix& m) {
  require_square(m);
  return {min_column_sum(m), max_column_sum(m)};
}

std::vector<std::vector<std::uint32_t>> strongly_connected_components(
    const BoolMatrix& m) {
  require_square(m);
  // Iterative Tarjan.
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t size = m.rows();
  std::vector<std::uint32_t> index(size, kUnvisited), low(size, 0);
  std::vector<bool> on_stack(size, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> components;
  struct Frame {
    std::uint32_t vertex;
    std::size_t next_edge;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < size; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const auto succ = m.column(frame.vertex);
      if (frame.next_edge < succ.size()) {
        const std::uint32_t w = succ[frame.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.vertex] = std::min(low[frame.vertex], index[w]);
        }
        continue;
      }
      const std::uint32_t v = frame.vertex;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().vertex] = std::min(low[call.back().vertex], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> component;
        std::uint32_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

namespace {

// Dominant eigenvalue of M_C + I on an irreducible component, minus one.
double component_root(const BoolMatrix& m, const std::vector<std::uint32_t>& comp,
                      const PowerIterationOptions& options) {
  const std::size_t size = comp.size();
  if (size == 1) return m.test(comp[0], comp[0]) ? 1.0 : 0.0;

  std::vector<std::int64_t> local(m.rows(), -1);
  for (std::size_t k = 0; k < size; ++k) local[comp[k]] = static_cast<std::int64_t>(k);
  // Internal successors in local numbering.
  std::vector<std::vector<std::uint32_t>> succ(size);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::uint32_t r : m.column(comp[k])) {
      if (local[r] >= 0) succ[k].push_back(static_cast<std::uint32_t>(local[r]));
    }
  }

  std::vector<double> x(size, 1.0 / static_cast<double>(size)), y(size);
  const std::size_t cap = options.cap_factor * std::max<std::size_t>(m.rows(), 1);
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t iter = 0; iter < cap; ++iter) {
    y = x;
    for (std::size_t k = 0; k < size; ++k) {
      for (std::uint32_t i : succ[k]) y[i] += x[k];
    }
    double estimate = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t k = 0; k < size; ++k) {
      estimate += y[k];
      const double ratio = y[k] / x[k];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    // Collatz–Wielandt: lo <= ρ <= hi whenever x > 0.
    if (std::abs(estimate - previous) < options.tolerance ||
        hi - lo < options.tolerance) {
      return estimate - 1.0;
    }
    previous = estimate;
    for (std::size_t k = 0; k < size; ++k) x[k] = y[k] / estimate;
  }
  throw ConvergenceError("power iteration did not converge within " +
                         std::to_string(cap) + " iterations");
}

}  // namespace

double perron_root(const BoolMatrix& m, const PowerIterationOptions& options) {
  require_square(m);
  double best = 0.0;
  for (const auto& comp : strongly_connected_components(m)) {
    best = std::max(best, component_root(m, comp, options));
  }
  return best;
}

Entropy entropy_bits(const BoolMatrix& m, const PowerIterationOptions& options) {
  Entropy out;
  out.lambda = perron_root(m, options);
  if (out.lambda <= 0.0) {
    out.nilpotent = true;
    out.bits = 0.0;
  } else {
    out.bits = std::log2(out.lambda);
  }
  return out;
}

std::vector<std::uint32_t> maximal_closed_set(const BoolMatrix& m, std::size_t v) {
  require_square(m);
  const std::size_t size = m.rows();
  std::vector<std::vector<std::uint32_t>> pred(size);
  for (std::uint32_t j = 0; j < size; ++j) {
    for (std::uint32_t i : m.column(j)) pred[i].push_back(j);
  }
  std::vector<bool> member(size);
  std::vector<std::uint32_t> removed;
  for (std::uint32_t j = 0; j < size; ++j) {
    member[j] = m.column_count(j) == v;
    if (!member[j]) removed.push_back(j);
  }
  // A state leaves once any successor has left.
  while (!removed.empty()) {
    const std::uint32_t k = removed.back();
    removed.pop_back();
    for (std::uint32_t p : pred[k]) {
      if (member[p]) {
        member[p] = false;
        removed.push_back(p);
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < size; ++j) {
    if (member[j]) out.push_back(j);
  }
  return out;
}

BoolMatrix permute(const BoolMatrix& m, const std::vector<Index>& permutation) {
  require_square(m);
  if (permutation.size() != m.rows()) {
    throw std::invalid_argument("permutation has wrong length");
  }
  std::vector<std::uint32_t> ids;
  ids.reserve(permutation.size());
  std::vector<bool> seen(permutation.size());
  for (Index p : permutation) {
    if (p < 1 || p > permutation.size() || seen[p - 1]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[p - 1] = true;
    ids.push_back(static_cast<std::uint32_t>(p - 1));
  }
  return m.submatrix(ids, ids);
}

std::optional<LogVDecomposition> check_log_v(const BoolMatrix& m) {
  require_square(m);
  const std::size_t v = max_column_sum(m);
  const auto closed = maximal_closed_set(m, v);
  if (closed.empty()) return std::nullopt;

  const std::size_t size = m.rows();
  const std::size_t r = closed.size();
  std::vector<bool> in_closed(size);
  for (std::uint32_t j : closed) in_closed[j] = true;
  std::vector<std::uint32_t> head(closed), tail;
  for (std::uint32_t j = 0; j < size; ++j) {
    if (!in_closed[j]) tail.push_back(j);
  }

  LogVDecomposition out{v, r, {}, m.submatrix(head, head), m.submatrix(head, tail),
                        m.submatrix(tail, tail)};
  for (std::uint32_t j : head) out.permutation.push_back(Index{j} + 1);
  for (std::uint32_t j : tail) out.permutation.push_back(Index{j} + 1);

  if (r < v) {
    throw std::logic_error("closed set smaller than v: r=" + std::to_string(r) +
                           ", v=" + std::to_string(v));
  }
  const BoolMatrix pmp = permute(m, out.permutation);
  for (std::size_t col = 0; col < r; ++col) {
    const auto rows = pmp.column(col);
    if (rows.size() != v || (!rows.empty() && rows.back() >= r)) {
      throw std::logic_error("closed set fails block verification at column " +
                             std::to_string(col + 1));
    }
  }
  return out;
}

bool is_max_entropy(const AssrModel& model) {
  const BoolMatrix& m = model.merged();
  const std::size_t full = model.input_count();
  const std::size_t v = max_column_sum(m);
  if (v < full) return false;
  return !maximal_closed_set(m, v).empty();
}

bool is_one_step_controllable(const BoolMatrix& m) {
  require_square(m);
  return m.is_all_ones();
}

SpectralReport analyze(const AssrModel& model, const PowerIterationOptions& options) {
  const BoolMatrix& m = model.merged();
  SpectralReport report;
  const auto bounds = perron_bounds(m);
  report.v = bounds.hi;
  report.min_column_sum = bounds.lo;
  const Entropy entropy = entropy_bits(m, options);
  report.lambda = entropy.lambda;
  report.entropy_bits = entropy.bits;
  report.nilpotent = entropy.nilpotent;
  report.h_max_bits = h_max_bits(model.input_bits());
  if (auto decomposition = check_log_v(m)) {
    report.is_log_v = true;
    report.r = decomposition->r;
    report.permutation = decomposition->permutation;
    report.closed_set.assign(decomposition->permutation.begin(),
                             decomposition->permutation.begin() +
                                 static_cast<std::ptrdiff_t>(decomposition->r));
  }
  report.is_max_entropy = is_max_entropy(model);
  report.is_one_step_controllable = is_one_step_controllable(m);
  if (report.is_max_entropy &&
      (!report.is_log_v || report.v != model.input_count())) {
    throw std::logic_error("maximal entropy without a 2^m closed set");
  }
  return report;
}

}  // namespace bcn
