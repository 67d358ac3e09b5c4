#include "bcn/oracle.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "bcn/error.hpp"

namespace bcn {

BigInt count_walks(const BoolMatrix& m, std::size_t j) {
  if (j == 0) throw std::invalid_argument("walk length must be at least 1");
  // y_i = number of walks with j vertices ending in i; start from all ones.
  std::vector<BigInt> y(m.rows(), 1), next(m.rows());
  for (std::size_t step = 1; step < j; ++step) {
    for (auto& e : next) e = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (y[c] == 0) continue;
      for (std::uint32_t r : m.column(c)) next[r] += y[c];
    }
    y.swap(next);
  }
  BigInt total = 0;
  for (const auto& e : y) total += e;
  return total;
}

BigInt enumerate_trajectories(const NetworkDef& net, std::size_t j,
                              std::uint64_t guard) {
  if (j == 0) throw std::invalid_argument("trajectory length must be at least 1");
  const std::size_t n = net.state_count();
  const std::size_t m = net.input_count();
  const double work = std::ldexp(1.0, static_cast<int>(n + m * (j - 1)));
  if (n + m * (j - 1) >= 63 || work > static_cast<double>(guard)) {
    throw CapExceeded("trajectory enumeration of 2^" +
                      std::to_string(n + m * (j - 1)) +
                      " sequences exceeds guard " + std::to_string(guard));
  }
  const std::uint64_t states = std::uint64_t{1} << n;
  const std::uint64_t inputs = std::uint64_t{1} << m;

  // State vectors are kept as bit lists so the simulation uses nothing but
  // formula evaluation.
  auto successor = [&](const std::vector<bool>& x, const std::vector<bool>& u) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) a[net.state_names()[i]] = x[i];
    for (std::size_t i = 0; i < m; ++i) a[net.input_names()[i]] = u[i];
    std::vector<bool> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = eval(net.updates()[i], a);
    return out;
  };
  std::map<std::pair<std::vector<bool>, std::vector<bool>>, std::vector<bool>> memo;
  auto step = [&](const std::vector<bool>& x, const std::vector<bool>& u)
      -> const std::vector<bool>& {
    auto key = std::make_pair(x, u);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, successor(x, u)).first;
    return it->second;
  };
  auto bits_of = [](std::uint64_t value, std::size_t width) {
    std::vector<bool> out(width);
    for (std::size_t i = 0; i < width; ++i) out[i] = (value >> (width - 1 - i)) & 1U;
    return out;
  };

  std::set<std::vector<std::vector<bool>>> distinct;
  const std::uint64_t sequences = static_cast<std::uint64_t>(work) / states;
  for (std::uint64_t x0 = 0; x0 < states; ++x0) {
    for (std::uint64_t code = 0; code < sequences; ++code) {
      std::vector<std::vector<bool>> path{bits_of(x0, n)};
      std::uint64_t rest = code;
      for (std::size_t k = 0; k + 1 < j; ++k) {
        const std::vector<bool> u = bits_of(rest % inputs, m);
        rest /= inputs;
        path.push_back(step(path.back(), u));
      }
      distinct.insert(std::move(path));
    }
  }
  return BigInt(distinct.size());
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2 of non-positive integer");
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 53) return std::log2(x.convert_to<double>());
  const std::size_t shift = msb - 52;
  const BigInt top = x >> shift;
  return static_cast<double>(shift) + std::log2(top.convert_to<double>());
}

EntropyEstimate entropy_estimate(const BoolMatrix& m, std::size_t j_max) {
  if (j_max < 2) throw std::invalid_argument("j_max must be at least 2");
  EntropyEstimate out;
  std::vector<BigInt> y(m.rows(), 1), next(m.rows());
  BigInt previous = 0;
  BigInt total = m.rows();
  for (std::size_t j = 1; j <= j_max; ++j) {
    if (j > 1) {
      for (auto& e : next) e = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (y[c] == 0) continue;
        for (std::uint32_t r : m.column(c)) next[r] += y[c];
      }
      y.swap(next);
      previous = total;
      total = 0;
      for (const auto& e : y) total += e;
    }
    out.per_step.push_back(total > 0 ? log2_big(total) / static_cast<double>(j)
                                     : -std::numeric_limits<double>::infinity());
  }
  out.ratio = (total > 0 && previous > 0)
                  ? log2_big(total) - log2_big(previous)
                  : -std::numeric_limits<double>::infinity();
  return out;
}

std::vector<std::uint32_t> maximal_closed_set_bruteforce(const BoolMatrix& m,
                                                         std::size_t v) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  const std::size_t size = m.rows();
  if (size > kClosedSetOracleMaxStates) {
    throw CapExceeded("subset enumeration over " + std::to_string(size) +
                      " states exceeds " +
                      std::to_string(kClosedSetOracleMaxStates));
  }
  std::uint64_t uniform = 0;
  std::vector<std::uint64_t> succ(size, 0);
  for (std::size_t j = 0; j < size; ++j) {
    if (m.column_count(j) == v) uniform |= std::uint64_t{1} << j;
    for (std::uint32_t r : m.column(j)) succ[j] |= std::uint64_t{1} << r;
  }
  std::uint64_t united = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << size); ++s) {
    if ((s & uniform) != s) continue;
    bool closed = true;
    for (std::size_t j = 0; j < size && closed; ++j) {
      if ((s >> j) & 1U) closed = (succ[j] & ~s) == 0;
    }
    if (closed) united |= s;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < size; ++j) {
    if ((united >> j) & 1U) out.push_back(j);
  }
  return out;
}

}  // namespace bcn
