// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 0 iff
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bcn/assr.hpp"
#include "bcn/hardness.hpp"
#include "bcn/oracle.hpp"
#include "bcn/spectral.hpp"
#include "test_support.hpp"

namespace {

using namespace bcn;
using Clock = std::chrono::steady_clock;

constexpr double kLambdaTol = 1e-9;
constexpr double kEntropyTol = 1e-8;
constexpr double kBoundsSlack = 1e-9;
constexpr double kGoldenBudgetMs = 10.0;
constexpr double kSweepBudgetMs = 60'000.0;
constexpr double kHardnessBudgetMs = 30'000.0;
constexpr double kScaleBudgetMs = 5'000.0;

// Every square matrix built by the suite; checked against the column-sum
// enclosure of its Perron root at the end.
std::vector<BoolMatrix> g_matrices;

BoolMatrix track(BoolMatrix m) {
  if (m.rows() == m.cols() && m.rows() > 0) g_matrices.push_back(m);
  return m;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> body;
  double budget_ms = 0.0;  // 0: no runtime requirement
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

Outcome golden_fibonacci() {
  Outcome o;
  const AssrModel model = compile(parse_network(testing::kFibonacciNet));
  const SpectralReport r = analyze(model);
  track(model.merged());
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  o.require(model.transition().col_index() == std::vector<Index>{1, 1, 2, 1}, "L");
  o.require(model.merged() == BoolMatrix::from_rows({"11", "10"}), "M");
  o.require(std::abs(r.lambda - phi) < kLambdaTol, "lambda = " + fmt(r.lambda));
  o.require(std::abs(r.entropy_bits - std::log2(phi)) < kEntropyTol,
            "entropy = " + fmt(r.entropy_bits));
  o.require(!r.is_max_entropy, "reported maximal");
  return o;
}

// Rows of P M P' split into 2^m equal blocks of 2^{n-m} rows.
bool is_stacked(const BoolMatrix& m, std::size_t blocks) {
  const auto rows = m.row_strings();
  const std::size_t height = rows.size() / blocks;
  for (std::size_t r = height; r < rows.size(); ++r) {
    if (rows[r] != rows[r % height]) return false;
  }
  return true;
}

Outcome golden_two_state() {
  Outcome o;
  const AssrModel model = compile(parse_network(testing::kTwoStateNet));
  const SpectralReport r = analyze(model);
  const BoolMatrix m = track(model.merged());
  o.require(model.transition().col_index() == std::vector<Index>{1, 2, 4, 4, 2, 1, 4, 4},
            "L");
  o.require(std::abs(r.lambda - 2.0) < kLambdaTol, "lambda = " + fmt(r.lambda));
  o.require(std::abs(r.entropy_bits - 1.0) < kEntropyTol, "entropy");
  o.require(std::abs(r.entropy_bits - r.h_max_bits) < kEntropyTol, "entropy != h_max");
  o.require(r.is_max_entropy, "not maximal");
  o.require(r.closed_set == std::vector<Index>{1, 2}, "Y");
  const auto d = check_log_v(m);
  o.require(d.has_value(), "no decomposition");
  if (d) {
    track(d->b);
    track(d->d);
  }
  std::size_t zero_rows = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (std::size_t c = 0; c < m.cols(); ++c) zero = zero && !m.test(i, c);
    zero_rows += zero;
  }
  o.require(zero_rows == 1, "zero rows = " + std::to_string(zero_rows));
  std::vector<Index> perm{1, 2, 3, 4};
  do {
    o.require(!is_stacked(track(permute(m, perm)), model.input_count()),
              "a permutation gives the stacked form");
  } while (std::next_permutation(perm.begin(), perm.end()));
  return o;
}

Outcome input_copy_family() {
  Outcome o;
  const unsigned n = 3, m = 2;
  const AssrModel model = compile(testing::input_copy_network(n, m, 2023));
  const BoolMatrix merged = track(model.merged());
  for (std::size_t j = 1; j <= 10; ++j) {
    o.require(count_walks(merged, j) == (BigInt(1) << (n + (j - 1) * m)),
              "count at j = " + std::to_string(j));
  }
  const SpectralReport r = analyze(model);
  o.require(std::abs(r.entropy_bits - 2.0) < kEntropyTol, "entropy = " + fmt(r.entropy_bits));
  o.require(r.is_max_entropy, "not maximal");
  return o;
}

// Block conditions of P M P' verified entrywise against M.
bool blocks_valid(const BoolMatrix& m, const LogVDecomposition& d) {
  const std::size_t size = m.rows();
  if (d.r < d.v || d.permutation.size() != size) return false;
  for (std::size_t c = 0; c < d.r; ++c) {
    std::size_t sum = 0;
    for (std::size_t r = 0; r < size; ++r) {
      const bool bit = m.test(d.permutation[r] - 1, d.permutation[c] - 1);
      if (r < d.r) {
        sum += bit;
        if (d.b.test(r, c) != bit) return false;
      } else if (bit) {
        return false;
      }
    }
    if (sum != d.v) return false;
  }
  return true;
}

Outcome log_v_sweep() {
  Outcome o;
  std::size_t hits = 0;
  for (const auto& entry : testing::random_corpus(200, 5, 5, 4)) {
    const BoolMatrix m = track(compile(entry.net).merged());
    const std::size_t v = max_column_sum(m);
    const double bits = entropy_bits(m).bits;
    const bool at_log_v = std::abs(bits - std::log2(static_cast<double>(v))) < kEntropyTol;
    const auto d = check_log_v(m);
    const std::string tag = " (n=" + std::to_string(entry.n) + " m=" +
                            std::to_string(entry.m) + " seed=" + std::to_string(entry.seed) +
                            ")";
    o.require(at_log_v == d.has_value(), "equivalence fails" + tag);
    if (d) {
      ++hits;
      o.require(blocks_valid(m, *d), "block conditions" + tag);
      track(d->b);
      track(d->d);
    }
  }
  o.detail = o.pass ? std::to_string(hits) + "/200 at log v" : o.detail;
  return o;
}

Outcome trajectory_oracle() {
  Outcome o;
  for (const auto& entry : testing::random_corpus(20, 3, 2, 5)) {
    const BoolMatrix m = track(compile(entry.net).merged());
    for (std::size_t j = 1; j <= 6; ++j) {
      o.require(enumerate_trajectories(entry.net, j) == count_walks(m, j),
                "n=" + std::to_string(entry.n) + " m=" + std::to_string(entry.m) +
                    " j=" + std::to_string(j));
    }
  }
  return o;
}

Outcome closed_set_oracle() {
  Outcome o;
  std::vector<BoolMatrix> corpus;
  for (const auto& entry : testing::random_corpus(200, 3, 3, 6)) {
    corpus.push_back(compile(entry.net).merged());
  }
  std::mt19937_64 rng(6);
  for (std::size_t size : {4, 8}) {
    for (unsigned density = 1; density <= 7; ++density) {
      for (int k = 0; k < 20; ++k) corpus.push_back(testing::random_bool_matrix(rng, size, density));
    }
  }
  corpus.push_back(BoolMatrix::from_rows({"1100", "1100", "0000", "0011"}));
  for (const auto& m : corpus) {
    track(m);
    const std::size_t v = max_column_sum(m);
    o.require(maximal_closed_set(m, v) == maximal_closed_set_bruteforce(m, v),
              "mismatch on " + std::to_string(m.rows()) + "-state matrix");
  }
  o.detail = o.pass ? std::to_string(corpus.size()) + " matrices" : o.detail;
  return o;
}

Outcome hardness_round_trip() {
  Outcome o;
  std::vector<std::pair<Formula, std::vector<std::string>>> cases{
      {parse_formula("(z1 & z2) | !z1"), {"z1", "z2"}},
      {parse_formula("!z1 & z1 & z2"), {"z1", "z2"}},
  };
  std::mt19937_64 rng(7);
  const std::vector<std::string> all{"z1", "z2", "z3", "z4"};
  for (int k = 0; k < 100; ++k) {
    std::vector<std::string> vars(all.begin(), all.begin() + 1 + k % 4);
    cases.emplace_back(testing::random_formula(rng, vars, 1 + k % 5), vars);
  }
  const bool first_sat = satisfiable_bruteforce(cases[0].first).has_value();
  const bool second_sat = satisfiable_bruteforce(cases[1].first).has_value();
  o.require(first_sat && !second_sat, "example satisfiability");
  for (const auto& [g, vars] : cases) {
    const bool sat = satisfiable_bruteforce(g, vars).has_value();
    const AssrModel model = compile(reduce_sat(g, vars).network());
    track(model.merged());
    o.require(sat == !is_max_entropy(model), "equivalence fails for " + to_string(g));
    if (!sat) o.require(model.merged().is_all_ones(), "M not all ones for " + to_string(g));
  }
  return o;
}

Outcome scale_check() {
  Outcome o;
  const NetworkDef net = random_network(10, 3, 9);
  const AssrModel model = compile(net);
  const SpectralReport r = analyze(model);
  track(model.merged());
  o.require(model.merged().rows() == 1024, "dimension");
  o.require(r.entropy_bits <= 3.0 + kBoundsSlack, "entropy above h_max");
  o.detail = "h_S = " + fmt(r.entropy_bits) + " bits";
  return o;
}

Outcome perron_bounds_everywhere() {
  Outcome o;
  for (const auto& m : g_matrices) {
    const auto bounds = perron_bounds(m);
    const double lambda = perron_root(m);
    o.require(static_cast<double>(bounds.lo) <= lambda + kBoundsSlack &&
                  lambda <= static_cast<double>(bounds.hi) + kBoundsSlack,
              "violated on a " + std::to_string(m.rows()) + "-state matrix");
  }
  o.detail = o.pass ? std::to_string(g_matrices.size()) + " matrices" : o.detail;
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "one-state network golden values", golden_fibonacci, kGoldenBudgetMs},
      {2, "two-state network golden values, no stacked form", golden_two_state, kGoldenBudgetMs},
      {3, "input-copy family n=3 m=2: exact counts, 2 bits, maximal", input_copy_family},
      {4, "h = log v iff decomposition, 200 random networks", log_v_sweep, kSweepBudgetMs},
      {5, "trajectory enumeration equals walk count", trajectory_oracle},
      {6, "closed set equals subset enumeration", closed_set_oracle},
      {7, "SAT reduction round trip", hardness_round_trip, kHardnessBudgetMs},
      {9, "scale check n=10 m=3", scale_check, kScaleBudgetMs},
      {8, "Perron bounds on every constructed matrix", perron_bounds_everywhere},
  };

  struct Line {
    int id;
    std::string text;
  };
  std::vector<Line> lines;
  bool all_pass = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = elapsed_ms(start);
    if (c.budget_ms > 0 && ms >= c.budget_ms) {
      o.require(false, "took " + fmt(ms) + " ms, budget " + fmt(c.budget_ms) + " ms");
    }
    all_pass = all_pass && o.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f ms", ms);
    std::string text = std::string(o.pass ? "[PASS]" : "[FAIL]") + " criterion " +
                       std::to_string(c.id) + ": " + c.title + " (" + timing;
    if (c.budget_ms > 0) {
      std::snprintf(timing, sizeof timing, ", budget %.0f ms", c.budget_ms);
      text += timing;
    }
    text += ")";
    if (!o.detail.empty()) text += " - " + o.detail;
    lines.push_back({c.id, text});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  for (const auto& l : lines) std::printf("%s\n", l.text.c_str());
  std::printf("%s\n", all_pass ? "ALL PASS" : "FAILURES");
  return all_pass ? 0 : 1;
}
