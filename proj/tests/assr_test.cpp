#include <gtest/gtest.h>

#include <random>

#include "bcn/assr.hpp"
#include "bcn/error.hpp"
#include "test_support.hpp"

namespace bcn {
namespace {

using testing::kFibonacciNet;
using testing::kTwoStateNet;

TEST(Compile, FibonacciNet) {
  const AssrModel model = compile(parse_network(kFibonacciNet));
  EXPECT_EQ(model.transition().col_index(), (std::vector<Index>{1, 1, 2, 1}));
  EXPECT_EQ(model.slice(1).col_index(), (std::vector<Index>{1, 1}));
  EXPECT_EQ(model.slice(2).col_index(), (std::vector<Index>{2, 1}));
  EXPECT_EQ(model.merged(), BoolMatrix::from_rows({"11", "10"}));
}

TEST(Compile, TwoStateNet) {
  const AssrModel model = compile(parse_network(kTwoStateNet));
  EXPECT_EQ(model.transition().col_index(),
            (std::vector<Index>{1, 2, 4, 4, 2, 1, 4, 4}));
  EXPECT_EQ(model.slice(1).col_index(), (std::vector<Index>{1, 2, 4, 4}));
  EXPECT_EQ(model.slice(2).col_index(), (std::vector<Index>{2, 1, 4, 4}));
  // [e1+e2, e1+e2, e4, e4]
  EXPECT_EQ(model.merged(), BoolMatrix::from_rows({"1100", "1100", "0000", "0011"}));
}

TEST(Compile, IdentityNetwork) {
  const AssrModel model = compile(parse_network(testing::kIdentity2));
  EXPECT_EQ(model.transition(), LogicalMatrix::identity(4));
  EXPECT_EQ(model.merged(), BoolMatrix::identity(4));
}

TEST(Compile, CapExceeded) {
  const NetworkDef net = testing::input_copy_network(4, 2, 1);
  EXPECT_THROW(compile(net, {.cap_bits = 5}), CapExceeded);
  EXPECT_NO_THROW(compile(net, {.cap_bits = 6}));
}

TEST(Compile, ThreadCountDoesNotChangeResult) {
  const NetworkDef net = random_network(7, 4, 99);
  const AssrModel one = compile(net, {.threads = 1});
  const AssrModel four = compile(net, {.threads = 4});
  EXPECT_EQ(one.transition(), four.transition());
  EXPECT_EQ(one.merged(), four.merged());
}

// The column ordering is checked against the semi-tensor product itself:
// L ⋉ u ⋉ x must equal the successor obtained by evaluating the formulas.
TEST(Compile, AgreesWithDenseStpAndSimulation) {
  for (const auto& entry : testing::random_corpus(25, 3, 2, 17)) {
    const AssrModel model = compile(entry.net);
    const DenseMatrix l = model.transition().to_dense();
    const std::size_t states = model.state_count();
    const std::size_t inputs = model.input_count();
    for (Index iu = 1; iu <= inputs; ++iu) {
      for (Index ix = 1; ix <= states; ++ix) {
        Assignment a;
        const auto ubits = index_to_bits(iu, entry.m);
        const auto xbits = index_to_bits(ix, entry.n);
        for (unsigned i = 0; i < entry.m; ++i) a[entry.net.input_names()[i]] = ubits[i];
        for (unsigned i = 0; i < entry.n; ++i) a[entry.net.state_names()[i]] = xbits[i];
        std::vector<bool> next;
        for (const auto& f : entry.net.updates()) next.push_back(eval(f, a));
        const Index iy = canonical_index(next);

        const DenseMatrix via_stp =
            entry.m == 0
                ? l * DenseMatrix::canonical(states, ix)
                : stp(stp(l, DenseMatrix::canonical(inputs, iu)),
                      DenseMatrix::canonical(states, ix));
        ASSERT_EQ(via_stp, DenseMatrix::canonical(states, iy));
        ASSERT_EQ(model.slice(iu)[ix], iy);
      }
    }
  }
}

TEST(Compile, SimulationConsistencyUpTo12Bits) {
  for (const auto& [n, m] : std::vector<std::pair<unsigned, unsigned>>{{6, 6}, {8, 4}, {12, 0}}) {
    std::mt19937_64 rng(n * 31 + m);
    std::vector<std::string> states, inputs;
    for (unsigned i = 1; i <= n; ++i) states.push_back("X" + std::to_string(i));
    for (unsigned i = 1; i <= m; ++i) inputs.push_back("U" + std::to_string(i));
    std::vector<std::string> all = inputs;
    all.insert(all.end(), states.begin(), states.end());
    std::vector<Formula> updates;
    for (unsigned i = 0; i < n; ++i) updates.push_back(testing::random_formula(rng, all, 8));
    const NetworkDef net(states, inputs, updates);
    const AssrModel model = compile(net);
    std::map<std::string, unsigned, std::less<>> slots;
    const auto order = net.variable_order();
    for (unsigned p = 0; p < n + m; ++p) slots[order[p]] = n + m - 1 - p;
    std::vector<CompiledFormula> programs;
    for (const auto& f : net.updates()) programs.emplace_back(f, slots);
    for (Index iu = 1; iu <= model.input_count(); ++iu) {
      for (Index ix = 1; ix <= model.state_count(); ++ix) {
        const std::uint64_t bits = (packed_bits(iu, m) << n) | packed_bits(ix, n);
        std::uint64_t next = 0;
        for (const auto& p : programs) next = (next << 1) | (p.eval(bits) ? 1U : 0U);
        ASSERT_EQ(model.slice(iu)[ix], canonical_index_packed(next, n));
      }
    }
  }
}

TEST(AssrModel, Invariants) {
  for (const auto& entry : testing::random_corpus(40, 5, 5, 5)) {
    const AssrModel model = compile(entry.net);
    const std::size_t states = model.state_count();
    for (std::size_t i = 0; i < model.input_count(); ++i) {
      EXPECT_EQ(model.slices()[i], model.transition().block(i * states, states));
    }
    BoolMatrix merged(states, states);
    for (const auto& slice : model.slices()) merged = bool_or(merged, slice.to_bool());
    EXPECT_EQ(merged, model.merged());
    for (std::size_t c = 0; c < states; ++c) {
      EXPECT_GE(model.merged().column_count(c), 1U);
      EXPECT_LE(model.merged().column_count(c), model.input_count());
    }
  }
}

TEST(AssrModel, RejectsWrongShape) {
  EXPECT_THROW(AssrModel(1, 1, LogicalMatrix(2, {1, 1})), std::invalid_argument);
}

TEST(Compile, InputCopyFamilyStacksCopiesOfOneLogicalMatrix) {
  const unsigned n = 3, m = 2;
  const AssrModel model = compile(testing::input_copy_network(n, m, 42));
  const std::size_t block = std::size_t{1} << (n - m);
  const auto rows = model.merged().row_strings();
  for (std::size_t r = 0; r < rows.size(); ++r) EXPECT_EQ(rows[r], rows[r % block]);
  for (std::size_t c = 0; c < model.state_count(); ++c) {
    EXPECT_EQ(model.merged().column_count(c), std::size_t{1} << m);
    std::size_t in_first_block = 0;
    for (auto r : model.merged().column(c)) in_first_block += r < block;
    EXPECT_EQ(in_first_block, 1U);
  }
}

TEST(Decompile, RoundTrips) {
  const AssrModel ex3 = compile(parse_network(kFibonacciNet));
  EXPECT_EQ(compile(decompile(ex3)).transition(), ex3.transition());

  const AssrModel ex5 = compile(parse_network(kTwoStateNet));
  EXPECT_EQ(compile(decompile(ex5)).transition(), ex5.transition());

  for (const auto& entry : testing::random_corpus(30, 5, 5, 8)) {
    const AssrModel model = compile(entry.net);
    ASSERT_EQ(compile(decompile(model)).transition(), model.transition());
  }
}

TEST(Decompile, IdentityGivesEquivalentCopies) {
  const NetworkDef net = decompile(AssrModel(2, 0, LogicalMatrix::identity(4)));
  ASSERT_EQ(net.state_count(), 2U);
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      const Assignment at{{"X1", a}, {"X2", b}};
      EXPECT_EQ(eval(net.updates()[0], at), a);
      EXPECT_EQ(eval(net.updates()[1], at), b);
    }
  }
}

TEST(OneStepReachable, Examples) {
  const AssrModel ex5 = compile(parse_network(kTwoStateNet));
  EXPECT_EQ(one_step_reachable(ex5, 1), (std::set<Index>{1, 2}));
  EXPECT_EQ(one_step_reachable(ex5, 3), (std::set<Index>{4}));
  EXPECT_THROW(one_step_reachable(ex5, 5), std::out_of_range);
  EXPECT_THROW(one_step_reachable(ex5, 0), std::out_of_range);

  const AssrModel id = compile(parse_network(testing::kIdentity2));
  for (Index s = 1; s <= 4; ++s) EXPECT_EQ(one_step_reachable(id, s), (std::set<Index>{s}));
}

TEST(TransitionGraph, TwoStateNetEdges) {
  const auto graph = transition_graph(compile(parse_network(kTwoStateNet)));
  EXPECT_EQ(graph.vertex_count, 4U);
  std::vector<std::pair<Index, Index>> edges;
  for (const auto& e : graph.edges) edges.emplace_back(e.from, e.to);
  EXPECT_EQ(edges, (std::vector<std::pair<Index, Index>>{
                       {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 4}, {4, 4}}));
}

TEST(TransitionGraph, FibonacciNetInputLabels) {
  const auto graph = transition_graph(compile(parse_network(kFibonacciNet)));
  EXPECT_EQ(graph.edges, (std::vector<TransitionEdge>{
                             {1, 1, {1}}, {1, 2, {2}}, {2, 1, {1, 2}}}));
}

TEST(TransitionGraph, IdentityIsSelfLoops) {
  const auto graph = transition_graph(compile(parse_network(testing::kIdentity2)));
  ASSERT_EQ(graph.edges.size(), 4U);
  for (const auto& e : graph.edges) EXPECT_EQ(e.from, e.to);
}

}  // namespace
}  // namespace bcn
