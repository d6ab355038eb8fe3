#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace dtlab;
using namespace dtlab::reduce;

namespace {

BooleanFunction single_var(std::size_t n, Var v) {
  return {n, DecisionTree::branch(v, DecisionTree::leaf(false), DecisionTree::leaf(true))};
}

std::size_t ceil_log2(std::size_t n) { return static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))); }

}  // namespace

TEST(FindClose, ConstantKeepsEverythingZeroed) {
  OracleSession s(BooleanFunction(20, DecisionTree::leaf(true)), Distribution::uniform(), 1);
  auto r = find_close(s, 2, 0.1, 0.1, 2.0);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.relevant.empty());
  EXPECT_EQ(r.zeroed.size(), 20u);
  EXPECT_TRUE(r.converged);
}

TEST(FindClose, SingleVariableAmongHundred) {
  OracleSession s(single_var(100, 4), Distribution::uniform(), 2);
  auto r = find_close(s, 2, 0.1, 0.1, 2.0);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.relevant, (std::vector<Var>{4}));
  EXPECT_EQ(r.zeroed.size(), 99u);
  EXPECT_LE(r.bb_queries, r.rounds + ceil_log2(100));
}

TEST(FindClose, WideParityOverflows) {
  OracleSession s(BooleanFunction(12, gen::parity_poly(6)), Distribution::uniform(), 3);
  auto r = find_close(s, 2, 0.1, 0.1, 2.0);
  EXPECT_EQ(r.status, ProjectionResult::Status::TooManyRelevant);
  EXPECT_EQ(r.relevant.size(), 3u);
}

TEST(FindClose, BoundsFormula) {
  const auto b = find_close_bounds(4, 0.2, 0.1, 2.0);
  EXPECT_EQ(b.rounds, static_cast<std::uint64_t>(std::ceil(2.0 * 4 * std::log(40.0) / 0.2)));
  EXPECT_EQ(b.streak, static_cast<std::uint64_t>(std::ceil(2.0 * std::log(40.0) / 0.2)));
  EXPECT_THROW(find_close_bounds(0, 0.2, 0.1, 2.0), std::invalid_argument);
}

TEST(FindClose, RemovedVariablesAreRelevantAndQueriesAccounted) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 6 + rng.below(8);
    auto t = gen::random_depth_tree(n, 2, rng);
    BooleanFunction f(n, t);
    const auto truth = ref::relevant([&](const Assignment& x) { return f.eval(x); }, n);
    OracleSession s(f, Distribution::uniform(), 100 + i);
    s.set_recording(true);
    auto r = find_close(s, 4, 0.2, 0.1, 2.0);
    ASSERT_TRUE(r.ok());
    for (Var v : r.relevant) EXPECT_TRUE(std::binary_search(truth.begin(), truth.end(), v));
    std::uint64_t bb = 0, ex = 0;
    for (const auto& e : s.transcript()) (e.is_example ? ex : bb)++;
    EXPECT_EQ(bb, r.bb_queries);
    EXPECT_EQ(ex, r.examples);
    EXPECT_LE(bb, (r.relevant.size() + 1) * ceil_log2(n) + ex);
  }
}

TEST(FindClose, ProjectionOfJuntaIsClose) {
  Rng rng(8);
  int close = 0;
  for (int i = 0; i < 40; ++i) {
    const auto vars = gen::random_subset(16, 3, rng);
    auto p = gen::embed(gen::random_poly({0, 1, 2}, 3, 4, rng), vars);
    BooleanFunction f(16, p);
    OracleSession s(f, Distribution::uniform(), 200 + i);
    auto r = find_close(s, 3, 0.2, 0.1, 2.0);
    ASSERT_TRUE(r.ok());
    BooleanFunction g(16, p.zero_out(r.zeroed));
    close += distance_exact(f, g, Distribution::uniform()) <= 0.1;
  }
  EXPECT_GE(close, 36);
}

TEST(Projected, AnswersWithComplementZeroed) {
  OracleSession s(BooleanFunction(4, F2Polynomial({Monomial{0, 3}, Monomial{1}})), Distribution::uniform(), 1);
  ProjectedOracle po(s, {0, 3});
  EXPECT_EQ(po.num_vars(), 2u);
  EXPECT_TRUE(po.query(Assignment::from_string("11")));
  EXPECT_FALSE(po.query(Assignment::from_string("10")));
  for (int i = 0; i < 20; ++i) {
    auto e = po.example();
    EXPECT_EQ(e.y, e.x.get(0) && e.x.get(1));
  }
}

TEST(Reduction, LearnsThroughProjection) {
  OracleSession s(single_var(200, 17), Distribution::uniform(), 5);
  auto out = reduce_learner(s, 1, 0.1, 0.1, [](Oracle& o, double eps, double delta) {
    return learn::learn_dtds_distfree(o, {2, 1, eps, delta});
  });
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.tree.variables(), (std::vector<Var>{17}));
}

namespace {

auto depth_learner(std::size_t d) {
  return [d](Oracle& o, double eps, double delta) {
    return learn::learn_dtds_distfree(o, {std::size_t{1} << d, std::min(d, o.num_vars()), eps, delta});
  };
}

}  // namespace

TEST(TesterFromLearner, AcceptsMemberRejectsParity) {
  Rng rng(9);
  int accepted = 0;
  for (int i = 0; i < 10; ++i) {
    OracleSession s(BooleanFunction(32, gen::random_depth_tree(32, 2, rng)), Distribution::uniform(), 300 + i);
    accepted += tester_from_learner(s, 4, 0.25, 0.1, depth_learner(2)).decision == testers::Decision::Accept;
  }
  EXPECT_GE(accepted, 9);

  int rejected = 0;
  for (int i = 0; i < 10; ++i) {
    OracleSession s(BooleanFunction(12, gen::parity_poly(6)), Distribution::uniform(), 400 + i);
    rejected += tester_from_learner(s, 4, 0.25, 0.1, depth_learner(2)).decision == testers::Decision::Reject;
  }
  EXPECT_GE(rejected, 9);
}

TEST(TesterFromLearner, PointMassOnlySeesOnePoint) {
  // Under a point mass every function agrees with a constant.
  auto x = Assignment::from_string("10110000");
  OracleSession s(BooleanFunction(8, gen::parity_poly(8)), Distribution::explicit_points({{x, 1.0}}), 1);
  auto rep = tester_from_learner(s, 1, 0.25, 0.1, depth_learner(1));
  EXPECT_EQ(rep.decision, testers::Decision::Accept);
}

TEST(TesterFromLearner, UniformCostModelIgnoresD) {
  auto x = Assignment::from_string("10110000");
  OracleSession s(BooleanFunction(8, gen::parity_poly(8)), Distribution::explicit_points({{x, 1.0}}), 1);
  auto rep = tester_from_learner(s, 1, 0.25, 0.1, depth_learner(1), CostModel::Uniform);
  EXPECT_EQ(rep.decision, testers::Decision::Reject);
}
