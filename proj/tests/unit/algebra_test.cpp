#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace dtlab;
using namespace dtlab::algebra;

namespace {

F2Polynomial P(std::vector<std::vector<Var>> ms) {
  std::vector<Monomial> out;
  for (auto& m : ms) out.emplace_back(m);
  return F2Polynomial(std::move(out));
}

OracleSession session(std::size_t n, F2Polynomial p, std::uint64_t seed = 1) {
  return OracleSession(BooleanFunction(n, std::move(p)), Distribution::uniform(), seed);
}

}  // namespace

TEST(Probe, ConstantOne) {
  auto s = session(5, F2Polynomial::one());
  auto r = probe_nonconstant(s, {3, 0.01});
  EXPECT_TRUE(r.constant);
  EXPECT_TRUE(r.value);
}

TEST(Probe, SingleVariableWitness) {
  EXPECT_EQ(probe_samples(1, 0.01), 10u);  // ceil(2 ln 100)
  EXPECT_LE(std::pow(0.5, 10), 0.01);
  auto s = session(4, P({{0}}));
  auto r = probe_nonconstant(s, {1, 0.01});
  ASSERT_FALSE(r.constant);
  EXPECT_TRUE(r.witness.get(0));
}

TEST(Probe, HitRateOfTripleAnd) {
  auto f = P({{0, 1, 2}});
  const auto t = ref::table([&](const Assignment& x) { return f.eval(x); }, 3);
  const double rate = static_cast<double>(std::count(t.begin(), t.end(), true)) / 8.0;
  EXPECT_DOUBLE_EQ(rate, 1.0 / 8.0);
  auto s = session(3, f, 2);
  auto r = probe_nonconstant(s, {3, 0.001});
  ASSERT_FALSE(r.constant);
  EXPECT_TRUE(f.eval(r.witness));
}

TEST(NewRelevant, OnlyVariable) {
  auto s = session(8, P({{2}}));
  EXPECT_EQ(find_new_relevant_var(s, {}, {1, 0.01}), std::optional<Var>(2));
}

TEST(NewRelevant, AllFound) {
  auto s = session(6, P({{0}, {1}}));
  EXPECT_EQ(find_new_relevant_var(s, {0, 1}, {1, 0.01}), std::nullopt);
}

TEST(NewRelevant, ExtendsKnownSet) {
  auto s = session(6, P({{0, 1}}));
  EXPECT_EQ(find_new_relevant_var(s, {0}, {2, 0.01}), std::optional<Var>(1));
}

TEST(NewRelevant, BinarySearchCostIsLogarithmic) {
  auto s = session(64, P({{37}}), 8);
  const auto v = find_new_relevant_var(s, {}, {1, 0.01});
  EXPECT_EQ(v, std::optional<Var>(37));
  // every probe costs two queries; the search adds at most ceil(log2 64)
  EXPECT_LE(s.bb_count(), 2 * probe_samples(1, 0.01) + 6);
}

TEST(RelevantVars, Sum) {
  auto s = session(8, P({{1}, {4}}));
  auto r = find_relevant_vars(s, {1, 0.01}, 4);
  EXPECT_FALSE(r.too_many);
  EXPECT_EQ(r.vars, (std::vector<Var>{1, 4}));
}

TEST(RelevantVars, TooMany) {
  auto s = session(8, P({{0, 1}, {2}}));
  EXPECT_TRUE(find_relevant_vars(s, {2, 0.01}, 2).too_many);
}

TEST(RelevantVars, TreeAgainstRestrictionOracle) {
  auto t = DecisionTree::branch(0, DecisionTree::branch(3, DecisionTree::leaf(false), DecisionTree::leaf(true)),
                                DecisionTree::branch(5, DecisionTree::leaf(true), DecisionTree::leaf(false)));
  BooleanFunction f(8, t);
  const auto expect = ref::relevant(f, 8);
  EXPECT_EQ(expect, (std::vector<Var>{0, 3, 5}));
  OracleSession s(f, Distribution::uniform(), 3);
  auto r = find_relevant_vars(s, {3, 0.01}, 8);
  EXPECT_EQ(r.vars, expect);
}

TEST(GFunction, MaximalMonomialGivesZero) {
  auto f = P({{0, 1}, {0}, {2}});
  EXPECT_TRUE(g_function(f, Monomial{0, 1}).is_zero());
  auto s = session(4, f);
  EXPECT_EQ(maximal_monomial_step(s, Monomial{0, 1}, {0, 1, 2}, {2, 0.01}).kind, StepResult::Kind::Maximal);
}

TEST(GFunction, SubMonomialExtends) {
  auto f = P({{0, 1}, {0}, {2}});
  EXPECT_EQ(g_function(f, Monomial{0}), P({{1}}));
  auto s = session(4, f);
  auto step = maximal_monomial_step(s, Monomial{0}, {0, 1, 2}, {2, 0.01});
  EXPECT_EQ(step.kind, StepResult::Kind::Extend);
  EXPECT_EQ(step.var, 1u);
}

TEST(GFunction, SingleVariable) {
  EXPECT_TRUE(g_function(P({{0}}), Monomial{0}).is_zero());
  auto s = session(2, P({{0}}));
  EXPECT_EQ(maximal_monomial_step(s, Monomial{0}, {0}, {1, 0.01}).kind, StepResult::Kind::Maximal);
}

TEST(GFunction, IdentityOnDecomposition) {
  // f = M g + h with M in no monomial of h: G = g + 1 over F2 after summing
  // the 2^|M| restrictions, so G == 0 exactly when g == 1.
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Monomial m{0, 1};
    auto g = gen::random_poly({2, 3, 4, 5}, 2, 2, rng);
    auto h = gen::random_poly({0, 2, 3, 4, 5}, 3, 3, rng);
    auto f = F2Polynomial(std::vector<Monomial>{m}) * g + h;
    EXPECT_EQ(g_function(f, m), g + F2Polynomial::one());
    EXPECT_EQ(g_function(f, m).is_zero(), is_maximal_monomial(f, m));
  }
}

TEST(MaximalMonomial, SingleVariable) {
  auto s = session(5, P({{2}}));
  auto r = find_maximal_monomial(s, {2}, {1, 0.01}, 1);
  EXPECT_EQ(r.status, MonomialResult::Status::Found);
  EXPECT_EQ(r.monomial, (Monomial{2}));
}

TEST(MaximalMonomial, EitherMaximalMonomial) {
  auto f = P({{0, 1}, {0}, {2}});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto s = session(4, f, seed);
    auto r = find_maximal_monomial(s, {0, 1, 2}, {2, 0.01}, 2);
    ASSERT_EQ(r.status, MonomialResult::Status::Found);
    EXPECT_TRUE(r.monomial == (Monomial{0, 1}) || r.monomial == (Monomial{2}));
    EXPECT_TRUE(is_maximal_monomial(f, r.monomial));
  }
}

TEST(MaximalMonomial, TooLarge) {
  auto s = session(3, P({{0, 1, 2}}));
  EXPECT_EQ(find_maximal_monomial(s, {0, 1, 2}, {3, 0.01}, 2).status, MonomialResult::Status::TooLarge);
}

TEST(Interpolate, AndOr) {
  auto s = session(3, P({{0, 1}}));
  EXPECT_EQ(interpolate_poly(s, {0, 1}), P({{0, 1}}));
  auto or_fn = [](const Assignment& x) { return x.get(0) || x.get(1); };
  OracleSession so(BooleanFunction(2, or_fn), Distribution::uniform(), 1);
  EXPECT_EQ(interpolate_poly(so, {0, 1}), P({{0}, {1}, {0, 1}}));
}

TEST(Interpolate, RandomTableRoundTrip) {
  auto tt = TruthTable::from_hex(3, "96");
  OracleSession s(BooleanFunction(tt), Distribution::uniform(), 1);
  auto p = interpolate_poly(s, {0, 1, 2});
  for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(p.eval(Assignment::from_index(3, i)), tt.get(i));
  EXPECT_EQ(p, ref::poly([&](const Assignment& x) { return tt.eval(x); }, 3));
}

TEST(Interpolate, CapAndRoundTrip) {
  auto s = session(30, F2Polynomial::zero());
  EXPECT_THROW(interpolate_poly(s, algebra::all_vars(25)), InterpolationCapExceeded);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.below(10);
    auto f = gen::random_poly(all_vars(n), 4, 6, rng);
    auto o = session(n, f, i);
    EXPECT_EQ(interpolate_poly(o, all_vars(n)), f);
  }
}

TEST(Cd, Constant) {
  auto r = cd(F2Polynomial::one(), 5);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, 0u);
  EXPECT_TRUE(r->witness.empty());
}

TEST(Cd, SmallExamplesAgainstSubsetSearch) {
  // reference: smallest subset whose zeroing leaves a constant truth table
  auto brute = [](const F2Polynomial& f, std::size_t n) {
    for (std::size_t k = 0; k <= n; ++k)
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        auto t = ref::table([&](Assignment x) {
          for (Var v = 0; v < n; ++v)
            if ((mask >> v) & 1U) x.set(v, false);
          return f.eval(x);
        }, n);
        if (std::all_of(t.begin(), t.end(), [&](bool b) { return b == t[0]; })) return k;
      }
    return n;
  };
  auto f = P({{0, 1}, {2}});
  EXPECT_EQ(brute(f, 3), 2u);
  EXPECT_EQ(cd(f, 3)->value, 2u);
  auto or3 = ref::poly([](const Assignment& x) { return x.get(0) || x.get(1) || x.get(2); }, 3);
  EXPECT_EQ(brute(or3, 3), 3u);
  EXPECT_EQ(cd(or3, 3)->value, 3u);
  EXPECT_FALSE(cd(or3, 2));
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    auto g = gen::random_poly(all_vars(6), 3, 4, rng);
    auto r = cd(g, 6);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->value, brute(g, 6));
    EXPECT_TRUE(g.zero_out(r->witness).is_constant());
  }
}

TEST(Cd, MonotoneUnderLowDegreeParts) {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    auto f = gen::random_poly(all_vars(8), 4, 6, rng);
    const auto full = cd(f, 8)->value;
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_LE(cd(f.part(SizeInterval::closed(0, k)), 8)->value, full);
  }
}

TEST(Cd, FrequentVariableExists) {
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    auto f = gen::random_poly(all_vars(8), 3, 6, rng);
    const auto l = cd(f, 8)->value;
    const auto ps = psize(f);
    if (l == 0 || ps.value == 0) continue;
    std::size_t best = 0;
    for (Var v = 0; v < 8; ++v) {
      std::size_t c = 0;
      for (const auto& m : ps.witness) c += m.contains(v);
      best = std::max(best, c);
    }
    EXPECT_GE(best * l, ps.value);
  }
}

TEST(LowDegreePart, Examples) {
  EXPECT_EQ(low_degree_part(P({{}, {0}, {0, 1, 2}}), SizeInterval::closed(1, 1)), P({{0}}));
  auto f = P({{}, {0}, {0, 1, 2}});
  EXPECT_EQ(low_degree_part(f, SizeInterval::closed(0, 3)), f);
  EXPECT_EQ(low_degree_part(P({{0}, {0, 1}, {0, 1, 2}}), SizeInterval::left_open(1, 2)), P({{0, 1}}));
}

TEST(Psize, CountsNonConstantMonomials) {
  EXPECT_EQ(psize(P({{}, {0}, {1, 2}})).value, 2u);
  EXPECT_EQ(psize(P({{0}, {1, 2}})).value, 2u);
  EXPECT_EQ(psize(F2Polynomial::one()).value, 0u);
}

TEST(Soundness, NoFalseRelevantVariables) {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    const std::size_t d = 1 + rng.below(3);
    auto f = gen::random_poly(all_vars(10), d, 4, rng);
    const auto truth = f.variables();
    auto s = session(10, f, i);
    auto r = find_relevant_vars(s, {d, 0.05}, 16);
    for (Var v : r.vars) EXPECT_TRUE(std::binary_search(truth.begin(), truth.end(), v));
  }
}
