#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace dtlab;

namespace {

DecisionTree x(Var v, const DecisionTree& lo, const DecisionTree& hi) { return DecisionTree::branch(v, lo, hi); }
DecisionTree L(bool b) { return DecisionTree::leaf(b); }
F2Polynomial P(std::vector<std::vector<Var>> ms) {
  std::vector<Monomial> out;
  for (auto& m : ms) out.emplace_back(m);
  return F2Polynomial(std::move(out));
}

}  // namespace

TEST(Eval, ConstantLeaf) { EXPECT_TRUE(L(true).eval(Assignment::from_string("0101"))); }

TEST(Eval, IdentityTree) { EXPECT_TRUE(x(0, L(false), L(true)).eval(Assignment::from_string("1"))); }

TEST(Eval, PolynomialMatchesTruthTable) {
  auto p = P({{0, 1}, {0}});
  const auto a = Assignment::from_string("10");
  EXPECT_TRUE(p.eval(a));
  // x1x2 + x1 = x1(1+x2): one exactly at x=(1,0)
  auto ref_fn = [](const Assignment& y) { return y.get(0) && !y.get(1); };
  EXPECT_TRUE(ref::equal([&](const Assignment& y) { return p.eval(y); }, ref_fn, 2));
}

TEST(Eval, OutOfRangeVariableThrows) {
  auto t = x(3, L(false), L(true));
  EXPECT_THROW(BooleanFunction(2, t), MalformedFunction);
  EXPECT_THROW((void)t.eval(Assignment(2)), MalformedFunction);
  BooleanFunction f(4, t);
  EXPECT_THROW((void)f.eval(Assignment(3)), MalformedFunction);
}

TEST(TreeToDts, LeafZeroIsEmpty) { EXPECT_TRUE(tree_to_dts(L(false)).terms.empty()); }

TEST(TreeToDts, IdentityTree) {
  auto s = tree_to_dts(x(0, L(false), L(true)));
  ASSERT_EQ(s.terms.size(), 1u);
  EXPECT_EQ(s.terms[0], (Term{{0}, {}}));
}

TEST(TreeToDts, OneTermPerOneLeaf) {
  auto t = x(0, L(true), x(1, L(true), L(false)));
  auto s = tree_to_dts(t);
  ASSERT_EQ(s.terms.size(), 2u);
  EXPECT_EQ(s.terms[0], (Term{{}, {0}}));
  EXPECT_EQ(s.terms[1], (Term{{0}, {1}}));
  EXPECT_TRUE(s.pairwise_disjoint());
}

TEST(DtsToPoly, SingleTerm) {
  DisjointTermSum s{{Term{{0}, {1}}}};
  EXPECT_EQ(dts_to_poly(s), P({{0}, {0, 1}}));
}

TEST(DtsToPoly, EmptySumIsZero) { EXPECT_TRUE(dts_to_poly(DisjointTermSum{}).is_zero()); }

TEST(DtsToPoly, CancellationAgainstOracle) {
  DisjointTermSum s{{Term{{}, {0}}, Term{{0}, {1}}}};
  const auto p = dts_to_poly(s);
  EXPECT_EQ(p, ref::poly([&](const Assignment& y) { return s.eval(y); }, 2));
  EXPECT_EQ(p, P({{}, {0, 1}}));
}

TEST(Restrict, ToZeroKillsEverything) { EXPECT_TRUE(P({{0, 1}, {0}}).restrict(RestrictionSeq{{0, false}}).is_zero()); }

TEST(Restrict, ToOneCancels) { EXPECT_EQ(P({{0, 1}, {0}}).restrict(RestrictionSeq{{0, true}}), P({{1}, {}})); }

TEST(Restrict, AgainstOracle) {
  auto f = P({{0, 1}, {1, 2}});
  auto g = f.restrict(RestrictionSeq{{1, true}});
  auto expect = ref::poly([&](Assignment y) { y.set(1, true); return f.eval(y); }, 3);
  EXPECT_EQ(g, expect);
  EXPECT_EQ(g, P({{0}, {2}}));
}

TEST(Shift, SingleVariable) {
  Assignment a = Assignment::from_string("111");
  EXPECT_EQ(P({{0}}).shift(a), P({{0}, {}}));
}

TEST(Shift, ZeroShiftIsIdentity) {
  auto f = P({{0, 2}, {1}, {}});
  EXPECT_EQ(f.shift(Assignment(3)), f);
}

TEST(Shift, ProductExpansionAgainstOracle) {
  auto f = P({{0, 1}});
  auto a = Assignment::from_string("11");
  auto g = f.shift(a);
  EXPECT_EQ(g, ref::poly([&](const Assignment& y) { return f.eval(y ^ a); }, 2));
  EXPECT_EQ(g, P({{0, 1}, {0}, {1}, {}}));
  EXPECT_EQ(g.shift(a), f);
}

TEST(SizeDepth, Leaf) {
  EXPECT_EQ(L(false).size(), 1u);
  EXPECT_EQ(L(false).depth(), 0u);
}

TEST(SizeDepth, CompleteDepthTwo) {
  auto t = x(0, x(1, L(false), L(true)), x(1, L(true), L(false)));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.depth(), 2u);
}

TEST(SizeDepth, ThreeLeafTree) {
  auto t = x(0, L(true), x(1, L(true), L(false)));
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.depth(), 2u);
}

TEST(Distance, Identical) {
  BooleanFunction f(3, P({{0, 1}}));
  EXPECT_DOUBLE_EQ(distance_exact(f, f, Distribution::uniform()), 0.0);
}

TEST(Distance, Complement) {
  BooleanFunction f(1, P({{0}}));
  BooleanFunction g(1, P({{0}, {}}));
  EXPECT_DOUBLE_EQ(distance_exact(f, g, Distribution::uniform()), 1.0);
}

TEST(Distance, AndAgainstZero) {
  BooleanFunction f(2, P({{0, 1}}));
  BooleanFunction g(2, F2Polynomial::zero());
  // one of four points differs
  const auto t = ref::table([&](const Assignment& y) { return f.eval(y) != g.eval(y); }, 2);
  const double expect = static_cast<double>(std::count(t.begin(), t.end(), true)) / 4.0;
  EXPECT_DOUBLE_EQ(distance_exact(f, g, Distribution::uniform()), expect);
  EXPECT_DOUBLE_EQ(expect, 0.25);
}

TEST(Distance, ExplicitDistributionAndCap) {
  BooleanFunction f(2, P({{0}}));
  BooleanFunction g(2, P({{1}}));
  auto d = Distribution::explicit_points({{Assignment::from_string("10"), 0.3}, {Assignment::from_string("11"), 0.7}});
  EXPECT_DOUBLE_EQ(distance_exact(f, g, d), 0.3);
  BooleanFunction big(30, F2Polynomial::zero());
  EXPECT_THROW(distance_exact(big, big, Distribution::uniform()), EnumerationCapExceeded);
  EXPECT_NEAR(distance_sampled(f, g, Distribution::uniform(), 20000, 9), 0.5, 0.02);
}

TEST(DistributionFile, Validation) {
  EXPECT_THROW(Distribution::explicit_points({{Assignment::from_string("1"), 0.5}}), std::invalid_argument);
  EXPECT_THROW(Distribution::explicit_points({{Assignment::from_string("1"), 0.5}, {Assignment::from_string("01"), 0.5}}),
               std::invalid_argument);
}

TEST(Representations, AgreeOnRandomTrees) {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng.below(9);
    auto t = gen::random_depth_tree(n, 1 + rng.below(5), rng);
    auto s = tree_to_dts(t);
    auto p = dts_to_poly(s);
    EXPECT_TRUE(s.pairwise_disjoint());
    EXPECT_EQ(p, ref::poly([&](const Assignment& y) { return t.eval(y); }, n));
    EXPECT_EQ(TruthTable::from_poly(p, n).to_poly(), p);
  }
}

TEST(Representations, TermLiteralsMatchLeafDepth) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    auto t = gen::random_size_tree(8, 1 + rng.below(8), rng);
    auto s = tree_to_dts(t);
    std::size_t ones = 0;
    std::vector<std::size_t> depths;
    std::function<void(std::uint32_t, std::size_t)> walk = [&](std::uint32_t node, std::size_t d) {
      const auto& nd = t.nodes()[node];
      if (nd.is_leaf) {
        if (nd.value) {
          ++ones;
          depths.push_back(d);
        }
        return;
      }
      walk(nd.lo, d + 1);
      walk(nd.hi, d + 1);
    };
    walk(t.root(), 0);
    ASSERT_EQ(s.terms.size(), ones);
    std::vector<std::size_t> sizes;
    for (const auto& term : s.terms) sizes.push_back(term.size());
    std::sort(sizes.begin(), sizes.end());
    std::sort(depths.begin(), depths.end());
    EXPECT_EQ(sizes, depths);
  }
}

TEST(F2Laws, AdditionRestrictionShift) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    auto f = gen::random_poly(algebra::all_vars(6), 3, 5, rng);
    auto g = gen::random_poly(algebra::all_vars(6), 3, 5, rng);
    EXPECT_TRUE((f + f).is_zero());
    RestrictionSeq q{{static_cast<Var>(rng.below(6)), rng.bit()}};
    EXPECT_EQ((f + g).restrict(q), f.restrict(q) + g.restrict(q));
    auto a = Assignment::uniform(6, rng);
    EXPECT_EQ((f + g).shift(a), f.shift(a) + g.shift(a));
  }
}

TEST(RestrictionSeq, RejectsRepeatedVariable) {
  RestrictionSeq q;
  q.push(1, true);
  EXPECT_THROW(q.push(1, false), std::invalid_argument);
}

TEST(TruthTable, HexRoundTrip) {
  auto t = TruthTable::from_hex(3, "96");  // parity of 3
  for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(t.get(i), std::popcount(i) % 2 == 1);
  EXPECT_EQ(t.to_hex(), "96");
}

TEST(Session, DeterministicTranscripts) {
  auto run = [](std::uint64_t seed) {
    OracleSession s(BooleanFunction(5, F2Polynomial(std::vector<Monomial>{Monomial{0, 3}})), Distribution::uniform(), seed);
    for (int i = 0; i < 20; ++i) s.example();
    s.query(Assignment::uniform(5, s.rng()));
    return std::make_tuple(s.transcript_digest(), s.bb_count(), s.rex_count());
  };
  EXPECT_EQ(run(4), run(4));
  EXPECT_NE(std::get<0>(run(4)), std::get<0>(run(5)));
}

TEST(Session, BudgetIsEnforced) {
  OracleSession s(BooleanFunction(2, F2Polynomial::zero()), Distribution::uniform(), 1, 3);
  s.query(Assignment(2));
  s.example();
  s.query(Assignment(2));
  EXPECT_THROW(s.query(Assignment(2)), BudgetExhausted);
  EXPECT_EQ(s.bb_count() + s.rex_count(), 3u);
}

TEST(Io, FunctionFormatsRoundTrip) {
  auto t = x(0, L(true), x(2, L(true), L(false)));
  BooleanFunction f(3, t);
  auto j = io::function_to_json(f);
  EXPECT_EQ(j["nodes"].size(), 5u);
  auto back = io::function_from_json(j);
  EXPECT_TRUE(ref::equal(f, back, 3));

  auto pj = nlohmann::ordered_json::parse(R"({"repr":"poly","n":3,"monomials":[[1,3],[]]})");
  auto p = io::function_from_json(pj);
  EXPECT_EQ(p.to_poly(), P({{0, 2}, {}}));
  EXPECT_EQ(io::function_to_json(p).dump(), R"({"repr":"poly","n":3,"monomials":[[],[1,3]]})");

  auto tj = nlohmann::ordered_json::parse(R"({"repr":"truthtable","n":2,"bits":"6"})");
  EXPECT_EQ(io::function_from_json(tj).to_poly(), P({{0}, {1}}));

  auto bad = nlohmann::ordered_json::parse(R"({"repr":"poly","n":1,"monomials":[[2]]})");
  EXPECT_THROW(io::function_from_json(bad), MalformedFunction);
  auto cyc = nlohmann::ordered_json::parse(R"({"repr":"tree","n":1,"nodes":[{"var":1,"lo":0,"hi":0}],"root":0})");
  EXPECT_THROW(io::function_from_json(cyc), MalformedFunction);
}

TEST(Io, DistributionFormat) {
  auto j = nlohmann::ordered_json::parse(R"({"dist":"explicit","points":[{"x":"10","p":0.25},{"x":"01","p":0.75}]})");
  auto d = io::distribution_from_json(j);
  EXPECT_EQ(d.support().size(), 2u);
  EXPECT_TRUE(d.support()[0].first.get(0));
  EXPECT_EQ(io::distribution_to_json(d).dump(), j.dump());
}
