#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtlab/algebra.hpp"
#include "dtlab/decision_tree.hpp"
#include "dtlab/oracle.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/testers/report.hpp"

namespace dtlab::testers {

struct DepthTesterParams {
  std::size_t d = 1;
  double eps = 0.25;
  double delta = 0.1;
  std::optional<std::size_t> route_samples;  // default ceil(4/eps)
  std::optional<std::size_t> route_cutoff;   // default d(d+1)/2

  [[nodiscard]] std::size_t samples() const {
    return route_samples ? *route_samples : static_cast<std::size_t>(std::ceil(4.0 / eps));
  }
  [[nodiscard]] std::size_t cutoff() const { return route_cutoff ? *route_cutoff : d * (d + 1) / 2; }

  void validate() const {
    if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
      throw std::invalid_argument("eps and delta must lie in (0,1)");
    if (d > 20) throw std::invalid_argument("depth bound too large");
    if (cutoff() < d) throw std::invalid_argument("route cutoff must be at least d");
  }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    return {{"tester", "depth-df"}, {"d", d},           {"eps", eps},
            {"delta", delta},       {"samples", samples()}, {"cutoff", cutoff()}};
  }
};

struct RouteResult {
  enum class Status { Leaf, Exceeded, TooLarge, Failed } status = Status::Leaf;
  std::size_t depth = 0;
  std::vector<Monomial> monomials;
  RestrictionSeq q;
  bool leaf_value = false;
};

inline const char* to_string(RouteResult::Status s) {
  switch (s) {
    case RouteResult::Status::Leaf: return "leaf";
    case RouteResult::Status::Exceeded: return "exceeded";
    case RouteResult::Status::TooLarge: return "too_large";
    case RouteResult::Status::Failed: return "failed";
  }
  return "?";
}

/// Follows b down T_f without building it. Each round either sees the
/// current restriction as constant (a leaf) or finds a maximal monomial of
/// size <= d and fixes all of its variables to b's values.
/// `o` must range over the relevant variables only (a projection).
inline RouteResult route_in_Tf(Oracle& o, const Assignment& b, std::size_t cutoff, std::size_t d, double delta) {
  const std::size_t n = o.num_vars();
  const double per_round = delta / static_cast<double>(cutoff + 1);
  const algebra::ProbeParams probe{d, per_round / 2};
  const algebra::ProbeParams grow{d, per_round / 2};
  RouteResult r;
  for (;;) {
    RestrictedOracle cur(o, r.q);
    std::vector<Var> universe;
    for (Var v = 0; v < n; ++v)
      if (!r.q.contains(v)) universe.push_back(v);
    auto pr = algebra::probe_nonconstant(cur, probe, universe);
    if (pr.constant) {
      r.leaf_value = pr.value;
      return r;
    }
    auto mm = algebra::find_maximal_monomial(cur, universe, grow, d);
    if (mm.status == algebra::MonomialResult::Status::TooLarge) {
      r.status = RouteResult::Status::TooLarge;
      return r;
    }
    if (mm.status == algebra::MonomialResult::Status::Failed || mm.monomial.empty()) {
      r.status = RouteResult::Status::Failed;
      return r;
    }
    for (Var v : mm.monomial) r.q.push(v, b.get(v));
    r.depth += mm.monomial.size();
    r.monomials.push_back(mm.monomial);
    if (r.depth > cutoff) {
      r.status = RouteResult::Status::Exceeded;
      r.depth = cutoff + 1;
      return r;
    }
  }
}

/// Distribution-free tester for depth-d trees: reject when more than 2^d
/// variables are relevant, when a route needs a maximal monomial longer than
/// d, or when some route of a point from D passes the cutoff.
inline TesterReport test_depth_distfree(Oracle& o, const DepthTesterParams& p) {
  p.validate();
  const std::size_t cap = std::size_t{1} << p.d;
  auto rel = algebra::find_relevant_vars(o, {p.d, p.delta / 2}, cap);
  if (rel.too_many) return TesterReport::reject("more than " + std::to_string(cap) + " relevant variables");

  ProjectedOracle proj(o, rel.vars);
  const std::size_t t = p.samples();
  const double route_delta = p.delta / 2 / static_cast<double>(std::max<std::size_t>(t, 1));
  TesterReport rep = TesterReport::accept();
  for (std::size_t i = 0; i < t; ++i) {
    const Assignment b = proj.project(o.example().x);
    auto route = route_in_Tf(proj, b, p.cutoff(), p.d, route_delta);
    rep.walks.push_back({route.depth, to_string(route.status)});
    switch (route.status) {
      case RouteResult::Status::Leaf: break;
      case RouteResult::Status::Exceeded:
        rep.decision = Decision::Reject;
        rep.reason = "route passed depth " + std::to_string(p.cutoff());
        return rep;
      case RouteResult::Status::TooLarge:
        rep.decision = Decision::Reject;
        rep.reason = "no maximal monomial of size at most " + std::to_string(p.d);
        return rep;
      case RouteResult::Status::Failed:
        rep.decision = Decision::Reject;
        rep.reason = "maximal monomial search failed";
        return rep;
    }
  }
  rep.reason = std::to_string(t) + " routes ended within depth " + std::to_string(p.cutoff());
  return rep;
}

namespace symbolic {

/// Chooses which maximal monomial T_f splits on; the default takes the
/// lexicographically smallest.
using MonomialChooser = std::function<Monomial(const std::vector<Monomial>&)>;

inline Monomial first_maximal(const std::vector<Monomial>& ms) { return ms.front(); }

/// Builds T_f from an explicit polynomial: a complete tree over the chosen
/// maximal monomial's variables, then recursion on every restriction.
inline DecisionTree build_Tf(const F2Polynomial& f, const MonomialChooser& choose = first_maximal) {
  if (f.is_constant()) return DecisionTree::leaf(f.constant_term());
  const Monomial m = choose(maximal_monomials(f));
  const auto& vars = m.vars();
  std::function<DecisionTree(std::size_t, const F2Polynomial&)> level = [&](std::size_t i, const F2Polynomial& g) {
    if (i == vars.size()) return build_Tf(g, choose);
    return DecisionTree::branch(vars[i], level(i + 1, g.restrict(vars[i], false)),
                                level(i + 1, g.restrict(vars[i], true)));
  };
  return level(0, f);
}

/// Largest T_f depth over every sequence of maximal-monomial choices.
inline std::size_t worst_Tf_depth(const F2Polynomial& f) {
  std::map<F2Polynomial, std::size_t> memo;
  std::function<std::size_t(const F2Polynomial&)> rec = [&](const F2Polynomial& g) -> std::size_t {
    if (g.is_constant()) return 0;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    std::size_t best = 0;
    for (const auto& m : maximal_monomials(g)) {
      const std::uint64_t patterns = std::uint64_t{1} << m.size();
      for (std::uint64_t xi = 0; xi < patterns; ++xi) {
        RestrictionSeq q;
        for (std::size_t i = 0; i < m.size(); ++i) q.push(m.vars()[i], (xi >> i) & 1U);
        best = std::max(best, m.size() + rec(g.restrict(q)));
      }
    }
    memo.emplace(g, best);
    return best;
  };
  return rec(f);
}

}  // namespace symbolic

}  // namespace dtlab::testers
