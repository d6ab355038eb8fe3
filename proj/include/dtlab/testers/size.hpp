#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtlab/algebra.hpp"
#include "dtlab/oracle.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/reductions.hpp"
#include "dtlab/testers/report.hpp"

namespace dtlab::testers {

struct SizeTesterParams {
  std::size_t s = 1;
  double eps = 0.25;
  double delta = 0.1;
  double c = 2.0;
  std::optional<std::size_t> walk_repeats;  // default ceil(40/eps)
  std::optional<double> depth_cap_factor;   // default 1024c, or 64 with reduced constants
  bool reduced_constants = false;           // also narrows the learning width to the projected variables
  std::optional<std::size_t> walk_cap;      // overrides factor * ceil(log2^2(s/eps))
  bool check_invariants = true;
  double find_close_c = 2.0;

  [[nodiscard]] std::size_t r() const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(s) / eps))));
  }
  [[nodiscard]] std::size_t r_prime() const { return static_cast<std::size_t>(std::ceil(16.0 * c)) * r(); }
  [[nodiscard]] std::size_t repeats() const {
    return walk_repeats ? *walk_repeats : static_cast<std::size_t>(std::ceil(40.0 / eps));
  }
  [[nodiscard]] double factor() const {
    if (depth_cap_factor) return *depth_cap_factor;
    return reduced_constants ? 64.0 : 1024.0 * c;
  }
  [[nodiscard]] std::size_t cap() const {
    if (walk_cap) return *walk_cap;
    const double l = std::ceil(std::log2(static_cast<double>(s) / eps));
    return static_cast<std::size_t>(factor() * std::max(1.0, l * l));
  }

  void validate() const {
    if (s == 0) throw std::invalid_argument("s must be positive");
    if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
      throw std::invalid_argument("eps and delta must lie in (0,1)");
    if (c < 2.0) throw std::invalid_argument("c must be at least 2");
    if (cap() == 0) throw std::invalid_argument("walk cap must be positive");
  }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    return {{"tester", "size-u"}, {"s", s},          {"eps", eps},         {"delta", delta},
            {"c", c},             {"r", r()},        {"r_prime", r_prime()}, {"repeats", repeats()},
            {"cap", cap()},       {"reduced_constants", reduced_constants}};
  }
};

enum class ProbVerdict { NearZero, NearOne, Middle };

inline const char* to_string(ProbVerdict v) {
  switch (v) {
    case ProbVerdict::NearZero: return "near_zero";
    case ProbVerdict::NearOne: return "near_one";
    case ProbVerdict::Middle: return "middle";
  }
  return "?";
}

/// Estimates Pr[f_{|q} = 1] over uniform points from
/// m = ceil((32/eps) ln(2/delta)) queries, with thresholds eps/8 and 1-eps/8.
inline ProbVerdict estimate_prob_one(Oracle& o, const RestrictionSeq& q, double eps, double delta) {
  const auto m = static_cast<std::uint64_t>(std::ceil(32.0 / eps * std::log(2.0 / delta)));
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < m; ++i) ones += o.query(q.apply(Assignment::uniform(o.num_vars(), o.rng())));
  const double mean = static_cast<double>(ones) / static_cast<double>(m);
  if (mean < eps / 8) return ProbVerdict::NearZero;
  if (mean > 1.0 - eps / 8) return ProbVerdict::NearOne;
  return ProbVerdict::Middle;
}

struct WalkStep {
  Var var = 0;
  bool xi = false;
  std::size_t h_before = 0;
  std::size_t h_after = 0;
};

namespace detail {

/// Smallest-index variable occurring in at least a 1/(2r) fraction of the
/// monomials of H (the constant monomial counts towards |H|).
inline std::optional<Var> frequent_variable(const std::vector<Monomial>& h, std::size_t r) {
  if (h.empty()) return std::nullopt;
  std::vector<std::size_t> count;
  for (const auto& m : h)
    for (Var v : m) {
      if (v >= count.size()) count.resize(v + 1, 0);
      ++count[v];
    }
  for (Var v = 0; v < count.size(); ++v)
    if (2 * r * count[v] >= h.size()) return v;
  return std::nullopt;
}

inline std::vector<Monomial> minus(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

struct WalkOutcome {
  enum class End { Constant, NoFrequentVar, CapReached } end = End::Constant;
  RestrictionSeq q;
  std::vector<WalkStep> steps;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

/// One random walk of the H/L process from (F, G). Every step checks
/// H and L disjoint, H + L = (F + G) restricted by q, and the shrinkage of H
/// (by a 1 - 1/(2r) factor when xi = 0, never growing when xi = 1).
inline WalkOutcome size_walk(const F2Polynomial& F, const F2Polynomial& G, std::size_t r, std::size_t cap,
                             Rng& rng, bool check) {
  WalkOutcome w;
  std::vector<Monomial> H = F.monomials();
  std::vector<Monomial> L = G.monomials();
  const F2Polynomial FG = F + G;
  std::size_t j = 0;
  while (!sum_of(H).is_constant() && j < cap) {
    ++j;
    auto v = detail::frequent_variable(H, r);
    if (!v) {
      w.end = WalkOutcome::End::NoFrequentVar;
      return w;
    }
    const bool xi = rng.bit();
    w.q.push(*v, xi);
    const auto hr = sum_of(H).restrict(*v, xi).monomials();
    const auto lr = sum_of(L).restrict(*v, xi).monomials();
    auto h_next = detail::minus(hr, lr);
    auto l_next = detail::minus(lr, hr);
    if (check) {
      std::vector<Monomial> both;
      std::set_intersection(h_next.begin(), h_next.end(), l_next.begin(), l_next.end(), std::back_inserter(both));
      w.checks += 3;
      w.violations += !both.empty();
      w.violations += sum_of(h_next) + sum_of(l_next) != FG.restrict(w.q);
      const bool shrunk = xi ? h_next.size() <= H.size()
                             : 2 * r * h_next.size() <= (2 * r - 1) * H.size();
      w.violations += !shrunk;
    }
    w.steps.push_back({*v, xi, H.size(), h_next.size()});
    H = std::move(h_next);
    L = std::move(l_next);
  }
  if (j == cap) w.end = WalkOutcome::End::CapReached;
  return w;
}

/// Uniform-distribution size tester. Works on T(x) = f(x+a); learns the
/// low-degree part of T on the variables found by the junta projection,
/// then runs the H/L random walks and checks every walk's end for being
/// close to constant.
inline TesterReport test_size_uniform(Oracle& o, const SizeTesterParams& p) {
  p.validate();
  const std::size_t n = o.num_vars();
  const std::size_t r = p.r();
  const std::size_t r1 = p.r_prime();
  const std::size_t cap = p.cap();
  const std::size_t repeats = p.repeats();

  ShiftedOracle T(o, Assignment::uniform(n, o.rng()));

  auto proj = reduce::find_close(T, p.s, p.eps, p.delta / 3, p.find_close_c);
  if (!proj.ok()) return TesterReport::reject("learning failed: more than " + std::to_string(p.s) + " relevant variables");
  const auto vars = proj.relevant_sorted();
  const F2Polynomial learned = algebra::interpolate_poly(T, vars);
  const std::size_t width = p.reduced_constants ? std::min(16 * r1, vars.size()) : 16 * r1;
  if (learned.degree() > width) return TesterReport::reject("learning failed: degree above " + std::to_string(width));

  const F2Polynomial F = learned.part(SizeInterval::closed(0, r1));
  const F2Polynomial G = learned.part(SizeInterval::left_open(r1, 16 * r1));

  TesterReport rep = TesterReport::accept();
  const double walk_delta = p.delta / 3 / static_cast<double>(repeats);
  for (std::size_t i = 0; i < repeats; ++i) {
    auto w = size_walk(F, G, r, cap, T.rng(), p.check_invariants);
    rep.checks += w.checks;
    rep.violations += w.violations;
    const std::size_t depth = w.steps.size();
    if (w.end == WalkOutcome::End::NoFrequentVar) {
      rep.walks.push_back({depth, "no_frequent_var"});
      rep.decision = Decision::Reject;
      rep.reason = "no variable in a 1/(2r) fraction of H";
      return rep;
    }
    if (w.end == WalkOutcome::End::CapReached) {
      rep.walks.push_back({depth, "cap"});
      rep.decision = Decision::Reject;
      rep.reason = "walk reached the cap " + std::to_string(cap);
      return rep;
    }
    const auto verdict = estimate_prob_one(T, w.q, p.eps, walk_delta);
    rep.walks.push_back({depth, to_string(verdict)});
    if (verdict == ProbVerdict::Middle) {
      rep.decision = Decision::Reject;
      rep.reason = "restriction is far from constant";
      return rep;
    }
  }
  rep.reason = std::to_string(repeats) + " walks ended near a constant";
  return rep;
}

}  // namespace dtlab::testers
