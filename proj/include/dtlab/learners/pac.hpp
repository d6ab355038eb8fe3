#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtlab/learners/consis.hpp"
#include "dtlab/learners/outcome.hpp"
#include "dtlab/reductions.hpp"

namespace dtlab::learn {

/// ceil((C/eps) * (logH_bits * ln 2 + ln(1/delta))).
inline std::uint64_t occam_sample_size(double logH_bits, double eps, double delta, double C = 4.0) {
  if (!(eps > 0.0) || !(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("bad eps/delta");
  return static_cast<std::uint64_t>(std::ceil(C / eps * (logH_bits * std::log(2.0) + std::log(1.0 / delta))));
}

/// log2 of the bound |DT^s| <= (8n)^s on n variables: at most 4^s shapes,
/// n^(s-1) ways to label internal nodes and 2^s leaf labelings.
inline double log2_tree_class(std::size_t n, std::size_t s) {
  return static_cast<double>(s) * std::log2(8.0 * static_cast<double>(std::max<std::size_t>(n, 1)));
}

/// Occam learner for DT_d^s: consis on ceil occam_sample_size examples.
inline LearnOutcome learn_dtds_distfree(Oracle& o, const LearnParams& p) {
  const std::size_t n = o.num_vars();
  const auto m = occam_sample_size(log2_tree_class(n, p.s), p.eps, p.delta, p.occam_C);
  const Sample s = draw_sample(o, m);
  auto t = consis(s, n, p.d, Objective::MinSize);
  if (!t) return LearnOutcome::failure(LearnStatus::NotInClass, "no consistent depth-d tree", m);
  if (t->size() > p.s) return LearnOutcome::failure(LearnStatus::NotInClass, "smallest consistent tree exceeds s", m);
  return LearnOutcome::success(std::move(*t), m);
}

/// The Occam learner behind the junta projection (k = s).
inline LearnOutcome learn_dtds_reduced(Oracle& o, const LearnParams& p) {
  return reduce::reduce_learner(o, p.s, p.eps, p.delta, [&](Oracle& proj, double eps, double delta) {
    LearnParams q = p;
    q.eps = eps;
    q.delta = delta;
    return learn_dtds_distfree(proj, q);
  });
}

/// Exact learner: two different depth-d trees disagree on at least 2^-d of
/// the cube, so learning at eps = 2^-(d+2) under uniform examples (drawn as
/// black-box queries) returns f itself with probability 1 - delta.
inline LearnOutcome exact_learn_dtds(Oracle& o, const LearnParams& p) {
  UniformExampleOracle u(o);
  LearnParams q = p;
  q.eps = std::ldexp(1.0, -static_cast<int>(p.d + 2));
  return learn_dtds_reduced(u, q);
}

/// Generic exact wrapper: any PAC learner run at eps = 2^-(d+1) under
/// uniform examples.
template <class Learner>
LearnOutcome exact_from_pac(Oracle& o, const LearnParams& p, Learner&& learner) {
  UniformExampleOracle u(o);
  LearnParams q = p;
  q.eps = std::ldexp(1.0, -static_cast<int>(p.d + 1));
  return learner(static_cast<Oracle&>(u), q);
}

/// Uniform-distribution learner for DT^s: a consistent tree of depth
/// 2*ceil(log2 m) on m examples is eps/10-close with probability 3/4;
/// ceil(log2(2/delta)) repetitions and a selection round on
/// ceil(12/eps * ln(2K/delta)) examples keep the best candidate.
inline LearnOutcome learn_dts_uniform(Oracle& o, const LearnParams& p) {
  const std::size_t n = o.num_vars();
  const auto m = occam_sample_size(log2_tree_class(n, p.s), p.eps / 10, 0.25, p.occam_C);
  const auto depth = std::min<std::size_t>(n, 2 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(std::max<std::uint64_t>(m, 2))))));
  const auto reps = static_cast<std::size_t>(std::ceil(std::log2(2.0 / p.delta)));
  std::vector<DecisionTree> candidates;
  std::size_t drawn = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    const Sample s = draw_sample(o, m);
    drawn += m;
    auto t = consis(s, n, depth, Objective::MinSize);
    if (t && t->size() <= p.s) candidates.push_back(std::move(*t));
  }
  if (candidates.empty()) return LearnOutcome::failure(LearnStatus::NotInClass, "no consistent candidate", drawn);
  if (candidates.size() == 1) return LearnOutcome::success(std::move(candidates.front()), drawn);
  const double K = static_cast<double>(candidates.size());
  const auto sel = static_cast<std::size_t>(std::ceil(12.0 / p.eps * std::log(2.0 * K / p.delta)));
  std::vector<std::size_t> errors(candidates.size(), 0);
  for (std::size_t i = 0; i < sel; ++i) {
    auto e = o.example();
    for (std::size_t c = 0; c < candidates.size(); ++c) errors[c] += candidates[c].eval(e.x) != e.y;
  }
  drawn += sel;
  const auto best = static_cast<std::size_t>(std::min_element(errors.begin(), errors.end()) - errors.begin());
  return LearnOutcome::success(std::move(candidates[best]), drawn);
}

/// Proper learner for DT^s without a depth bound (depth capped at s-1,
/// which every size-s tree satisfies).
inline LearnOutcome learn_dts_distfree(Oracle& o, const LearnParams& p) {
  LearnParams q = p;
  q.d = p.s > 0 ? p.s - 1 : 0;
  q.d = std::min(q.d, o.num_vars());
  return learn_dtds_distfree(o, q);
}

inline LearnOutcome learn_dts_reduced(Oracle& o, const LearnParams& p) {
  return reduce::reduce_learner(o, p.s, p.eps, p.delta, [&](Oracle& proj, double eps, double delta) {
    LearnParams q = p;
    q.eps = eps;
    q.delta = delta;
    return learn_dts_distfree(proj, q);
  });
}

inline LearnOutcome learn_dts_uniform_reduced(Oracle& o, const LearnParams& p) {
  return reduce::reduce_learner(o, p.s, p.eps, p.delta, [&](Oracle& proj, double eps, double delta) {
    LearnParams q = p;
    q.eps = eps;
    q.delta = delta;
    return learn_dts_uniform(proj, q);
  });
}

}  // namespace dtlab::learn
