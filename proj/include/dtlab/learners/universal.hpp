#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dtlab/algebra.hpp"
#include "dtlab/learners/consis.hpp"
#include "dtlab/learners/outcome.hpp"

namespace dtlab::learn {

struct UniversalSet {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<Assignment> points;
  bool verified = false;
};

/// Checks that every d-subset of coordinates sees all 2^d patterns.
inline bool verify_universal(const std::vector<Assignment>& points, std::size_t n, std::size_t d) {
  if (d > n) return false;
  if (d > 20) throw std::length_error("universal-set verification limited to d <= 20");
  double work = std::ldexp(1.0, static_cast<int>(d));
  for (std::size_t i = 0; i < d; ++i) work *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  if (work > 1e9) throw std::length_error("universal-set verification too large");

  const std::size_t patterns = std::size_t{1} << d;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<bool> hit(patterns);
  for (;;) {
    std::fill(hit.begin(), hit.end(), false);
    std::size_t seen = 0;
    for (const auto& a : points) {
      std::size_t pat = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (a.get(idx[j])) pat |= std::size_t{1} << j;
      if (!hit[pat]) {
        hit[pat] = true;
        if (++seen == patterns) break;
      }
    }
    if (seen != patterns) return false;
    std::size_t pos = d;
    while (pos > 0 && idx[pos - 1] == n - d + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

/// m = ceil(2^d (d ln n + ln(1/delta))) uniform points cover every pattern
/// with probability 1 - delta. When d >= n the whole cube is returned.
inline UniversalSet gen_universal_set(std::size_t n, std::size_t d, double delta, bool verify, Rng& rng) {
  UniversalSet u{n, d, {}, false};
  if (d >= n) {
    if (n > 24) throw std::length_error("cube too large");
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) u.points.push_back(Assignment::from_index(n, i));
    u.verified = true;
    return u;
  }
  const double m = std::ldexp(1.0, static_cast<int>(d)) *
                   (static_cast<double>(d) * std::log(static_cast<double>(n)) + std::log(1.0 / delta));
  const auto count = static_cast<std::uint64_t>(std::ceil(m));
  for (std::uint64_t i = 0; i < count; ++i) u.points.push_back(Assignment::uniform(n, rng));
  if (verify) u.verified = verify_universal(u.points, n, d);
  return u;
}

/// Exact learner for DT_d^s from a verified (n, 2d)-universal set: two
/// distinct depth-d trees differ on a point of it, so any consistent
/// depth-d tree is f. Relevant variables only narrow the search.
inline LearnOutcome exact_learn_universal(Oracle& o, const LearnParams& p, std::size_t max_attempts = 16) {
  const std::size_t n = o.num_vars();
  const std::size_t width = std::min(2 * p.d, n);
  UniversalSet u;
  for (std::size_t attempt = 0; attempt < max_attempts && !u.verified; ++attempt)
    u = gen_universal_set(n, width, p.delta / 2, true, o.rng());
  if (!u.verified) return LearnOutcome::failure(LearnStatus::NotInClass, "could not build a verified universal set");

  const std::size_t cap = std::size_t{1} << std::min<std::size_t>(p.d, 30);
  auto rel = algebra::find_relevant_vars(o, {p.d, p.delta / 2}, cap);
  if (rel.too_many) return LearnOutcome::failure(LearnStatus::NotInClass, "more than 2^d relevant variables");

  Sample s;
  s.reserve(u.points.size());
  for (const auto& a : u.points) s.push_back({a, o.query(a)});
  auto t = consis(s, n, p.d, Objective::MinSize, &rel.vars);
  if (!t) return LearnOutcome::failure(LearnStatus::NotInClass, "no consistent depth-d tree");
  return LearnOutcome::success(std::move(*t));
}

}  // namespace dtlab::learn
