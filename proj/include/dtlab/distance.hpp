#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "dtlab/distribution.hpp"
#include "dtlab/function.hpp"

namespace dtlab {

class EnumerationCapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Pr_D[f != g], computed exactly by enumerating {0,1}^n (uniform, n <= cap)
/// or the support (explicit).
inline double distance_exact(const BooleanFunction& f, const BooleanFunction& g,
                             const Distribution& dist, std::size_t cap = 24) {
  if (f.num_vars() != g.num_vars()) throw std::invalid_argument("functions differ in arity");
  const std::size_t n = f.num_vars();
  switch (dist.kind()) {
    case Distribution::Kind::Explicit: {
      double p = 0.0;
      for (const auto& [x, w] : dist.support())
        if (f.eval(x) != g.eval(x)) p += w;
      return p;
    }
    case Distribution::Kind::Uniform: {
      if (n > cap) throw EnumerationCapExceeded("exact distance: n exceeds the enumeration cap");
      const TruthTable a = f.to_truth_table();
      const TruthTable b = g.to_truth_table();
      std::uint64_t diff = 0;
      for (std::uint64_t i = 0; i < a.num_points(); ++i) diff += a.get(i) != b.get(i);
      return static_cast<double>(diff) / static_cast<double>(a.num_points());
    }
    case Distribution::Kind::Sampler:
      break;
  }
  throw EnumerationCapExceeded("exact distance needs a uniform or explicit distribution");
}

/// Empirical disagreement over m independent draws.
inline double distance_sampled(const BooleanFunction& f, const BooleanFunction& g,
                               const Distribution& dist, std::size_t m, std::uint64_t seed) {
  if (f.num_vars() != g.num_vars()) throw std::invalid_argument("functions differ in arity");
  if (m == 0) return 0.0;
  Rng rng(seed);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Assignment x = dist.sample(f.num_vars(), rng);
    diff += f.eval(x) != g.eval(x);
  }
  return static_cast<double>(diff) / static_cast<double>(m);
}

}  // namespace dtlab
