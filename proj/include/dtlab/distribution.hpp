#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtlab/assignment.hpp"
#include "dtlab/rng.hpp"

namespace dtlab {

/// Example distribution over {0,1}^n.
class Distribution {
public:
  enum class Kind { Uniform, Explicit, Sampler };
  using SamplerFn = std::function<Assignment(std::size_t n, Rng&)>;

  static Distribution uniform() { return Distribution(Kind::Uniform); }

  /// Finite support; probabilities must be non-negative and sum to 1 within 1e-12.
  static Distribution explicit_points(std::vector<std::pair<Assignment, double>> support) {
    if (support.empty()) throw std::invalid_argument("explicit distribution needs a support");
    Distribution d(Kind::Explicit);
    double total = 0.0;
    const std::size_t n = support.front().first.size();
    for (const auto& [x, p] : support) {
      if (x.size() != n) throw std::invalid_argument("support points differ in length");
      if (!(p >= 0.0)) throw std::invalid_argument("negative probability");
      total += p;
      d.cumulative_.push_back(total);
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("probabilities do not sum to 1");
    d.support_ = std::move(support);
    return d;
  }

  static Distribution sampler(SamplerFn fn, std::string name = "sampler") {
    Distribution d(Kind::Sampler);
    d.sampler_ = std::move(fn);
    d.name_ = std::move(name);
    return d;
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<std::pair<Assignment, double>>& support() const noexcept { return support_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  [[nodiscard]] Assignment sample(std::size_t n, Rng& rng) const {
    switch (kind_) {
      case Kind::Uniform:
        return Assignment::uniform(n, rng);
      case Kind::Explicit: {
        if (support_.front().first.size() != n)
          throw std::invalid_argument("distribution arity differs from function arity");
        const double u = rng.uniform01() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        const auto idx = std::min(static_cast<std::size_t>(it - cumulative_.begin()), support_.size() - 1);
        return support_[idx].first;
      }
      case Kind::Sampler:
        return sampler_(n, rng);
    }
    throw std::logic_error("unknown distribution kind");
  }

private:
  explicit Distribution(Kind k) : kind_(k), name_(k == Kind::Uniform ? "uniform" : "explicit") {}

  Kind kind_;
  std::string name_;
  std::vector<std::pair<Assignment, double>> support_;
  std::vector<double> cumulative_;
  SamplerFn sampler_;
};

}  // namespace dtlab
