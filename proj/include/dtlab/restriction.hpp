#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dtlab/assignment.hpp"

namespace dtlab {

/// Ordered substitution list (x_{i1} <- b1, ..., x_{ij} <- bj); each variable
/// appears at most once.
class RestrictionSeq {
public:
  struct Pair {
    Var var;
    bool value;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  RestrictionSeq() = default;
  RestrictionSeq(std::initializer_list<Pair> pairs) {
    for (const auto& p : pairs) push(p.var, p.value);
  }

  void push(Var v, bool value) {
    if (contains(v)) throw std::invalid_argument("variable restricted twice");
    pairs_.push_back({v, value});
  }

  [[nodiscard]] bool contains(Var v) const noexcept {
    return std::any_of(pairs_.begin(), pairs_.end(), [v](const Pair& p) { return p.var == v; });
  }

  [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }
  [[nodiscard]] bool empty() const noexcept { return pairs_.empty(); }
  [[nodiscard]] const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  [[nodiscard]] auto begin() const noexcept { return pairs_.begin(); }
  [[nodiscard]] auto end() const noexcept { return pairs_.end(); }

  /// x with the restricted coordinates overwritten.
  [[nodiscard]] Assignment apply(Assignment x) const {
    for (const auto& p : pairs_) x.set(p.var, p.value);
    return x;
  }

  [[nodiscard]] std::vector<Var> vars() const {
    std::vector<Var> v;
    v.reserve(pairs_.size());
    for (const auto& p : pairs_) v.push_back(p.var);
    return v;
  }

  friend bool operator==(const RestrictionSeq&, const RestrictionSeq&) = default;

private:
  std::vector<Pair> pairs_;
};

}  // namespace dtlab
