#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dtlab/learners/consis.hpp"
#include "dtlab/learners/outcome.hpp"
#include "dtlab/learners/pac.hpp"

namespace dtlab::learn {

/// Output-size bound of the root-guessing recursion:
/// S(n, s) = S(n-1, floor(s/2)) + S(n-1, s), S(., 1) = S(0, .) = 1.
inline double eh89_size_bound(std::size_t n, std::size_t s) {
  std::map<std::pair<std::size_t, std::size_t>, double> memo;
  auto rec = [&](auto&& self, std::size_t nn, std::size_t ss) -> double {
    if (ss <= 1 || nn == 0) return 1.0;
    auto key = std::make_pair(nn, ss);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const double v = self(self, nn - 1, ss / 2) + self(self, nn - 1, ss);
    memo.emplace(key, v);
    return v;
  };
  return rec(rec, n, s);
}

namespace detail {

class Eh89Solver {
public:
  Eh89Solver(std::vector<Assignment> pts, std::vector<bool> labels, std::size_t n)
      : pts_(std::move(pts)), labels_(std::move(labels)), n_(n) {}

  std::optional<DecisionTree> solve(std::size_t s) {
    std::vector<std::uint32_t> idx(pts_.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return rec(idx, {}, s);
  }

private:
  using Key = std::pair<std::vector<std::uint32_t>, std::size_t>;

  // A size-s tree has a subtree of size <= s/2 below its root. Guess the root
  // variable and that side; the other side keeps the full budget but loses a
  // variable, which bounds the recursion depth by n.
  std::optional<DecisionTree> rec(const std::vector<std::uint32_t>& idx, std::vector<std::uint32_t> fixed,
                                  std::size_t budget) {
    bool has0 = false, has1 = false;
    for (auto i : idx) (labels_[i] ? has1 : has0) = true;
    if (!(has0 && has1)) return DecisionTree::leaf(has1);
    if (budget <= 1) return std::nullopt;

    std::sort(fixed.begin(), fixed.end());
    Key key{fixed, budget};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<DecisionTree> result;
    for (Var v = 0; v < n_ && !result; ++v) {
      if (std::binary_search(fixed.begin(), fixed.end(), (v << 1)) ||
          std::binary_search(fixed.begin(), fixed.end(), (v << 1) | 1U))
        continue;
      std::vector<std::uint32_t> side[2];
      for (auto i : idx) side[pts_[i].get(v) ? 1 : 0].push_back(i);
      if (side[0].empty() || side[1].empty()) continue;
      for (int small = 0; small < 2 && !result; ++small) {
        auto fs = fixed;
        fs.push_back((v << 1) | static_cast<std::uint32_t>(small));
        auto t_small = rec(side[small], fs, budget / 2);
        if (!t_small) continue;
        auto fb = fixed;
        fb.push_back((v << 1) | static_cast<std::uint32_t>(1 - small));
        auto t_big = rec(side[1 - small], fb, budget);
        if (!t_big) continue;
        result = small == 0 ? DecisionTree::branch(v, *t_small, *t_big) : DecisionTree::branch(v, *t_big, *t_small);
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::vector<Assignment> pts_;
  std::vector<bool> labels_;
  std::size_t n_;
  std::map<Key, std::optional<DecisionTree>> memo_;
};

}  // namespace detail

/// Non-proper consistent learner: returns a tree of size at most
/// eh89_size_bound(n, s) consistent with S whenever some size-s tree is,
/// and nullopt otherwise.
inline std::optional<DecisionTree> learn_nonproper_eh89(const Sample& s, std::size_t n, std::size_t size) {
  auto clean = detail::dedupe(s);
  if (!clean) return std::nullopt;
  detail::Eh89Solver solver(std::move(clean->first), std::move(clean->second), n);
  return solver.solve(size);
}

/// PAC wrapper: logH = S(n, s) * log2(8n) bits.
inline LearnOutcome learn_nonproper(Oracle& o, const LearnParams& p) {
  const std::size_t n = o.num_vars();
  const double bits = eh89_size_bound(n, p.s) * std::log2(8.0 * static_cast<double>(std::max<std::size_t>(n, 1)));
  const auto m = occam_sample_size(bits, p.eps, p.delta, p.occam_C);
  const Sample s = draw_sample(o, m);
  auto t = learn_nonproper_eh89(s, n, p.s);
  if (!t) return LearnOutcome::failure(LearnStatus::NotInClass, "no consistent size-s tree", m);
  return LearnOutcome::success(std::move(*t), m);
}

inline LearnOutcome learn_nonproper_reduced(Oracle& o, const LearnParams& p) {
  return reduce::reduce_learner(o, p.s, p.eps, p.delta, [&](Oracle& proj, double eps, double delta) {
    LearnParams q = p;
    q.eps = eps;
    q.delta = delta;
    return learn_nonproper(proj, q);
  });
}

namespace detail {

inline std::optional<DecisionTree> exhaustive_find(const std::vector<Assignment>& pts, const std::vector<bool>& labels,
                                                   const std::vector<std::uint32_t>& idx, std::size_t n,
                                                   std::vector<bool>& used, std::size_t size) {
  if (size == 1) {
    bool has0 = false, has1 = false;
    for (auto i : idx) (labels[i] ? has1 : has0) = true;
    if (!has1) return DecisionTree::leaf(false);
    if (!has0) return DecisionTree::leaf(true);
    return std::nullopt;
  }
  for (Var v = 0; v < n; ++v) {
    if (used[v]) continue;
    std::vector<std::uint32_t> lo, hi;
    for (auto i : idx) (pts[i].get(v) ? hi : lo).push_back(i);
    used[v] = true;
    for (std::size_t a = 1; a < size; ++a) {
      auto left = exhaustive_find(pts, labels, lo, n, used, a);
      if (!left) continue;
      auto right = exhaustive_find(pts, labels, hi, n, used, size - a);
      if (!right) continue;
      used[v] = false;
      return DecisionTree::branch(v, *left, *right);
    }
    used[v] = false;
  }
  return std::nullopt;
}

}  // namespace detail

/// Enumerates trees by increasing size (shape, then variables, then leaf
/// labels) and returns the first one consistent with S, up to size s.
inline std::optional<DecisionTree> exhaustive_learn(const Sample& s, std::size_t n, std::size_t size) {
  auto clean = detail::dedupe(s);
  if (!clean) return std::nullopt;
  std::vector<std::uint32_t> idx(clean->first.size());
  for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<bool> used(n, false);
  for (std::size_t k = 1; k <= size; ++k)
    if (auto t = detail::exhaustive_find(clean->first, clean->second, idx, n, used, k)) return t;
  return std::nullopt;
}

}  // namespace dtlab::learn
