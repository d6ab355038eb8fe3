#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtlab/decision_tree.hpp"
#include "dtlab/learners/outcome.hpp"

namespace dtlab::learn {

enum class Objective { MinSize, MinDepth };

struct ConsisStats {
  std::size_t cells = 0;  // distinct non-empty restriction cells solved
};

namespace detail {

/// Memoized recursion over the cells S_{|q} of a sample. A cell is keyed by
/// its restriction sorted by variable; the remaining depth is d - |q|, so
/// the key alone determines the subproblem.
class ConsisSolver {
public:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

  ConsisSolver(std::vector<Assignment> pts, std::vector<bool> labels, std::size_t d, std::vector<Var> vars)
      : pts_(std::move(pts)), labels_(std::move(labels)), d_(d), vars_(std::move(vars)) {}

  std::optional<DecisionTree> solve() {
    std::vector<std::uint32_t> idx(pts_.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::uint32_t> key;
    if (cost(idx, key) == kInf) return std::nullopt;
    return build(idx, key);
  }

  [[nodiscard]] std::size_t cells() const noexcept { return memo_.size(); }

private:
  struct Entry {
    std::uint64_t cost;
    bool leaf;
    bool value;
    Var var;
  };

  static std::string encode(const std::vector<std::uint32_t>& key) {
    return {reinterpret_cast<const char*>(key.data()), key.size() * sizeof(std::uint32_t)};
  }

  static std::vector<std::uint32_t> extend(const std::vector<std::uint32_t>& key, Var v, bool b) {
    std::vector<std::uint32_t> k = key;
    const std::uint32_t code = (v << 1) | (b ? 1U : 0U);
    k.insert(std::lower_bound(k.begin(), k.end(), code), code);
    return k;
  }

  static bool fixed(const std::vector<std::uint32_t>& key, Var v) {
    auto it = std::lower_bound(key.begin(), key.end(), v << 1);
    return it != key.end() && (*it >> 1) == v;
  }

  const Entry& lookup(const std::vector<std::uint32_t>& idx, const std::vector<std::uint32_t>& key) {
    const std::string k = encode(key);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;

    Entry e{kInf, false, false, 0};
    bool has0 = false, has1 = false;
    for (auto i : idx) (labels_[i] ? has1 : has0) = true;
    if (!(has0 && has1)) {
      e = {1, true, has1, 0};
    } else if (key.size() < d_) {
      std::vector<std::uint32_t> lo, hi;
      for (Var v : vars_) {
        if (fixed(key, v)) continue;
        lo.clear();
        hi.clear();
        for (auto i : idx) (pts_[i].get(v) ? hi : lo).push_back(i);
        if (lo.empty() || hi.empty()) continue;  // splitting here cannot help
        const auto c0 = cost(lo, extend(key, v, false));
        if (c0 == kInf || c0 + 1 >= e.cost) continue;
        const auto c1 = cost(hi, extend(key, v, true));
        if (c1 == kInf) continue;
        if (c0 + c1 < e.cost) e = {c0 + c1, false, false, v};
        if (e.cost == 2) break;  // no non-constant cell does better
      }
    }
    return memo_.emplace(k, e).first->second;
  }

  std::uint64_t cost(const std::vector<std::uint32_t>& idx, const std::vector<std::uint32_t>& key) {
    return lookup(idx, key).cost;
  }

  DecisionTree build(const std::vector<std::uint32_t>& idx, const std::vector<std::uint32_t>& key) {
    const Entry e = lookup(idx, key);
    if (e.leaf) return DecisionTree::leaf(e.value);
    std::vector<std::uint32_t> lo, hi;
    for (auto i : idx) (pts_[i].get(e.var) ? hi : lo).push_back(i);
    return DecisionTree::branch(e.var, build(lo, extend(key, e.var, false)), build(hi, extend(key, e.var, true)));
  }

  std::vector<Assignment> pts_;
  std::vector<bool> labels_;
  std::size_t d_;
  std::vector<Var> vars_;
  std::unordered_map<std::string, Entry> memo_;
};

/// Collapses repeated points; nullopt if some point carries both labels.
inline std::optional<std::pair<std::vector<Assignment>, std::vector<bool>>> dedupe(const Sample& s) {
  std::unordered_map<Assignment, bool> seen;
  std::vector<Assignment> pts;
  std::vector<bool> labels;
  for (const auto& e : s) {
    auto [it, inserted] = seen.emplace(e.x, e.y);
    if (inserted) {
      pts.push_back(e.x);
      labels.push_back(e.y);
    } else if (it->second != e.y) {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(pts), std::move(labels));
}

}  // namespace detail

/// Smallest (MinSize) or shallowest (MinDepth, then smallest) tree of depth
/// at most d that agrees with every pair of S, or nullopt if none exists.
/// `allowed` limits the variables the tree may test (default: all n).
/// Ties go to the smallest variable index.
inline std::optional<DecisionTree> consis(const Sample& s, std::size_t n, std::size_t d, Objective obj,
                                          const std::vector<Var>* allowed = nullptr,
                                          ConsisStats* stats = nullptr) {
  auto clean = detail::dedupe(s);
  if (!clean) return std::nullopt;
  std::vector<Var> vars;
  if (allowed) {
    vars = *allowed;
    std::sort(vars.begin(), vars.end());
  } else {
    for (Var v = 0; v < n; ++v) vars.push_back(v);
  }
  auto run = [&](std::size_t depth) {
    detail::ConsisSolver solver(clean->first, clean->second, depth, vars);
    auto t = solver.solve();
    if (stats) stats->cells += solver.cells();
    return t;
  };
  if (obj == Objective::MinSize) return run(d);
  for (std::size_t j = 0; j <= d; ++j)
    if (auto t = run(j)) return t;
  return std::nullopt;
}

/// True if t labels every pair of s correctly.
inline bool consistent(const DecisionTree& t, const Sample& s) {
  return std::all_of(s.begin(), s.end(), [&](const LabeledExample& e) { return t.eval(e.x) == e.y; });
}

}  // namespace dtlab::learn
