#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dtlab/decision_tree.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/rng.hpp"
#include "dtlab/truth_table.hpp"

namespace dtlab::gen {

/// k distinct variables from [0, n), in random order.
inline std::vector<Var> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw std::invalid_argument("subset larger than universe");
  std::vector<Var> all(n);
  for (Var v = 0; v < n; ++v) all[v] = v;
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(k);
  return all;
}

namespace detail {

inline Var fresh_var(std::size_t n, const std::vector<Var>& path, Rng& rng) {
  for (;;) {
    const auto v = static_cast<Var>(rng.below(n));
    if (std::find(path.begin(), path.end(), v) == path.end()) return v;
  }
}

inline DecisionTree depth_tree(std::size_t n, std::size_t left, double p_split, std::vector<Var>& path, Rng& rng,
                               bool force) {
  if (left == 0 || path.size() >= n || (!force && !rng.bernoulli(p_split))) return DecisionTree::leaf(rng.bit());
  const Var v = fresh_var(n, path, rng);
  path.push_back(v);
  auto lo = depth_tree(n, left - 1, p_split, path, rng, false);
  auto hi = depth_tree(n, left - 1, p_split, path, rng, false);
  path.pop_back();
  return DecisionTree::branch(v, lo, hi);
}

}  // namespace detail

/// Random tree of depth at most d: the root always splits, deeper nodes split
/// with probability p_split, and no variable repeats along a path.
inline DecisionTree random_depth_tree(std::size_t n, std::size_t d, Rng& rng, double p_split = 0.75) {
  std::vector<Var> path;
  return detail::depth_tree(n, d, p_split, path, rng, true);
}

/// Random tree with exactly s leaves: repeatedly splits a uniformly chosen
/// leaf on a variable not already on its path.
inline DecisionTree random_size_tree(std::size_t n, std::size_t s, Rng& rng) {
  if (s == 0) throw std::invalid_argument("size must be positive");
  struct Node {
    bool leaf = true;
    Var var = 0;
    int lo = -1, hi = -1, parent = -1;
  };
  std::vector<Node> nodes(1);
  std::vector<int> leaves{0};
  auto path_of = [&](int i) {
    std::vector<Var> p;
    for (int cur = nodes[i].parent; cur >= 0; cur = nodes[cur].parent) p.push_back(nodes[cur].var);
    return p;
  };
  std::size_t attempts = 0;
  while (leaves.size() < s) {
    if (++attempts > 64 * s + 1024) throw std::invalid_argument("not enough variables for the requested size");
    const std::size_t pick = rng.below(leaves.size());
    const int i = leaves[pick];
    const auto path = path_of(i);
    if (path.size() >= n) continue;
    nodes[i].leaf = false;
    nodes[i].var = detail::fresh_var(n, path, rng);
    nodes[i].lo = static_cast<int>(nodes.size());
    nodes.push_back({true, 0, -1, -1, i});
    nodes[i].hi = static_cast<int>(nodes.size());
    nodes.push_back({true, 0, -1, -1, i});
    leaves[pick] = nodes[i].lo;
    leaves.push_back(nodes[i].hi);
  }
  std::vector<DecisionTree::Node> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out[i].is_leaf = nodes[i].leaf;
    if (nodes[i].leaf) {
      out[i].value = rng.bit();
    } else {
      out[i].var = nodes[i].var;
      out[i].lo = static_cast<std::uint32_t>(nodes[i].lo);
      out[i].hi = static_cast<std::uint32_t>(nodes[i].hi);
    }
  }
  return DecisionTree(std::move(out), 0);
}

/// Sum of the given variables.
inline F2Polynomial parity_poly(const std::vector<Var>& vars) {
  std::vector<Monomial> ms;
  for (Var v : vars) ms.push_back(Monomial{v});
  return F2Polynomial(std::move(ms));
}

inline F2Polynomial parity_poly(std::size_t k) {
  std::vector<Var> vars(k);
  for (Var v = 0; v < k; ++v) vars[v] = v;
  return parity_poly(vars);
}

/// Parity as a complete tree over vars[0..k).
inline DecisionTree parity_tree(const std::vector<Var>& vars, std::size_t i = 0, bool flip = false) {
  if (i == vars.size()) return DecisionTree::leaf(flip);
  return DecisionTree::branch(vars[i], parity_tree(vars, i + 1, flip), parity_tree(vars, i + 1, !flip));
}

inline TruthTable random_truth_table(std::size_t n, Rng& rng) {
  TruthTable t(n);
  for (std::uint64_t i = 0; i < t.num_points(); ++i) t.set(i, rng.bit());
  return t;
}

/// `terms` random monomials of size 1..degree over the universe, plus a
/// random constant term. Coinciding monomials cancel.
inline F2Polynomial random_poly(const std::vector<Var>& universe, std::size_t degree, std::size_t terms, Rng& rng) {
  if (universe.empty()) return F2Polynomial::constant(rng.bit());
  degree = std::min(degree, universe.size());
  std::vector<Monomial> ms;
  if (rng.bit()) ms.emplace_back();
  for (std::size_t t = 0; t < terms && degree > 0; ++t) {
    const std::size_t size = 1 + rng.below(degree);
    std::vector<Var> vars;
    for (std::size_t idx : random_subset(universe.size(), size, rng)) vars.push_back(universe[idx]);
    ms.emplace_back(std::move(vars));
  }
  return F2Polynomial(std::move(ms));
}

/// Renames variable i of p to vars[i].
inline F2Polynomial embed(const F2Polynomial& p, const std::vector<Var>& vars) {
  std::vector<Monomial> ms;
  for (const auto& m : p.monomials()) {
    std::vector<Var> mapped;
    for (Var v : m) mapped.push_back(vars.at(v));
    ms.emplace_back(std::move(mapped));
  }
  return F2Polynomial(std::move(ms));
}

}  // namespace dtlab::gen
