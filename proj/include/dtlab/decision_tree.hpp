#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtlab/assignment.hpp"

namespace dtlab {

/// Binary decision tree stored as a node arena. Internal nodes test a
/// variable and go to `lo` on 0, `hi` on 1.
class DecisionTree {
public:
  struct Node {
    bool is_leaf = true;
    bool value = false;  // leaf label
    Var var = 0;         // internal: tested variable
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
  };

  DecisionTree() : nodes_{Node{}}, root_(0) {}

  /// Validates that every child index is in range and that the node graph
  /// reachable from `root` is acyclic.
  DecisionTree(std::vector<Node> nodes, std::uint32_t root) : nodes_(std::move(nodes)), root_(root) {
    validate();
  }

  static DecisionTree leaf(bool value) {
    DecisionTree t;
    t.nodes_[0].value = value;
    return t;
  }

  static DecisionTree branch(Var v, const DecisionTree& lo, const DecisionTree& hi) {
    DecisionTree t;
    t.nodes_.clear();
    t.nodes_.reserve(lo.nodes_.size() + hi.nodes_.size() + 1);
    const auto lo_root = t.append(lo);
    const auto hi_root = t.append(hi);
    Node n;
    n.is_leaf = false;
    n.var = v;
    n.lo = lo_root;
    n.hi = hi_root;
    t.nodes_.push_back(n);
    t.root_ = static_cast<std::uint32_t>(t.nodes_.size() - 1);
    return t;
  }

  [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::uint32_t root() const noexcept { return root_; }
  [[nodiscard]] const Node& root_node() const noexcept { return nodes_[root_]; }
  [[nodiscard]] bool is_leaf() const noexcept { return nodes_[root_].is_leaf; }

  [[nodiscard]] bool eval(const Assignment& x) const {
    std::uint32_t cur = root_;
    while (!nodes_[cur].is_leaf) {
      const Node& n = nodes_[cur];
      if (n.var >= x.size()) throw MalformedFunction("tree variable out of range");
      cur = x.get(n.var) ? n.hi : n.lo;
    }
    return nodes_[cur].value;
  }

  /// Number of leaves.
  [[nodiscard]] std::size_t size() const { return count(root_).first; }
  /// Longest root-to-leaf edge count.
  [[nodiscard]] std::size_t depth() const { return count(root_).second; }

  [[nodiscard]] std::vector<Var> variables() const {
    std::vector<Var> vs;
    for (const auto& n : reachable())
      if (!nodes_[n].is_leaf) vs.push_back(nodes_[n].var);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  /// One more than the largest tested variable (0 for a leaf).
  [[nodiscard]] std::size_t min_arity() const {
    auto vs = variables();
    return vs.empty() ? 0 : static_cast<std::size_t>(vs.back()) + 1;
  }

  /// Subtree rooted at `node` as a standalone tree.
  [[nodiscard]] DecisionTree subtree(std::uint32_t node) const {
    if (nodes_[node].is_leaf) return leaf(nodes_[node].value);
    return branch(nodes_[node].var, subtree(nodes_[node].lo), subtree(nodes_[node].hi));
  }

  /// Same shape with each variable v replaced by map[v].
  template <class Map>
  [[nodiscard]] DecisionTree relabel(const Map& map) const {
    DecisionTree t = *this;
    for (auto& n : t.nodes_)
      if (!n.is_leaf) n.var = static_cast<Var>(map[n.var]);
    return t;
  }

  /// Compact arena containing only reachable nodes, children before parents.
  [[nodiscard]] DecisionTree compacted() const { return subtree(root_); }

  /// Nested text form, e.g. "(x1 ? 1 : (x2 ? 0 : 1))" with the 1-branch first.
  [[nodiscard]] std::string to_string() const { return render(root_); }

private:
  std::uint32_t append(const DecisionTree& t) {
    const auto off = static_cast<std::uint32_t>(nodes_.size());
    for (Node n : t.nodes_) {
      if (!n.is_leaf) {
        n.lo += off;
        n.hi += off;
      }
      nodes_.push_back(n);
    }
    return t.root_ + off;
  }

  std::pair<std::size_t, std::size_t> count(std::uint32_t node) const {
    const Node& n = nodes_[node];
    if (n.is_leaf) return {1, 0};
    auto [ls, ld] = count(n.lo);
    auto [hs, hd] = count(n.hi);
    return {ls + hs, 1 + std::max(ld, hd)};
  }

  std::vector<std::uint32_t> reachable() const {
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> stack{root_};
    std::vector<bool> seen(nodes_.size(), false);
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      if (seen[cur]) continue;
      seen[cur] = true;
      out.push_back(cur);
      if (!nodes_[cur].is_leaf) {
        stack.push_back(nodes_[cur].lo);
        stack.push_back(nodes_[cur].hi);
      }
    }
    return out;
  }

  void validate() const {
    if (root_ >= nodes_.size()) throw MalformedFunction("tree root out of range");
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<std::uint8_t> state(nodes_.size(), 0);
    std::vector<std::pair<std::uint32_t, int>> stack{{root_, 0}};
    while (!stack.empty()) {
      auto& [cur, phase] = stack.back();
      const Node& n = nodes_[cur];
      if (phase == 0) {
        if (state[cur] == 1) throw MalformedFunction("tree contains a cycle");
        if (state[cur] == 2 || n.is_leaf) {
          state[cur] = 2;
          stack.pop_back();
          continue;
        }
        if (n.lo >= nodes_.size() || n.hi >= nodes_.size())
          throw MalformedFunction("tree child index out of range");
        state[cur] = 1;
        phase = 1;
        stack.push_back({n.lo, 0});
      } else if (phase == 1) {
        phase = 2;
        stack.push_back({n.hi, 0});
      } else {
        state[cur] = 2;
        stack.pop_back();
      }
    }
  }

  std::string render(std::uint32_t node) const {
    const Node& n = nodes_[node];
    if (n.is_leaf) return n.value ? "1" : "0";
    return "(x" + std::to_string(n.var + 1) + " ? " + render(n.hi) + " : " + render(n.lo) + ")";
  }

  std::vector<Node> nodes_;
  std::uint32_t root_;
};

}  // namespace dtlab
