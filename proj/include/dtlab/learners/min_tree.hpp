#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dtlab/decision_tree.hpp"
#include "dtlab/restriction.hpp"
#include "dtlab/truth_table.hpp"

namespace dtlab::learn {

/// Exact optimisation over all 3^n subcubes of a truth table. A subcube is
/// indexed in base 3: digit i is 0 or 1 when x_{i+1} is fixed to that value
/// and 2 when it is free. Both children of a free digit have smaller
/// indices, so one ascending pass fills every table.
class SubcubeTable {
public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr std::uint8_t kMixed = 2;

  explicit SubcubeTable(const TruthTable& tt) : n_(tt.num_vars()) {
    if (n_ > kMaxVars) throw std::length_error("subcube DP limited to 16 variables");
    pow3_.resize(n_ + 1, 1);
    for (std::size_t i = 1; i <= n_; ++i) pow3_[i] = pow3_[i - 1] * 3;
    const std::uint64_t cells = pow3_[n_];
    value_.assign(cells, 0);
    size_.assign(cells, 1);
    depth_.assign(cells, 0);

    std::vector<std::uint8_t> digit(n_, 0);
    for (std::uint64_t c = 0; c < cells; ++c) {
      if (c > 0) {
        for (std::size_t i = 0; i < n_; ++i) {
          if (++digit[i] < 3) break;
          digit[i] = 0;
        }
      }
      std::size_t first_free = n_;
      std::uint64_t point = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (digit[i] == 2) {
          if (first_free == n_) first_free = i;
        } else if (digit[i] == 1) {
          point |= std::uint64_t{1} << i;
        }
      }
      if (first_free == n_) {
        value_[c] = tt.get(point) ? 1 : 0;
        continue;
      }
      const auto a = value_[c - 2 * pow3_[first_free]];
      const auto b = value_[c - pow3_[first_free]];
      if (a == b && a != kMixed) {
        value_[c] = a;
        continue;
      }
      value_[c] = kMixed;
      std::uint32_t best_size = std::numeric_limits<std::uint32_t>::max();
      std::uint8_t best_depth = std::numeric_limits<std::uint8_t>::max();
      for (std::size_t i = first_free; i < n_; ++i) {
        if (digit[i] != 2) continue;
        const auto c0 = c - 2 * pow3_[i];
        const auto c1 = c - pow3_[i];
        best_size = std::min(best_size, size_[c0] + size_[c1]);
        best_depth = std::min<std::uint8_t>(best_depth, 1 + std::max(depth_[c0], depth_[c1]));
      }
      size_[c] = best_size;
      depth_[c] = best_depth;
    }
  }

  [[nodiscard]] std::size_t num_vars() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t full_cell() const noexcept { return (pow3_[n_] - 1); }

  /// Cell of the subcube fixed by q (unrestricted variables free).
  [[nodiscard]] std::uint64_t cell(const RestrictionSeq& q) const {
    std::uint64_t c = full_cell();
    for (const auto& p : q) {
      if (p.var >= n_) throw std::out_of_range("restriction variable out of range");
      c -= (p.value ? 1 : 2) * pow3_[p.var];
    }
    return c;
  }

  [[nodiscard]] bool is_constant(std::uint64_t c) const { return value_[c] != kMixed; }
  [[nodiscard]] std::uint32_t min_size(std::uint64_t c) const { return size_[c]; }
  [[nodiscard]] std::uint32_t min_depth(std::uint64_t c) const { return depth_[c]; }

  [[nodiscard]] DecisionTree min_size_tree(std::uint64_t c) const {
    if (value_[c] != kMixed) return DecisionTree::leaf(value_[c] == 1);
    for (std::size_t i = 0; i < n_; ++i) {
      if (digit_of(c, i) != 2) continue;
      const auto c0 = c - 2 * pow3_[i];
      const auto c1 = c - pow3_[i];
      if (size_[c0] + size_[c1] == size_[c])
        return DecisionTree::branch(static_cast<Var>(i), min_size_tree(c0), min_size_tree(c1));
    }
    throw std::logic_error("inconsistent subcube table");
  }

  /// Smallest tree among those of minimum depth.
  [[nodiscard]] DecisionTree min_depth_then_size_tree(std::uint64_t c) const {
    const std::size_t budget = depth_[c];
    if ((budget + 1) * pow3_[n_] > (std::uint64_t{1} << 28))
      throw std::length_error("depth-bounded size table too large");
    // sized[b][cell]: min size among trees of depth <= b (kInf if none)
    std::vector<std::vector<std::uint32_t>> sized(budget + 1);
    for (std::size_t b = 0; b <= budget; ++b) {
      sized[b].assign(pow3_[n_], kInf);
      std::vector<std::uint8_t> digit(n_, 0);
      for (std::uint64_t x = 0; x < pow3_[n_]; ++x) {
        if (x > 0)
          for (std::size_t i = 0; i < n_; ++i) {
            if (++digit[i] < 3) break;
            digit[i] = 0;
          }
        if (value_[x] != kMixed) {
          sized[b][x] = 1;
          continue;
        }
        if (b == 0) continue;
        for (std::size_t i = 0; i < n_; ++i) {
          if (digit[i] != 2) continue;
          const auto s0 = sized[b - 1][x - 2 * pow3_[i]];
          const auto s1 = sized[b - 1][x - pow3_[i]];
          if (s0 != kInf && s1 != kInf) sized[b][x] = std::min(sized[b][x], s0 + s1);
        }
      }
    }
    return rebuild(c, budget, sized);
  }

private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  [[nodiscard]] std::uint32_t digit_of(std::uint64_t c, std::size_t i) const {
    return static_cast<std::uint32_t>((c / pow3_[i]) % 3);
  }

  DecisionTree rebuild(std::uint64_t c, std::size_t b, const std::vector<std::vector<std::uint32_t>>& sized) const {
    if (value_[c] != kMixed) return DecisionTree::leaf(value_[c] == 1);
    for (std::size_t i = 0; i < n_; ++i) {
      if (digit_of(c, i) != 2) continue;
      const auto c0 = c - 2 * pow3_[i];
      const auto c1 = c - pow3_[i];
      const auto s0 = sized[b - 1][c0];
      const auto s1 = sized[b - 1][c1];
      if (s0 != kInf && s1 != kInf && s0 + s1 == sized[b][c])
        return DecisionTree::branch(static_cast<Var>(i), rebuild(c0, b - 1, sized), rebuild(c1, b - 1, sized));
    }
    throw std::logic_error("inconsistent depth-bounded table");
  }

  std::size_t n_;
  std::vector<std::uint64_t> pow3_;
  std::vector<std::uint8_t> value_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint8_t> depth_;
};

enum class TableObjective { MinSize, MinDepthThenSize };

/// Globally minimal decision tree for a truth table (n <= 16).
inline DecisionTree min_dt_from_truth_table(const TruthTable& tt, TableObjective obj = TableObjective::MinSize) {
  SubcubeTable table(tt);
  return obj == TableObjective::MinSize ? table.min_size_tree(table.full_cell())
                                        : table.min_depth_then_size_tree(table.full_cell());
}

}  // namespace dtlab::learn
