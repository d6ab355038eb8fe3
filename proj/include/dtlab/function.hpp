#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "dtlab/decision_tree.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/terms.hpp"
#include "dtlab/truth_table.hpp"

namespace dtlab {

/// A Boolean function on exactly n variables in any supported representation.
class BooleanFunction {
public:
  using Callable = std::function<bool(const Assignment&)>;
  using Repr = std::variant<DecisionTree, F2Polynomial, DisjointTermSum, TruthTable, Callable>;

  BooleanFunction(std::size_t n, DecisionTree t) : n_(n), repr_(std::move(t)) { check(); }
  BooleanFunction(std::size_t n, F2Polynomial p) : n_(n), repr_(std::move(p)) { check(); }
  BooleanFunction(std::size_t n, DisjointTermSum s) : n_(n), repr_(std::move(s)) { check(); }
  explicit BooleanFunction(TruthTable t) : n_(t.num_vars()), repr_(std::move(t)) {}
  BooleanFunction(std::size_t n, Callable fn) : n_(n), repr_(std::move(fn)) {}

  [[nodiscard]] std::size_t num_vars() const noexcept { return n_; }
  [[nodiscard]] const Repr& repr() const noexcept { return repr_; }

  [[nodiscard]] bool eval(const Assignment& x) const {
    if (x.size() != n_) throw MalformedFunction("assignment length differs from function arity");
    return std::visit([&](const auto& r) -> bool {
      if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Callable>)
        return r(x);
      else
        return r.eval(x);
    }, repr_);
  }
  bool operator()(const Assignment& x) const { return eval(x); }

  /// Exact polynomial; callables and large arities go through a truth table.
  [[nodiscard]] F2Polynomial to_poly() const {
    if (auto* p = std::get_if<F2Polynomial>(&repr_)) return *p;
    if (auto* t = std::get_if<DecisionTree>(&repr_)) return tree_to_poly(*t);
    if (auto* s = std::get_if<DisjointTermSum>(&repr_)) return dts_to_poly(*s);
    return to_truth_table().to_poly();
  }

  [[nodiscard]] TruthTable to_truth_table() const {
    if (auto* t = std::get_if<TruthTable>(&repr_)) return *t;
    return TruthTable::from_function(n_, [&](const Assignment& x) { return eval(x); });
  }

  [[nodiscard]] std::string kind() const {
    static const char* names[] = {"tree", "poly", "dts", "truthtable", "callable"};
    return names[repr_.index()];
  }

private:
  void check() const {
    const std::size_t need = std::visit([](const auto& r) -> std::size_t {
      if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Callable> ||
                    std::is_same_v<std::decay_t<decltype(r)>, TruthTable>)
        return 0;
      else
        return r.min_arity();
    }, repr_);
    if (need > n_) throw MalformedFunction("variable index exceeds declared n");
  }

  std::size_t n_;
  Repr repr_;
};

}  // namespace dtlab
