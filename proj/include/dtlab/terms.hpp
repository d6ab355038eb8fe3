#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtlab/decision_tree.hpp"
#include "dtlab/polynomial.hpp"

namespace dtlab {

/// Conjunction of literals: positive variables times negated variables.
struct Term {
  std::vector<Var> pos;
  std::vector<Var> neg;

  [[nodiscard]] std::size_t size() const noexcept { return pos.size() + neg.size(); }

  [[nodiscard]] bool eval(const Assignment& x) const {
    for (Var v : pos)
      if (!x.get(v)) return false;
    for (Var v : neg)
      if (x.get(v)) return false;
    return true;
  }

  /// The positive part T^+.
  [[nodiscard]] Monomial positive() const { return Monomial(pos); }

  /// True when some variable is positive here and negated in `o`, or vice versa.
  [[nodiscard]] bool contradicts(const Term& o) const {
    auto clash = [](const std::vector<Var>& a, const std::vector<Var>& b) {
      for (Var v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) return true;
      return false;
    };
    return clash(pos, o.neg) || clash(neg, o.pos);
  }

  void normalize() {
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    for (Var v : pos)
      if (std::binary_search(neg.begin(), neg.end(), v))
        throw MalformedFunction("term contains a variable and its negation");
  }

  [[nodiscard]] std::string to_string() const {
    if (size() == 0) return "1";
    std::string s;
    for (Var v : pos) s += "x" + std::to_string(v + 1);
    for (Var v : neg) s += "~x" + std::to_string(v + 1);
    return s;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of pairwise contradictory terms; OR and XOR coincide on it.
struct DisjointTermSum {
  std::vector<Term> terms;

  [[nodiscard]] bool eval(const Assignment& x) const {
    for (const auto& t : terms)
      if (t.eval(x)) return true;
    return false;
  }

  [[nodiscard]] bool pairwise_disjoint() const {
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = i + 1; j < terms.size(); ++j)
        if (!terms[i].contradicts(terms[j])) return false;
    return true;
  }

  [[nodiscard]] std::size_t min_arity() const {
    std::size_t n = 0;
    for (const auto& t : terms) {
      for (Var v : t.pos) n = std::max<std::size_t>(n, v + 1);
      for (Var v : t.neg) n = std::max<std::size_t>(n, v + 1);
    }
    return n;
  }
};

namespace detail {
inline void collect_terms(const DecisionTree& t, std::uint32_t node, Term& path,
                          std::vector<Term>& out) {
  const auto& n = t.nodes()[node];
  if (n.is_leaf) {
    if (n.value) {
      Term term = path;
      term.normalize();
      out.push_back(std::move(term));
    }
    return;
  }
  path.neg.push_back(n.var);
  collect_terms(t, n.lo, path, out);
  path.neg.pop_back();
  path.pos.push_back(n.var);
  collect_terms(t, n.hi, path, out);
  path.pos.pop_back();
}
}  // namespace detail

/// One term per 1-leaf, made of the literals on its root path.
inline DisjointTermSum tree_to_dts(const DecisionTree& t) {
  DisjointTermSum s;
  Term path;
  detail::collect_terms(t, t.root(), path, s.terms);
  return s;
}

/// Expands every negated literal as (x+1) and cancels repeated monomials.
inline F2Polynomial dts_to_poly(const DisjointTermSum& s) {
  std::vector<Monomial> out;
  for (const auto& t : s.terms) {
    if (t.neg.size() >= 40) throw std::length_error("term too long to expand");
    const std::uint64_t count = std::uint64_t{1} << t.neg.size();
    for (std::uint64_t sub = 0; sub < count; ++sub) {
      std::vector<Var> vars = t.pos;
      for (std::size_t i = 0; i < t.neg.size(); ++i)
        if ((sub >> i) & 1U) vars.push_back(t.neg[i]);
      out.emplace_back(std::move(vars));
    }
  }
  return F2Polynomial(std::move(out));
}

inline F2Polynomial tree_to_poly(const DecisionTree& t) { return dts_to_poly(tree_to_dts(t)); }

}  // namespace dtlab
