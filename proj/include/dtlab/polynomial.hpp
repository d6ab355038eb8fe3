#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtlab/assignment.hpp"
#include "dtlab/restriction.hpp"

namespace dtlab {

/// Conjunction of variables, kept as a strictly increasing index list. The
/// empty monomial is the constant 1.
class Monomial {
public:
  Monomial() = default;
  Monomial(std::initializer_list<Var> vars) : vars_(vars) { normalize(); }
  explicit Monomial(std::vector<Var> vars) : vars_(std::move(vars)) { normalize(); }

  [[nodiscard]] std::size_t size() const noexcept { return vars_.size(); }
  [[nodiscard]] bool empty() const noexcept { return vars_.empty(); }
  [[nodiscard]] const std::vector<Var>& vars() const noexcept { return vars_; }
  [[nodiscard]] auto begin() const noexcept { return vars_.begin(); }
  [[nodiscard]] auto end() const noexcept { return vars_.end(); }

  [[nodiscard]] bool contains(Var v) const noexcept {
    return std::binary_search(vars_.begin(), vars_.end(), v);
  }

  /// True iff every variable of *this occurs in `other`.
  [[nodiscard]] bool divides(const Monomial& other) const noexcept {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
  }

  [[nodiscard]] bool eval(const Assignment& x) const noexcept {
    for (Var v : vars_)
      if (!x.get(v)) return false;
    return true;
  }

  [[nodiscard]] Monomial with(Var v) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.vars_.begin(), m.vars_.end(), v);
    if (it == m.vars_.end() || *it != v) m.vars_.insert(it, v);
    return m;
  }

  [[nodiscard]] Monomial without(Var v) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.vars_.begin(), m.vars_.end(), v);
    if (it != m.vars_.end() && *it == v) m.vars_.erase(it);
    return m;
  }

  [[nodiscard]] Monomial operator*(const Monomial& o) const {
    Monomial m;
    m.vars_.reserve(vars_.size() + o.vars_.size());
    std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                   std::back_inserter(m.vars_));
    return m;
  }

  [[nodiscard]] Var max_var() const noexcept { return vars_.empty() ? 0 : vars_.back(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.vars_ <=> b.vars_; }

  /// "1" or "x1x4" with 1-based indices.
  [[nodiscard]] std::string to_string() const {
    if (vars_.empty()) return "1";
    std::string s;
    for (Var v : vars_) s += "x" + std::to_string(v + 1);
    return s;
  }

private:
  void normalize() {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  }

  std::vector<Var> vars_;
};

/// Closed/open bounds on monomial size used to select f^I.
struct SizeInterval {
  std::size_t lo = 0;
  std::size_t hi = std::numeric_limits<std::size_t>::max();
  bool lo_open = false;

  static SizeInterval closed(std::size_t lo, std::size_t hi) { return {lo, hi, false}; }
  /// (lo, hi]
  static SizeInterval left_open(std::size_t lo, std::size_t hi) { return {lo, hi, true}; }

  [[nodiscard]] bool contains(std::size_t k) const noexcept {
    return (lo_open ? k > lo : k >= lo) && k <= hi;
  }
};

/// Multilinear polynomial over GF(2): a set of distinct monomials. Because
/// the representation of a Boolean function is unique, equality of
/// polynomials is equality of functions.
class F2Polynomial {
public:
  F2Polynomial() = default;

  /// Sums the given monomials; repeated monomials cancel in pairs.
  explicit F2Polynomial(std::vector<Monomial> monomials) : monos_(std::move(monomials)) {
    canonicalize();
  }
  F2Polynomial(std::initializer_list<Monomial> monomials)
      : F2Polynomial(std::vector<Monomial>(monomials)) {}

  static F2Polynomial zero() { return {}; }
  static F2Polynomial one() { return F2Polynomial(std::vector<Monomial>{Monomial{}}); }
  static F2Polynomial variable(Var v) { return F2Polynomial(std::vector<Monomial>{Monomial{v}}); }
  static F2Polynomial constant(bool b) { return b ? one() : zero(); }

  [[nodiscard]] const std::vector<Monomial>& monomials() const noexcept { return monos_; }
  [[nodiscard]] std::size_t num_monomials() const noexcept { return monos_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return monos_.empty(); }

  [[nodiscard]] bool is_constant() const noexcept {
    return monos_.empty() || (monos_.size() == 1 && monos_.front().empty());
  }
  /// Value of a constant polynomial (or of the constant monomial in general).
  [[nodiscard]] bool constant_term() const noexcept { return !monos_.empty() && monos_.front().empty(); }

  [[nodiscard]] bool contains(const Monomial& m) const {
    return std::binary_search(monos_.begin(), monos_.end(), m);
  }

  [[nodiscard]] bool eval(const Assignment& x) const noexcept {
    bool acc = false;
    for (const auto& m : monos_) acc ^= m.eval(x);
    return acc;
  }

  [[nodiscard]] std::size_t degree() const noexcept {
    std::size_t d = 0;
    for (const auto& m : monos_) d = std::max(d, m.size());
    return d;
  }

  /// Sorted list of variables occurring in some monomial; for a canonical
  /// polynomial these are exactly the relevant variables.
  [[nodiscard]] std::vector<Var> variables() const {
    std::vector<Var> vs;
    for (const auto& m : monos_) vs.insert(vs.end(), m.begin(), m.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  /// One more than the largest variable index, 0 for constants.
  [[nodiscard]] std::size_t min_arity() const noexcept {
    std::size_t n = 0;
    for (const auto& m : monos_)
      if (!m.empty()) n = std::max<std::size_t>(n, m.max_var() + 1);
    return n;
  }

  F2Polynomial& operator+=(const F2Polynomial& o) {
    std::vector<Monomial> out;
    out.reserve(monos_.size() + o.monos_.size());
    std::set_symmetric_difference(monos_.begin(), monos_.end(), o.monos_.begin(), o.monos_.end(),
                                  std::back_inserter(out));
    monos_ = std::move(out);
    return *this;
  }
  friend F2Polynomial operator+(F2Polynomial a, const F2Polynomial& b) { return a += b; }

  friend F2Polynomial operator*(const F2Polynomial& a, const F2Polynomial& b) {
    std::vector<Monomial> out;
    out.reserve(a.monos_.size() * b.monos_.size());
    for (const auto& x : a.monos_)
      for (const auto& y : b.monos_) out.push_back(x * y);
    return F2Polynomial(std::move(out));
  }

  [[nodiscard]] F2Polynomial restrict(Var v, bool value) const {
    std::vector<Monomial> out;
    out.reserve(monos_.size());
    for (const auto& m : monos_) {
      if (!m.contains(v))
        out.push_back(m);
      else if (value)
        out.push_back(m.without(v));
    }
    return F2Polynomial(std::move(out));
  }

  /// Exact substitution of every pair in q, with cancellation.
  [[nodiscard]] F2Polynomial restrict(const RestrictionSeq& q) const {
    std::vector<Monomial> out;
    out.reserve(monos_.size());
    for (const auto& m : monos_) {
      std::vector<Var> kept;
      bool dead = false;
      for (Var v : m) {
        bool fixed = false;
        for (const auto& p : q) {
          if (p.var == v) {
            fixed = true;
            if (!p.value) dead = true;
            break;
          }
        }
        if (dead) break;
        if (!fixed) kept.push_back(v);
      }
      if (!dead) out.emplace_back(std::move(kept));
    }
    return F2Polynomial(std::move(out));
  }

  /// f_{|X<-0}: drops every monomial touching `vars`.
  [[nodiscard]] F2Polynomial zero_out(std::span<const Var> vars) const {
    F2Polynomial r;
    for (const auto& m : monos_) {
      bool hit = std::any_of(vars.begin(), vars.end(), [&](Var v) { return m.contains(v); });
      if (!hit) r.monos_.push_back(m);
    }
    return r;
  }

  /// g(x) = f(x xor a). Each monomial expands over the subsets of its
  /// variables set in a.
  [[nodiscard]] F2Polynomial shift(const Assignment& a) const {
    std::vector<Monomial> out;
    for (const auto& m : monos_) {
      std::vector<Var> flipped;
      std::vector<Var> fixed;
      for (Var v : m) (v < a.size() && a.get(v) ? flipped : fixed).push_back(v);
      if (flipped.size() >= 63) throw std::length_error("shift expansion too large");
      const std::uint64_t count = std::uint64_t{1} << flipped.size();
      for (std::uint64_t sub = 0; sub < count; ++sub) {
        std::vector<Var> vars = fixed;
        for (std::size_t i = 0; i < flipped.size(); ++i)
          if ((sub >> i) & 1U) vars.push_back(flipped[i]);
        out.emplace_back(std::move(vars));
      }
    }
    return F2Polynomial(std::move(out));
  }

  /// f^I: the monomials whose size lies in I.
  [[nodiscard]] F2Polynomial part(const SizeInterval& interval) const {
    F2Polynomial r;
    for (const auto& m : monos_)
      if (interval.contains(m.size())) r.monos_.push_back(m);
    return r;
  }

  friend bool operator==(const F2Polynomial&, const F2Polynomial&) = default;
  friend auto operator<=>(const F2Polynomial& a, const F2Polynomial& b) { return a.monos_ <=> b.monos_; }

  [[nodiscard]] std::string to_string() const {
    if (monos_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < monos_.size(); ++i) {
      if (i) s += " + ";
      s += monos_[i].to_string();
    }
    return s;
  }

private:
  void canonicalize() {
    std::sort(monos_.begin(), monos_.end());
    std::vector<Monomial> out;
    out.reserve(monos_.size());
    for (std::size_t i = 0; i < monos_.size();) {
      std::size_t j = i;
      while (j < monos_.size() && monos_[j] == monos_[i]) ++j;
      if ((j - i) % 2 == 1) out.push_back(std::move(monos_[i]));
      i = j;
    }
    monos_ = std::move(out);
  }

  std::vector<Monomial> monos_;
};

/// Sum of a set of monomials (the paper's Sigma S).
inline F2Polynomial sum_of(std::vector<Monomial> monomials) {
  return F2Polynomial(std::move(monomials));
}

/// Monomials of f that are not strictly contained in another monomial.
inline std::vector<Monomial> maximal_monomials(const F2Polynomial& f) {
  std::vector<Monomial> out;
  const auto& ms = f.monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < ms.size() && maximal; ++j)
      if (i != j && ms[i].divides(ms[j])) maximal = false;
    if (maximal) out.push_back(ms[i]);
  }
  return out;
}

}  // namespace dtlab
