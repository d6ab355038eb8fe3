#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dtlab/oracle.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/truth_table.hpp"

namespace dtlab::algebra {

struct ProbeParams {
  std::size_t d = 0;
  double delta = 0.01;
};

inline std::vector<Var> all_vars(std::size_t n) {
  std::vector<Var> v(n);
  std::iota(v.begin(), v.end(), Var{0});
  return v;
}

/// Draws needed to see f(x) != f(0) for a non-constant degree-d polynomial
/// with failure probability delta: (1 - 2^-d)^m <= delta.
inline std::uint64_t probe_samples(std::size_t d, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  return static_cast<std::uint64_t>(std::ceil(std::ldexp(1.0, static_cast<int>(d)) * std::log(1.0 / delta)));
}

/// Uniform point on the universe coordinates, zero elsewhere.
inline Assignment random_on(const std::vector<Var>& universe, std::size_t n, Rng& rng) {
  Assignment x(n);
  for (Var v : universe)
    if (rng.bit()) x.set(v, true);
  return x;
}

struct ProbeResult {
  bool constant = true;
  bool value = false;  // f(0) when constant
  Assignment witness;  // f(witness) != f(0) otherwise
};

/// Constancy probe over the universe (all variables by default); other
/// coordinates stay 0.
inline ProbeResult probe_nonconstant(Oracle& o, const ProbeParams& p, const std::vector<Var>& universe) {
  const std::size_t n = o.num_vars();
  const bool f0 = o.query(Assignment(n));
  const auto m = probe_samples(p.d, p.delta);
  for (std::uint64_t i = 0; i < m; ++i) {
    Assignment x = random_on(universe, n, o.rng());
    if (x.popcount() == 0) continue;
    if (o.query(x) != f0) return {false, f0, std::move(x)};
  }
  return {true, f0, Assignment(n)};
}

inline ProbeResult probe_nonconstant(Oracle& o, const ProbeParams& p) {
  return probe_nonconstant(o, p, all_vars(o.num_vars()));
}

/// Given f(a) != f(b) where a and b differ exactly on `diff`, finds one
/// position whose flip changes f. Each step moves the first half of the
/// differing positions of a onto b's values.
inline Var binary_search_flip(Oracle& o, Assignment a, bool fa, Assignment b, std::vector<Var> diff) {
  while (diff.size() > 1) {
    const std::size_t half = diff.size() / 2;
    Assignment mid = a;
    for (std::size_t i = 0; i < half; ++i) mid.set(diff[i], b.get(diff[i]));
    const bool fm = o.query(mid);
    if (fm != fa) {
      b = std::move(mid);
      diff.resize(half);
    } else {
      a = std::move(mid);
      diff.erase(diff.begin(), diff.begin() + static_cast<std::ptrdiff_t>(half));
    }
  }
  return diff.front();
}

/// Looks for a variable of the universe outside `known` on which f depends,
/// by probing g = f + f_{|(U\K)<-0} for non-constancy and then binary
/// searching between the witness and its zeroed copy. Returns nullopt when
/// g looks constant (all relevant variables inside the universe are known).
inline std::optional<Var> find_new_relevant_var(Oracle& o, const std::vector<Var>& known,
                                                const std::vector<Var>& universe, const ProbeParams& p) {
  const std::size_t n = o.num_vars();
  std::vector<Var> free;
  for (Var v : universe)
    if (std::find(known.begin(), known.end(), v) == known.end()) free.push_back(v);
  std::sort(free.begin(), free.end());
  if (free.empty()) return std::nullopt;

  const auto m = probe_samples(p.d, p.delta);
  std::optional<Assignment> last_y;
  bool last_fy = false;
  for (std::uint64_t i = 0; i < m; ++i) {
    Assignment x = random_on(universe, n, o.rng());
    std::vector<Var> diff;
    for (Var v : free)
      if (x.get(v)) diff.push_back(v);
    if (diff.empty()) continue;  // g(x) = 0 without asking
    Assignment y = x.with_zeroed(diff);
    bool fy;
    if (last_y && *last_y == y) {
      fy = last_fy;
    } else {
      fy = o.query(y);
      last_y = y;
      last_fy = fy;
    }
    const bool fx = o.query(x);
    if (fx != fy) return binary_search_flip(o, std::move(x), fx, std::move(y), std::move(diff));
  }
  return std::nullopt;
}

inline std::optional<Var> find_new_relevant_var(Oracle& o, const std::vector<Var>& known, const ProbeParams& p) {
  return find_new_relevant_var(o, known, all_vars(o.num_vars()), p);
}

struct RelevantVars {
  std::vector<Var> vars;  // sorted
  std::vector<Var> found_order;
  bool too_many = false;
};

/// Repeats the relevant-variable search with confidence delta/(cap+1) per
/// call; stops with too_many once more than `cap` variables are found.
inline RelevantVars find_relevant_vars(Oracle& o, const ProbeParams& p, std::size_t cap,
                                       const std::vector<Var>& universe) {
  RelevantVars r;
  const ProbeParams each{p.d, p.delta / static_cast<double>(cap + 1)};
  for (;;) {
    auto v = find_new_relevant_var(o, r.found_order, universe, each);
    if (!v) break;
    r.found_order.push_back(*v);
    if (r.found_order.size() > cap) {
      r.too_many = true;
      break;
    }
  }
  r.vars = r.found_order;
  std::sort(r.vars.begin(), r.vars.end());
  return r;
}

inline RelevantVars find_relevant_vars(Oracle& o, const ProbeParams& p, std::size_t cap) {
  return find_relevant_vars(o, p, cap, all_vars(o.num_vars()));
}

/// G(x) = 1 + sum over all patterns xi of f_{|M<-xi}(x), as a black box that
/// spends 2^|M| queries of f per query.
inline DerivedOracle g_function_oracle(Oracle& o, const Monomial& m) {
  if (m.size() >= 31) throw std::length_error("monomial too large for the G-function");
  std::vector<Var> vars = m.vars();
  return DerivedOracle(o, o.num_vars(), [&o, vars](const Assignment& x) {
    bool acc = true;
    Assignment y = x;
    const std::uint64_t patterns = std::uint64_t{1} << vars.size();
    for (std::uint64_t xi = 0; xi < patterns; ++xi) {
      for (std::size_t i = 0; i < vars.size(); ++i) y.set(vars[i], (xi >> i) & 1U);
      acc ^= o.query(y);
    }
    return acc;
  });
}

/// Symbolic counterpart of g_function_oracle.
inline F2Polynomial g_function(const F2Polynomial& f, const Monomial& m) {
  F2Polynomial acc = F2Polynomial::one();
  const std::uint64_t patterns = std::uint64_t{1} << m.size();
  for (std::uint64_t xi = 0; xi < patterns; ++xi) {
    RestrictionSeq q;
    for (std::size_t i = 0; i < m.size(); ++i) q.push(m.vars()[i], (xi >> i) & 1U);
    acc += f.restrict(q);
  }
  return acc;
}

struct StepResult {
  enum class Kind { Maximal, Extend, NotSubmonomial } kind = Kind::Maximal;
  Var var = 0;
};

/// Decides whether M is maximal in f (G == 0), or names a variable that
/// extends M to a sub-monomial of a monomial of f. X is the relevant set.
inline StepResult maximal_monomial_step(Oracle& o, const Monomial& m, const std::vector<Var>& relevant,
                                        const ProbeParams& p) {
  auto g = g_function_oracle(o, m);
  std::vector<Var> universe;
  for (Var v : relevant)
    if (!m.contains(v)) universe.push_back(v);
  const ProbeParams gp{p.d >= m.size() ? p.d - m.size() : 0, p.delta};
  if (auto v = find_new_relevant_var(g, {}, universe, gp)) return {StepResult::Kind::Extend, *v};
  // G looks constant; it is 0 exactly when M is maximal, and 1 only if M
  // was not a sub-monomial of f to begin with.
  if (g.query(Assignment(o.num_vars()))) return {StepResult::Kind::NotSubmonomial, 0};
  return {StepResult::Kind::Maximal, 0};
}

struct MonomialResult {
  enum class Status { Found, TooLarge, Failed } status = Status::Found;
  Monomial monomial;
};

/// Grows a maximal monomial of f one variable at a time; an empty result
/// means f looked constant on the relevant set.
inline MonomialResult find_maximal_monomial(Oracle& o, const std::vector<Var>& relevant, const ProbeParams& p,
                                            std::size_t size_cap) {
  const ProbeParams each{p.d, p.delta / static_cast<double>(size_cap + 1)};
  auto seed = find_new_relevant_var(o, {}, relevant, each);
  if (!seed) return {MonomialResult::Status::Found, Monomial{}};
  Monomial m{*seed};
  for (;;) {
    if (m.size() > size_cap) return {MonomialResult::Status::TooLarge, m};
    auto step = maximal_monomial_step(o, m, relevant, each);
    switch (step.kind) {
      case StepResult::Kind::Maximal:
        return {MonomialResult::Status::Found, m};
      case StepResult::Kind::NotSubmonomial:
        return {MonomialResult::Status::Failed, m};
      case StepResult::Kind::Extend:
        m = m.with(step.var);
        break;
    }
  }
}

/// Exhaustive check used as ground truth: M is a monomial of f and no other
/// monomial of f contains it.
inline bool is_maximal_monomial(const F2Polynomial& f, const Monomial& m) {
  if (!f.contains(m)) return false;
  for (const auto& other : f.monomials())
    if (other != m && m.divides(other)) return false;
  return true;
}

class InterpolationCapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Exact polynomial of f restricted to `vars` (all other coordinates 0),
/// from all 2^|vars| queries. Indices in the result are the original ones.
inline F2Polynomial interpolate_poly(Oracle& o, const std::vector<Var>& vars, std::size_t cap = 24) {
  if (vars.size() > cap) throw InterpolationCapExceeded("too many variables to interpolate");
  const std::size_t k = vars.size();
  TruthTable t(k);
  Assignment x(o.num_vars());
  for (std::uint64_t idx = 0; idx < t.num_points(); ++idx) {
    for (std::size_t i = 0; i < k; ++i) x.set(vars[i], (idx >> i) & 1U);
    if (o.query(x)) t.set(idx, true);
  }
  const auto local = t.to_poly();
  std::vector<Monomial> out;
  for (const auto& m : local.monomials()) {
    std::vector<Var> mapped;
    for (Var v : m) mapped.push_back(vars[v]);
    out.emplace_back(std::move(mapped));
  }
  return F2Polynomial(std::move(out));
}

struct CdResult {
  std::size_t value = 0;
  std::vector<Var> witness;
};

/// Minimum number of variables whose zero-substitution makes f constant,
/// searched by increasing subset size up to `cap`; nullopt past the cap.
inline std::optional<CdResult> cd(const F2Polynomial& f, std::size_t cap) {
  const auto vars = f.variables();
  if (vars.size() > 20) throw std::length_error("cd: more than 20 variables");
  std::vector<std::uint32_t> masks;  // non-constant monomials over local indices
  for (const auto& m : f.monomials()) {
    if (m.empty()) continue;
    std::uint32_t mask = 0;
    for (Var v : m)
      mask |= 1U << static_cast<unsigned>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    masks.push_back(mask);
  }
  const std::size_t nv = vars.size();
  for (std::size_t k = 0; k <= std::min(cap, nv); ++k) {
    // Iterate k-subsets in lexicographic order of their index lists.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      std::uint32_t set = 0;
      for (auto i : idx) set |= 1U << i;
      bool hits_all = std::all_of(masks.begin(), masks.end(), [set](std::uint32_t m) { return (m & set) != 0; });
      if (hits_all) {
        CdResult r{k, {}};
        for (auto i : idx) r.witness.push_back(vars[i]);
        return r;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == nv - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

struct PsizeResult {
  std::size_t value = 0;
  std::vector<Monomial> witness;
};

/// Number of non-constant monomials; the representation is unique, so this
/// is the minimum over representations of f and of f+1.
inline PsizeResult psize(const F2Polynomial& f) {
  PsizeResult r;
  for (const auto& m : f.monomials())
    if (!m.empty()) r.witness.push_back(m);
  r.value = r.witness.size();
  return r;
}

inline F2Polynomial low_degree_part(const F2Polynomial& f, const SizeInterval& interval) {
  return f.part(interval);
}

}  // namespace dtlab::algebra
