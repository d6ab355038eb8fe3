#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtlab/algebra.hpp"
#include "dtlab/learners/outcome.hpp"
#include "dtlab/oracle.hpp"
#include "dtlab/testers/report.hpp"

namespace dtlab::reduce {

/// Forwards to another oracle and counts the queries passing through.
class CountingOracle final : public Oracle {
public:
  explicit CountingOracle(Oracle& base) : base_(base) {}
  [[nodiscard]] std::size_t num_vars() const override { return base_.num_vars(); }
  bool query(const Assignment& x) override {
    ++bb;
    return base_.query(x);
  }
  LabeledExample example() override {
    ++rex;
    return base_.example();
  }
  Rng& rng() override { return base_.rng(); }

  std::uint64_t bb = 0;
  std::uint64_t rex = 0;

private:
  Oracle& base_;
};

struct ProjectionResult {
  enum class Status { Ok, TooManyRelevant } status = Status::Ok;
  std::vector<Var> zeroed;    // X: the variables forced to 0
  std::vector<Var> relevant;  // removed from X, in discovery order
  bool converged = false;     // the agreement streak reached its target
  std::uint64_t rounds = 0;
  std::uint64_t bb_queries = 0;
  std::uint64_t examples = 0;
  std::vector<std::uint32_t> streak;  // t_X after every round

  [[nodiscard]] bool ok() const noexcept { return status == Status::Ok; }
  [[nodiscard]] std::vector<Var> relevant_sorted() const {
    auto v = relevant;
    std::sort(v.begin(), v.end());
    return v;
  }
};

struct FindCloseBounds {
  std::uint64_t rounds;  // M
  std::uint64_t streak;  // consecutive agreements that end the search
};

inline FindCloseBounds find_close_bounds(std::size_t k, double eps, double delta, double c) {
  if (k == 0) throw std::invalid_argument("find_close needs k >= 1");
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("eps and delta must lie in (0,1)");
  const double l = std::log(static_cast<double>(k) / delta);
  return {static_cast<std::uint64_t>(std::ceil(c * static_cast<double>(k) * l / eps)),
          static_cast<std::uint64_t>(std::ceil(c * l / eps))};
}

/// Shrinks the zeroed set X until f_{|X<-0} agrees with f on a long enough
/// run of examples. Each disagreement yields a relevant variable by binary
/// search from u towards u_{|X<-0}.
inline ProjectionResult find_close(Oracle& o, std::size_t k, double eps, double delta, double c) {
  const auto bounds = find_close_bounds(k, eps, delta, c);
  CountingOracle co(o);
  const std::size_t n = o.num_vars();
  std::vector<bool> in_x(n, true);
  ProjectionResult r;
  std::uint32_t t = 0;
  for (std::uint64_t round = 0; round < bounds.rounds; ++round) {
    auto e = co.example();
    ++r.rounds;
    ++t;
    std::vector<Var> diff;
    for (Var v = 0; v < n; ++v)
      if (in_x[v] && e.x.get(v)) diff.push_back(v);
    if (!diff.empty()) {
      Assignment z = e.x.with_zeroed(diff);
      if (co.query(z) != e.y) {
        const Var v = algebra::binary_search_flip(co, e.x, e.y, std::move(z), std::move(diff));
        in_x[v] = false;
        r.relevant.push_back(v);
        t = 0;
        if (r.relevant.size() > k) {
          r.status = ProjectionResult::Status::TooManyRelevant;
          r.streak.push_back(t);
          break;
        }
      }
    }
    r.streak.push_back(t);
    if (t == bounds.streak) {
      r.converged = true;
      break;
    }
  }
  for (Var v = 0; v < n; ++v)
    if (in_x[v]) r.zeroed.push_back(v);
  r.bb_queries = co.bb;
  r.examples = co.rex;
  return r;
}

/// Lemma-style learning reduction: project onto the variables found by
/// find_close (c = 2, delta/2), run `inner` there at (eps/2, delta/2), and
/// map the hypothesis back to the original indices.
/// `inner(Oracle& projected, double eps, double delta) -> LearnOutcome`.
template <class Inner>
learn::LearnOutcome reduce_learner(Oracle& o, std::size_t k, double eps, double delta, Inner&& inner) {
  auto proj = find_close(o, k, eps, delta / 2, 2.0);
  if (!proj.ok())
    return learn::LearnOutcome::failure(learn::LearnStatus::TooManyRelevant,
                                        "more than " + std::to_string(k) + " relevant variables");
  const auto vars = proj.relevant_sorted();
  ProjectedOracle po(o, vars);
  auto out = inner(static_cast<Oracle&>(po), eps / 2, delta / 2);
  if (out.ok()) out.tree = out.tree.relabel(vars);
  return out;
}

enum class CostModel { DistFree, Uniform };

inline const char* to_string(CostModel m) { return m == CostModel::Uniform ? "uniform" : "distfree"; }

/// Learn-then-verify tester: reject if the projection needs more than k
/// variables or the learner fails; otherwise accept iff the hypothesis
/// disagrees with f on at most 2eps/3 of ceil((27/eps) ln(1/delta)) fresh
/// examples. The learner runs on the projection at eps/6, and find_close
/// uses c = 6, so members of the class end up eps/3-close.
template <class Inner>
testers::TesterReport tester_from_learner(Oracle& o, std::size_t k, double eps, double delta, Inner&& inner,
                                          CostModel model = CostModel::DistFree) {
  UniformExampleOracle uniform(o);
  Oracle& src = model == CostModel::Uniform ? static_cast<Oracle&>(uniform) : o;
  auto proj = find_close(src, k, eps, delta / 3, 6.0);
  if (!proj.ok()) return testers::TesterReport::reject("more than " + std::to_string(k) + " relevant variables");
  const auto vars = proj.relevant_sorted();
  ProjectedOracle po(src, vars);
  auto h = inner(static_cast<Oracle&>(po), eps / 6, delta / 3);
  if (!h.ok()) return testers::TesterReport::reject(std::string("learner failed: ") + learn::to_string(h.status));
  const DecisionTree tree = h.tree.relabel(vars);
  const auto m = static_cast<std::uint64_t>(std::ceil(27.0 / eps * std::log(1.0 / delta)));
  std::uint64_t wrong = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto e = src.example();
    wrong += tree.eval(e.x) != e.y;
  }
  const double err = m ? static_cast<double>(wrong) / static_cast<double>(m) : 0.0;
  if (err > 2.0 * eps / 3.0) return testers::TesterReport::reject("hypothesis disagrees on " + std::to_string(wrong) + " of " + std::to_string(m) + " examples");
  return testers::TesterReport::accept("hypothesis verified on " + std::to_string(m) + " examples");
}

/// Runs `inner(Oracle& projected)` on the find_close projection, so its
/// query complexity no longer depends on n.
template <class InnerTester>
testers::TesterReport lift_tester(Oracle& o, std::size_t k, double eps, double delta, double c,
                                  InnerTester&& inner) {
  auto proj = find_close(o, k, eps, delta / 2, c);
  if (!proj.ok()) return testers::TesterReport::reject("more than " + std::to_string(k) + " relevant variables");
  ProjectedOracle po(o, proj.relevant_sorted());
  return inner(static_cast<Oracle&>(po));
}

}  // namespace dtlab::reduce
