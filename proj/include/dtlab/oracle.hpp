#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtlab/distribution.hpp"
#include "dtlab/function.hpp"
#include "dtlab/restriction.hpp"
#include "dtlab/rng.hpp"

namespace dtlab {

class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LabeledExample {
  Assignment x;
  bool y = false;
};

/// Query access to a hidden function. Algorithms only ever see this
/// interface; `rng()` is the algorithm's own randomness.
class Oracle {
public:
  virtual ~Oracle() = default;
  [[nodiscard]] virtual std::size_t num_vars() const = 0;
  /// Black-box (membership) query.
  virtual bool query(const Assignment& x) = 0;
  /// Random example (x, f(x)) with x drawn from the example distribution.
  virtual LabeledExample example() = 0;
  virtual Rng& rng() = 0;
};

/// The root oracle: owns the hidden function and counts every query.
class OracleSession final : public Oracle {
public:
  struct Event {
    bool is_example;
    Assignment x;
    bool y;
  };

  /// `budget` bounds bb + rex queries; 0 means unlimited.
  OracleSession(BooleanFunction f, Distribution dist, std::uint64_t seed, std::uint64_t budget = 0)
      : f_(std::move(f)),
        dist_(std::move(dist)),
        seed_(seed),
        budget_(budget),
        example_rng_(Rng(seed).split(1)),
        algo_rng_(Rng(seed).split(2)) {}

  [[nodiscard]] std::size_t num_vars() const override { return f_.num_vars(); }

  bool query(const Assignment& x) override {
    charge();
    ++bb_;
    const bool y = f_.eval(x);
    log(false, x, y);
    return y;
  }

  LabeledExample example() override {
    charge();
    ++rex_;
    LabeledExample e{dist_.sample(f_.num_vars(), example_rng_), false};
    e.y = f_.eval(e.x);
    log(true, e.x, e.y);
    return e;
  }

  Rng& rng() override { return algo_rng_; }

  [[nodiscard]] std::uint64_t bb_count() const noexcept { return bb_; }
  [[nodiscard]] std::uint64_t rex_count() const noexcept { return rex_; }
  [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] const Distribution& distribution() const noexcept { return dist_; }

  /// FNV-1a digest of every (kind, point, answer) so far.
  [[nodiscard]] std::uint64_t transcript_digest() const noexcept { return digest_; }

  void set_recording(bool on) { recording_ = on; }
  [[nodiscard]] const std::vector<Event>& transcript() const noexcept { return events_; }

private:
  void charge() {
    if (budget_ != 0 && bb_ + rex_ >= budget_) throw BudgetExhausted("query budget exhausted");
  }

  void mix(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      digest_ ^= (v >> (8 * i)) & 0xFFU;
      digest_ *= 0x100000001b3ULL;
    }
  }

  void log(bool is_example, const Assignment& x, bool y) {
    mix(is_example ? 1 : 0);
    for (auto w : x.words()) mix(w);
    mix(y ? 1 : 0);
    if (recording_) events_.push_back({is_example, x, y});
  }

  BooleanFunction f_;
  Distribution dist_;
  std::uint64_t seed_;
  std::uint64_t budget_;
  Rng example_rng_;
  Rng algo_rng_;
  std::uint64_t bb_ = 0;
  std::uint64_t rex_ = 0;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
  bool recording_ = false;
  std::vector<Event> events_;
};

/// f restricted by q: queries overwrite the restricted coordinates.
class RestrictedOracle final : public Oracle {
public:
  RestrictedOracle(Oracle& base, RestrictionSeq q) : base_(base), q_(std::move(q)) {}
  [[nodiscard]] std::size_t num_vars() const override { return base_.num_vars(); }
  bool query(const Assignment& x) override { return base_.query(q_.apply(x)); }
  LabeledExample example() override {
    auto e = base_.example();
    e.y = base_.query(q_.apply(e.x));
    return e;
  }
  Rng& rng() override { return base_.rng(); }

private:
  Oracle& base_;
  RestrictionSeq q_;
};

/// T(x) = f(x xor a). An example (x, f(x)) of f is an example (x xor a, f(x))
/// of T under the shifted distribution, so examples cost nothing extra.
class ShiftedOracle final : public Oracle {
public:
  ShiftedOracle(Oracle& base, Assignment a) : base_(base), a_(std::move(a)) {}
  [[nodiscard]] std::size_t num_vars() const override { return base_.num_vars(); }
  bool query(const Assignment& x) override { return base_.query(x ^ a_); }
  LabeledExample example() override {
    auto e = base_.example();
    e.x ^= a_;
    return e;
  }
  Rng& rng() override { return base_.rng(); }
  [[nodiscard]] const Assignment& shift() const noexcept { return a_; }

private:
  Oracle& base_;
  Assignment a_;
};

/// f restricted to the listed variables with every other variable fixed to 0,
/// seen as a function of k = vars.size() inputs. Examples are relabelled by
/// one black-box query at the zeroed point.
class ProjectedOracle final : public Oracle {
public:
  ProjectedOracle(Oracle& base, std::vector<Var> vars) : base_(base), vars_(std::move(vars)) {}
  [[nodiscard]] std::size_t num_vars() const override { return vars_.size(); }
  bool query(const Assignment& y) override { return base_.query(lift(y)); }
  LabeledExample example() override {
    auto e = base_.example();
    Assignment y = project(e.x);
    const bool label = base_.query(lift(y));
    return {std::move(y), label};
  }
  Rng& rng() override { return base_.rng(); }

  [[nodiscard]] const std::vector<Var>& vars() const noexcept { return vars_; }

  [[nodiscard]] Assignment lift(const Assignment& y) const {
    Assignment x(base_.num_vars());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (y.get(i)) x.set(vars_[i], true);
    return x;
  }
  [[nodiscard]] Assignment project(const Assignment& x) const {
    Assignment y(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (x.get(vars_[i])) y.set(i, true);
    return y;
  }

private:
  Oracle& base_;
  std::vector<Var> vars_;
};

/// Replaces the example oracle by uniform points labelled with black-box
/// queries, as exact learners under the uniform distribution need.
class UniformExampleOracle final : public Oracle {
public:
  explicit UniformExampleOracle(Oracle& base) : base_(base) {}
  [[nodiscard]] std::size_t num_vars() const override { return base_.num_vars(); }
  bool query(const Assignment& x) override { return base_.query(x); }
  LabeledExample example() override {
    LabeledExample e{Assignment::uniform(base_.num_vars(), base_.rng()), false};
    e.y = base_.query(e.x);
    return e;
  }
  Rng& rng() override { return base_.rng(); }

private:
  Oracle& base_;
};

/// Black box for a derived function whose queries are simulated through a
/// parent oracle; it has no example oracle of its own.
class DerivedOracle final : public Oracle {
public:
  using QueryFn = std::function<bool(const Assignment&)>;
  DerivedOracle(Oracle& parent, std::size_t n, QueryFn fn) : parent_(parent), n_(n), fn_(std::move(fn)) {}
  [[nodiscard]] std::size_t num_vars() const override { return n_; }
  bool query(const Assignment& x) override { return fn_(x); }
  LabeledExample example() override {
    LabeledExample e{Assignment::uniform(n_, parent_.rng()), false};
    e.y = fn_(e.x);
    return e;
  }
  Rng& rng() override { return parent_.rng(); }

private:
  Oracle& parent_;
  std::size_t n_;
  QueryFn fn_;
};

}  // namespace dtlab
