#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dtlab/decision_tree.hpp"
#include "dtlab/oracle.hpp"

namespace dtlab::learn {

using Sample = std::vector<LabeledExample>;

struct LearnParams {
  std::size_t s = 1;
  std::size_t d = 0;
  double eps = 0.1;
  double delta = 0.1;
  double occam_C = 4.0;
};

enum class LearnStatus { Ok, NotInClass, TooManyRelevant };

inline const char* to_string(LearnStatus s) {
  switch (s) {
    case LearnStatus::Ok: return "ok";
    case LearnStatus::NotInClass: return "not-in-class";
    case LearnStatus::TooManyRelevant: return "too-many-relevant";
  }
  return "?";
}

struct LearnOutcome {
  LearnStatus status = LearnStatus::Ok;
  DecisionTree tree;
  std::size_t examples = 0;  // sample size drawn by the learner itself
  std::string detail;

  [[nodiscard]] bool ok() const noexcept { return status == LearnStatus::Ok; }

  static LearnOutcome success(DecisionTree t, std::size_t examples = 0) {
    return {LearnStatus::Ok, std::move(t), examples, {}};
  }
  static LearnOutcome failure(LearnStatus s, std::string why, std::size_t examples = 0) {
    return {s, DecisionTree::leaf(false), examples, std::move(why)};
  }
};

inline Sample draw_sample(Oracle& o, std::size_t m) {
  Sample s;
  s.reserve(m);
  for (std::size_t i = 0; i < m; ++i) s.push_back(o.example());
  return s;
}

}  // namespace dtlab::learn
