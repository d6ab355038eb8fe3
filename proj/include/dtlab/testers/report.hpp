#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dtlab/oracle.hpp"

namespace dtlab::testers {

enum class Decision { Accept, Reject, Inconclusive };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::Accept: return "accept";
    case Decision::Reject: return "reject";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct WalkTrace {
  std::size_t depth = 0;
  std::string verdict;
};

struct TesterReport {
  Decision decision = Decision::Accept;
  std::string reason;
  std::uint64_t bb = 0;
  std::uint64_t rex = 0;
  std::vector<WalkTrace> walks;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::optional<double> elapsed_ms;  // only filled on request; it breaks byte-identical reports

  // Deterministic invariant checks performed along the way (0 when disabled).
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;

  static TesterReport accept(std::string why = {}) { return make(Decision::Accept, std::move(why)); }
  static TesterReport reject(std::string why) { return make(Decision::Reject, std::move(why)); }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["decision"] = to_string(decision);
    j["reason"] = reason;
    j["queries"] = {{"bb", bb}, {"rex", rex}};
    auto w = nlohmann::ordered_json::array();
    for (const auto& t : walks) w.push_back({{"depth", t.depth}, {"verdict", t.verdict}});
    j["walks"] = std::move(w);
    j["params"] = params;
    j["seed"] = seed;
    if (checks > 0) j["invariants"] = {{"checked", checks}, {"violations", violations}};
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
  }

private:
  static TesterReport make(Decision d, std::string why) {
    TesterReport r;
    r.decision = d;
    r.reason = std::move(why);
    return r;
  }
};

/// Runs a tester body on a session: budget exhaustion becomes Inconclusive
/// and the session's counters, seed and the given params are copied into
/// the report.
template <class Body>
TesterReport run_on_session(OracleSession& session, nlohmann::ordered_json params, Body&& body,
                            bool timing = false) {
  const auto start = std::chrono::steady_clock::now();
  TesterReport r;
  try {
    r = body(static_cast<Oracle&>(session));
  } catch (const BudgetExhausted&) {
    r = TesterReport{};
    r.decision = Decision::Inconclusive;
    r.reason = "query budget exhausted";
  }
  r.bb = session.bb_count();
  r.rex = session.rex_count();
  r.seed = session.seed();
  r.params = std::move(params);
  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace dtlab::testers
