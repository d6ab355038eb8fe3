#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dtlab/decision_tree.hpp"
#include "dtlab/distribution.hpp"
#include "dtlab/function.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/truth_table.hpp"

// File formats use 1-based variable indices; everything in memory is 0-based.
namespace dtlab::io {

using json = nlohmann::ordered_json;

inline json tree_to_json(std::size_t n, const DecisionTree& t) {
  const DecisionTree c = t.compacted();
  json nodes = json::array();
  for (const auto& nd : c.nodes()) {
    if (nd.is_leaf)
      nodes.push_back({{"leaf", nd.value ? 1 : 0}});
    else
      nodes.push_back({{"var", nd.var + 1}, {"lo", nd.lo}, {"hi", nd.hi}});
  }
  return {{"repr", "tree"}, {"n", n}, {"nodes", std::move(nodes)}, {"root", c.root()}};
}

inline json poly_to_json(std::size_t n, const F2Polynomial& p) {
  json ms = json::array();
  for (const auto& m : p.monomials()) {
    json vars = json::array();
    for (Var v : m) vars.push_back(v + 1);
    ms.push_back(std::move(vars));
  }
  return {{"repr", "poly"}, {"n", n}, {"monomials", std::move(ms)}};
}

inline json table_to_json(const TruthTable& t) {
  return {{"repr", "truthtable"}, {"n", t.num_vars()}, {"bits", t.to_hex()}};
}

/// Trees, polynomials and tables keep their form; other representations are
/// written as polynomials.
inline json function_to_json(const BooleanFunction& f) {
  if (auto* t = std::get_if<DecisionTree>(&f.repr())) return tree_to_json(f.num_vars(), *t);
  if (auto* t = std::get_if<TruthTable>(&f.repr())) return table_to_json(*t);
  return poly_to_json(f.num_vars(), f.to_poly());
}

inline BooleanFunction function_from_json(const json& j) {
  try {
    const std::string repr = j.at("repr").get<std::string>();
    const auto n = j.at("n").get<std::size_t>();
    if (repr == "tree") {
      std::vector<DecisionTree::Node> nodes;
      for (const auto& e : j.at("nodes")) {
        DecisionTree::Node nd;
        if (e.contains("leaf")) {
          nd.value = e.at("leaf").get<int>() != 0;
        } else {
          const auto var = e.at("var").get<std::size_t>();
          if (var < 1) throw MalformedFunction("variable indices are 1-based");
          nd.is_leaf = false;
          nd.var = static_cast<Var>(var - 1);
          nd.lo = e.at("lo").get<std::uint32_t>();
          nd.hi = e.at("hi").get<std::uint32_t>();
        }
        nodes.push_back(nd);
      }
      return {n, DecisionTree(std::move(nodes), j.at("root").get<std::uint32_t>())};
    }
    if (repr == "poly") {
      std::vector<Monomial> ms;
      for (const auto& m : j.at("monomials")) {
        std::vector<Var> vars;
        for (const auto& v : m) {
          const auto idx = v.get<std::size_t>();
          if (idx < 1) throw MalformedFunction("variable indices are 1-based");
          vars.push_back(static_cast<Var>(idx - 1));
        }
        ms.emplace_back(std::move(vars));
      }
      return {n, F2Polynomial(std::move(ms))};
    }
    if (repr == "truthtable") return BooleanFunction(TruthTable::from_hex(n, j.at("bits").get<std::string>()));
    throw MalformedFunction("unknown repr '" + repr + "'");
  } catch (const json::exception& e) {
    throw MalformedFunction(std::string("bad function file: ") + e.what());
  }
}

inline json distribution_to_json(const Distribution& d) {
  if (d.kind() == Distribution::Kind::Uniform) return {{"dist", "uniform"}};
  if (d.kind() != Distribution::Kind::Explicit) throw std::invalid_argument("sampler distributions have no file form");
  json pts = json::array();
  for (const auto& [x, p] : d.support()) pts.push_back({{"x", x.to_string()}, {"p", p}});
  return {{"dist", "explicit"}, {"points", std::move(pts)}};
}

inline Distribution distribution_from_json(const json& j) {
  try {
    const std::string kind = j.at("dist").get<std::string>();
    if (kind == "uniform") return Distribution::uniform();
    if (kind == "explicit") {
      std::vector<std::pair<Assignment, double>> pts;
      for (const auto& e : j.at("points"))
        pts.emplace_back(Assignment::from_string(e.at("x").get<std::string>()), e.at("p").get<double>());
      return Distribution::explicit_points(std::move(pts));
    }
    throw std::invalid_argument("unknown distribution '" + kind + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad distribution file: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

/// Single-line by default; `pretty` indents by two spaces.
inline std::string dump(const json& j, bool pretty = false) { return pretty ? j.dump(2) : j.dump(); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

}  // namespace dtlab::io
