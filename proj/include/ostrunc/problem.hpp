// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the ostrunc Project.
//
// Problem description: N independent distributions, the order index k, and
// bounds (A, B) on the k-th smallest value. The per-coordinate images
// a_i = F_i(A) and b_i = F_i(B) are precomputed here because everything
// downstream (regions, mapping, oracle) works in CDF space.

#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ostrunc/distributions.hpp"
#include "ostrunc/errors.hpp"

namespace ostrunc {

struct Problem {
  std::vector<DistributionSpec> dists;
  int k = 1;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::vector<double> a;  // a_i = F_i(lower); exactly 0 when lower = -inf
  std::vector<double> b;  // b_i = F_i(upper); exactly 1 when upper = +inf

  std::size_t size() const { return a.size(); }
};

inline Problem make_problem(std::vector<DistributionSpec> dists, int k,
                            double lower, double upper) {
  if (dists.empty()) throw ParseError("distributions: need at least one");
  const int n = static_cast<int>(dists.size());
  if (k < 1 || k > n) {
    throw ParseError("k out of range (k=" + std::to_string(k) +
                     ", N=" + std::to_string(n) + ")");
  }
  if (std::isnan(lower) || std::isnan(upper)) {
    throw ParseError("bounds: NaN is not a valid bound");
  }
  if (!(lower < upper)) throw ParseError("bounds: requires lower < upper");

  Problem p;
  p.k = k;
  p.lower = lower;
  p.upper = upper;
  p.a.reserve(dists.size());
  p.b.reserve(dists.size());
  for (const DistributionSpec& d : dists) {
    p.a.push_back(std::isinf(lower) ? 0.0 : cdf(d, lower));
    p.b.push_back(std::isinf(upper) ? 1.0 : cdf(d, upper));
  }
  p.dists = std::move(dists);
  return p;
}

// Same distributions and k, new bounds. Used by bench sweeps so one spec file
// serves many intervals.
inline Problem with_bounds(const Problem& p, double lower, double upper) {
  return make_problem(p.dists, p.k, lower, upper);
}

namespace detail {

inline double parse_bound(const nlohmann::json& v, const char* field) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    throw ParseError(std::string("bounds.") + field + ": unknown sentinel \"" +
                     s + "\" (use \"-inf\" or \"inf\")");
  }
  if (!v.is_number()) {
    throw ParseError(std::string("bounds.") + field + ": expected a number or sentinel");
  }
  return v.get<double>();
}

inline Kind parse_kind(const std::string& s, std::size_t index) {
  if (s == "cauchy") return Kind::Cauchy;
  if (s == "normal") return Kind::Normal;
  if (s == "logistic") return Kind::Logistic;
  if (s == "weibull") return Kind::Weibull;
  if (s == "uniform") return Kind::Uniform;
  throw ParseError("distributions[" + std::to_string(index) +
                   "].kind: unknown kind \"" + s + "\"");
}

}  // namespace detail

// Parses the problem document:
//   {"distributions":[{"kind":"cauchy","params":[5,1]}, ...],
//    "k":3, "bounds":{"lower":3,"upper":8}}
// Unbounded sides use the string sentinels "-inf" / "inf". Field order is
// irrelevant; unknown fields are rejected.
inline Problem parse_problem(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");

  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "distributions" && key != "k" && key != "bounds") {
      throw ParseError("unknown field \"" + key + "\"");
    }
  }
  if (!j.contains("distributions")) throw ParseError("distributions: missing required field");
  if (!j.contains("k")) throw ParseError("k: missing required field");
  if (!j.contains("bounds")) throw ParseError("bounds: missing required field");

  const nlohmann::json& jd = j["distributions"];
  if (!jd.is_array() || jd.empty()) {
    throw ParseError("distributions: expected a non-empty array");
  }
  std::vector<DistributionSpec> dists;
  dists.reserve(jd.size());
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const nlohmann::json& e = jd[i];
    const std::string at = "distributions[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(at + ": expected an object");
    for (const auto& item : e.items()) {
      if (item.key() != "kind" && item.key() != "params") {
        throw ParseError(at + ": unknown field \"" + item.key() + "\"");
      }
    }
    if (!e.contains("kind") || !e["kind"].is_string()) {
      throw ParseError(at + ".kind: missing or not a string");
    }
    const Kind kind = detail::parse_kind(e["kind"].get<std::string>(), i);
    if (!e.contains("params") || !e["params"].is_array() || e["params"].size() != 2) {
      throw ParseError(at + ".params: expected an array of two numbers");
    }
    for (const auto& v : e["params"]) {
      if (!v.is_number()) throw ParseError(at + ".params: expected an array of two numbers");
    }
    try {
      dists.push_back(make_spec(kind, e["params"][0].get<double>(),
                                e["params"][1].get<double>()));
    } catch (const ParseError& err) {
      throw ParseError(at + ".params: " + err.what());
    }
  }

  if (!j["k"].is_number_integer()) throw ParseError("k: expected an integer");
  const int k = j["k"].get<int>();

  const nlohmann::json& jb = j["bounds"];
  if (!jb.is_object()) throw ParseError("bounds: expected an object");
  for (const auto& item : jb.items()) {
    if (item.key() != "lower" && item.key() != "upper") {
      throw ParseError("bounds: unknown field \"" + item.key() + "\"");
    }
  }
  if (!jb.contains("lower")) throw ParseError("bounds.lower: missing required field");
  if (!jb.contains("upper")) throw ParseError("bounds.upper: missing required field");
  const double lower = detail::parse_bound(jb["lower"], "lower");
  const double upper = detail::parse_bound(jb["upper"], "upper");

  return make_problem(std::move(dists), k, lower, upper);
}

inline Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read spec file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace ostrunc
