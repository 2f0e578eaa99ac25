#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "c5t/detect.hpp"
#include "c5t/graph.hpp"

namespace c5t {

enum class BoundName {
  BgLower,          // 1 / (3*sqrt(3))
  BgUpper,          // 5/4
  AlonShikhelman,   // sqrt(3)/2
  MainTheorem,      // 1 / (2*sqrt(2))
  ErdosSimonovits,  // 1 / (2*sqrt(2))
};

inline constexpr std::array<BoundName, 5> all_bounds = {
    BoundName::BgLower, BoundName::BgUpper, BoundName::AlonShikhelman,
    BoundName::MainTheorem, BoundName::ErdosSimonovits};

// The exact expressions below are part of the contract: they make
// eval_bound(8, MainTheorem) == 8.0 and eval_bound(2, MainTheorem) == 1.0
// hold with equality in binary64. Do not rewrite them algebraically.
inline double bound_value(BoundName name) {
  switch (name) {
    case BoundName::BgLower:
      return 1.0 / (3.0 * std::sqrt(3.0));
    case BoundName::BgUpper:
      return 5.0 / 4.0;
    case BoundName::AlonShikhelman:
      return std::sqrt(3.0) / 2.0;
    case BoundName::MainTheorem:
    case BoundName::ErdosSimonovits:
      return 1.0 / (2.0 * std::sqrt(2.0));
  }
  throw std::invalid_argument("unknown bound");
}

inline const char* bound_id(BoundName name) {
  switch (name) {
    case BoundName::BgLower:
      return "bg_lower";
    case BoundName::BgUpper:
      return "bg_upper";
    case BoundName::AlonShikhelman:
      return "alon_shikhelman";
    case BoundName::MainTheorem:
      return "main_theorem";
    case BoundName::ErdosSimonovits:
      return "erdos_simonovits";
  }
  throw std::invalid_argument("unknown bound");
}

inline BoundName bound_from_id(const std::string& id) {
  for (BoundName b : all_bounds)
    if (id == bound_id(b)) return b;
  throw std::invalid_argument("unknown bound '" + id + "'");
}

// c * n^(3/2) for the chosen constant c.
inline double eval_bound(int n, BoundName name) {
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  return bound_value(name) * std::pow(static_cast<double>(n), 1.5);
}

// All constants here are asymptotic: c*n^(3/2) bounds the triangle count
// only up to a (1+o(1)) factor, so finite-n comparisons are descriptive,
// never a pass/fail test.
inline constexpr const char* kAsymptoticNote =
    "asymptotic constant: c*n^(3/2) is not a pointwise bound at finite n";

struct BoundReport {
  int n = 0;
  std::size_t triangles = 0;
  std::optional<double> ratio;  // triangles / n^(3/2); absent when n = 0
  std::string note = kAsymptoticNote;
};

inline BoundReport make_bound_report(const Graph& g) {
  BoundReport r;
  r.n = g.order();
  r.triangles = count_triangles(g);
  if (r.n > 0)
    r.ratio = static_cast<double>(r.triangles) /
              std::pow(static_cast<double>(r.n), 1.5);
  return r;
}

}  // namespace c5t
