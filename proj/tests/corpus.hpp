#pragma once

// Shared random corpus for the cross-method suites: 100 unweighted gnp
// graphs, 50 weighted gnp (M <= 10), 50 bounded-degree (d <= 4), all
// connected, n <= 40. Seeds are frozen; changing them silently would
// detach every frozen expectation from its oracle run.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bcx/generators.hpp"
#include "bcx/graph.hpp"

namespace corpus {

struct Entry {
  std::string name;
  bcx::Graph graph;
};

// Dense enough that the connectivity retry loop almost never triggers.
inline double gnp_density(std::uint32_t n) {
  return std::min(1.0, 2.2 * std::log(static_cast<double>(n)) / static_cast<double>(n));
}

inline std::vector<Entry> shared() {
  std::vector<Entry> out;
  out.reserve(200);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t n = 8 + (i * 7) % 33;
    out.push_back({"gnp_u_" + std::to_string(i), bcx::gnp(n, gnp_density(n), 1000 + i)});
  }
  for (int i = 0; i < 50; ++i) {
    const std::uint32_t n = 8 + (i * 5) % 33;
    out.push_back({"gnp_w_" + std::to_string(i), bcx::gnp(n, gnp_density(n), 2000 + i, 10)});
  }
  for (int i = 0; i < 50; ++i) {
    const std::uint32_t n = 8 + (i * 13) % 33;
    const std::uint32_t d = 2 + i % 3;
    out.push_back({"bdeg_" + std::to_string(i), bcx::bounded_degree(n, d, 3000 + i)});
  }
  return out;
}

// Shared comparison rule: |a-b| <= tol * max(1, |a|, |b|).
inline bool close(double a, double b, double tol = 1e-9) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

}  // namespace corpus
