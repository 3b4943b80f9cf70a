#pragma once

#include <cstdint>
#include <vector>

#include "bcx/matrix.hpp"

namespace bcx {

// Shared shape for the all-pairs stage of the matrix methods. dist carries
// kInfDist for unreachable pairs, counts 0 there; diagonal is 0 with count 1.
struct ApspResult {
  DistMatrix dist;
  CountMatrix counts;
  std::int64_t diameter = 0;  // max finite dist over distinct pairs
};

// dep.at(s, v) is the dependency of source s on v; both diagonals and
// endpoint columns are zero by construction.
struct DependencyResult {
  RealMatrix dep;
};

using BcVector = std::vector<double>;

}  // namespace bcx
