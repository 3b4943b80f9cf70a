#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace bcx {

// Row-major square matrices used by the matrix-based methods. Counts are
// unsigned and checked; entries that overflow uint64 raise OverflowError.
inline constexpr std::int64_t kInfDist = std::numeric_limits<std::int64_t>::max();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::uint32_t n, T fill) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  std::uint32_t size() const { return n_; }
  T& at(std::uint32_t i, std::uint32_t j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& at(std::uint32_t i, std::uint32_t j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  T* row(std::uint32_t i) { return data_.data() + static_cast<std::size_t>(i) * n_; }
  const T* row(std::uint32_t i) const { return data_.data() + static_cast<std::size_t>(i) * n_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<T> data_;
};

using CountMatrix = SquareMatrix<std::uint64_t>;
using DistMatrix = SquareMatrix<std::int64_t>;
using RealMatrix = SquareMatrix<double>;

// Plain counting product over (uint64, +, *), checked.
CountMatrix mat_mul(const CountMatrix& a, const CountMatrix& b, unsigned threads = 1);
// Mixed product used by the dependency pass: real accumulator times counts.
RealMatrix mat_mul(const RealMatrix& a, const CountMatrix& b, unsigned threads = 1);

// (min, +) product; kInfDist absorbs.
DistMatrix min_plus(const DistMatrix& a, const DistMatrix& b, unsigned threads = 1);

// (min, +) product that also multiplies-and-sums counts along minimizing k.
// Infinite entries carry count 0.
void counting_min_plus(const DistMatrix& da, const CountMatrix& ca, const DistMatrix& db,
                       const CountMatrix& cb, DistMatrix& dist_out, CountMatrix& count_out,
                       unsigned threads = 1);

CountMatrix ew_mult(const CountMatrix& a, const CountMatrix& b, unsigned threads = 1);
RealMatrix ew_mult(const RealMatrix& a, const CountMatrix& b, unsigned threads = 1);
RealMatrix ew_mult(const RealMatrix& a, const RealMatrix& b, unsigned threads = 1);
// Elementwise division with 0/0 = 0; x/0 for x != 0 raises MethodError.
RealMatrix ew_div(const RealMatrix& a, const CountMatrix& b, unsigned threads = 1);
RealMatrix ew_add(const RealMatrix& a, const RealMatrix& b, unsigned threads = 1);

// Zero out every entry of m whose distance differs from level.
void mask_to_level(RealMatrix& m, const DistMatrix& dist, std::int64_t level,
                   unsigned threads = 1);

// Indicator of dist(i,j) == level as a 0/1 count matrix.
CountMatrix level_indicator(const DistMatrix& dist, std::int64_t level, unsigned threads = 1);

}  // namespace bcx
