#include "bcx/matrix.hpp"

#include "bcx/errors.hpp"
#include "bcx/parallel_for.hpp"

namespace bcx {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("path count exceeds uint64");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("path count exceeds uint64");
  return r;
}

namespace {

void require_same_size(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw MethodError("matrix dimension mismatch");
}

std::int64_t dist_add(std::int64_t a, std::int64_t b) {
  if (a == kInfDist || b == kInfDist) return kInfDist;
  return a + b;  // weights are bounded so finite sums stay well inside int64
}

}  // namespace

CountMatrix mat_mul(const CountMatrix& a, const CountMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  CountMatrix out(n, 0);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a.at(static_cast<std::uint32_t>(i), k);
      if (aik == 0) continue;
      const std::uint64_t* brow = b.row(k);
      std::uint64_t* orow = out.row(static_cast<std::uint32_t>(i));
      for (std::uint32_t j = 0; j < n; ++j) {
        if (brow[j] == 0) continue;
        orow[j] = checked_add(orow[j], checked_mul(aik, brow[j]));
      }
    }
  });
  return out;
}

RealMatrix mat_mul(const RealMatrix& a, const CountMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  RealMatrix out(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::uint32_t k = 0; k < n; ++k) {
      const double aik = a.at(static_cast<std::uint32_t>(i), k);
      if (aik == 0.0) continue;
      const std::uint64_t* brow = b.row(k);
      double* orow = out.row(static_cast<std::uint32_t>(i));
      for (std::uint32_t j = 0; j < n; ++j) {
        if (brow[j] == 0) continue;
        orow[j] += aik * static_cast<double>(brow[j]);
      }
    }
  });
  return out;
}

DistMatrix min_plus(const DistMatrix& a, const DistMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  DistMatrix out(n, kInfDist);
  parallel_for(n, threads, [&](std::size_t i) {
    std::int64_t* orow = out.row(static_cast<std::uint32_t>(i));
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::int64_t aik = a.at(static_cast<std::uint32_t>(i), k);
      if (aik == kInfDist) continue;
      const std::int64_t* brow = b.row(k);
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::int64_t cand = dist_add(aik, brow[j]);
        if (cand < orow[j]) orow[j] = cand;
      }
    }
  });
  return out;
}

void counting_min_plus(const DistMatrix& da, const CountMatrix& ca, const DistMatrix& db,
                       const CountMatrix& cb, DistMatrix& dist_out, CountMatrix& count_out,
                       unsigned threads) {
  require_same_size(da.size(), db.size());
  require_same_size(da.size(), ca.size());
  require_same_size(da.size(), cb.size());
  const std::uint32_t n = da.size();
  dist_out = DistMatrix(n, kInfDist);
  count_out = CountMatrix(n, 0);
  parallel_for(n, threads, [&](std::size_t row) {
    const auto i = static_cast<std::uint32_t>(row);
    std::int64_t* drow = dist_out.row(i);
    std::uint64_t* crow = count_out.row(i);
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::int64_t aik = da.at(i, k);
      if (aik == kInfDist) continue;
      const std::uint64_t caik = ca.at(i, k);
      if (caik == 0) continue;
      const std::int64_t* dbrow = db.row(k);
      const std::uint64_t* cbrow = cb.row(k);
      for (std::uint32_t j = 0; j < n; ++j) {
        if (dbrow[j] == kInfDist || cbrow[j] == 0) continue;
        const std::int64_t cand = aik + dbrow[j];
        if (cand < drow[j]) {
          drow[j] = cand;
          crow[j] = checked_mul(caik, cbrow[j]);
        } else if (cand == drow[j]) {
          crow[j] = checked_add(crow[j], checked_mul(caik, cbrow[j]));
        }
      }
    }
  });
}

CountMatrix ew_mult(const CountMatrix& a, const CountMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  CountMatrix out(n, 0);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < n; ++j)
      out.at(r, j) = checked_mul(a.at(r, j), b.at(r, j));
  });
  return out;
}

RealMatrix ew_mult(const RealMatrix& a, const CountMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  RealMatrix out(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < n; ++j)
      out.at(r, j) = a.at(r, j) * static_cast<double>(b.at(r, j));
  });
  return out;
}

RealMatrix ew_mult(const RealMatrix& a, const RealMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  RealMatrix out(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < n; ++j) out.at(r, j) = a.at(r, j) * b.at(r, j);
  });
  return out;
}

RealMatrix ew_div(const RealMatrix& a, const CountMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  RealMatrix out(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint64_t d = b.at(r, j);
      const double x = a.at(r, j);
      if (d == 0) {
        if (x != 0.0) throw MethodError("nonzero dependency over zero path count");
        out.at(r, j) = 0.0;
      } else {
        out.at(r, j) = x / static_cast<double>(d);
      }
    }
  });
  return out;
}

RealMatrix ew_add(const RealMatrix& a, const RealMatrix& b, unsigned threads) {
  require_same_size(a.size(), b.size());
  const std::uint32_t n = a.size();
  RealMatrix out(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < n; ++j) out.at(r, j) = a.at(r, j) + b.at(r, j);
  });
  return out;
}

void mask_to_level(RealMatrix& m, const DistMatrix& dist, std::int64_t level, unsigned threads) {
  require_same_size(m.size(), dist.size());
  const std::uint32_t n = m.size();
  parallel_for(n, threads, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < n; ++j)
      if (dist.at(r, j) != level) m.at(r, j) = 0.0;
  });
}

CountMatrix level_indicator(const DistMatrix& dist, std::int64_t level, unsigned threads) {
  const std::uint32_t n = dist.size();
  CountMatrix out(n, 0);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto r = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < n; ++j)
      if (dist.at(r, j) == level) out.at(r, j) = 1;
  });
  return out;
}

}  // namespace bcx
