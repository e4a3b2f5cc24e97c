// Portable reference kernels. These define the semantics the SIMD
// variants are tested against. Reductions use four striped accumulators
// so the accumulation tree matches the 4-lane vector variants closely.

#include <cmath>
#include <cstddef>

#include "kernel_table.hpp"

namespace driftbayes::kernels::detail {
namespace {

double scalar_sum(const double* x, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 += x[i];
    a1 += x[i + 1];
    a2 += x[i + 2];
    a3 += x[i + 3];
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i];
  return ((a0 + a2) + (a1 + a3)) + tail;
}

double scalar_dot(const double* x, const double* y, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 += x[i] * y[i];
    a1 += x[i + 1] * y[i + 1];
    a2 += x[i + 2] * y[i + 2];
    a3 += x[i + 3] * y[i + 3];
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i] * y[i];
  return ((a0 + a2) + (a1 + a3)) + tail;
}

double scalar_sum_sq_increments(const double* x, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const double d0 = x[i + 1] - x[i];
    const double d1 = x[i + 2] - x[i + 1];
    const double d2 = x[i + 3] - x[i + 2];
    const double d3 = x[i + 4] - x[i + 3];
    a0 += d0 * d0;
    a1 += d1 * d1;
    a2 += d2 * d2;
    a3 += d3 * d3;
  }
  double tail = 0.0;
  for (; i < m; ++i) {
    const double d = x[i + 1] - x[i];
    tail += d * d;
  }
  return ((a0 + a2) + (a1 + a3)) + tail;
}

ItoSums scalar_ito_sums(const double* b, const double* x, std::size_t n) {
  ItoSums out;
  if (n < 2) return out;
  const std::size_t m = n - 1;
  double p0 = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    p0 += b[i] * (x[i + 1] - x[i]);
    p1 += b[i + 1] * (x[i + 2] - x[i + 1]);
    p2 += b[i + 2] * (x[i + 3] - x[i + 2]);
    p3 += b[i + 3] * (x[i + 4] - x[i + 3]);
    q0 += b[i] * b[i];
    q1 += b[i + 1] * b[i + 1];
    q2 += b[i + 2] * b[i + 2];
    q3 += b[i + 3] * b[i + 3];
  }
  double pt = 0.0, qt = 0.0;
  for (; i < m; ++i) {
    pt += b[i] * (x[i + 1] - x[i]);
    qt += b[i] * b[i];
  }
  out.sum_b_dx = ((p0 + p2) + (p1 + p3)) + pt;
  out.sum_b2 = ((q0 + q2) + (q1 + q3)) + qt;
  return out;
}

// Argument reduction: r = x - rint(x) is exact, q = rint(4r) selects
// the quadrant, u = r - q/4 lies in [-1/8, 1/8]. The polynomials then
// cover |t| <= pi/4 and the quadrant rotates the pair back.
inline void sincos2pi_one(double x, double* sp, double* cp) {
  const double r = x - std::nearbyint(x);
  const double q = std::nearbyint(4.0 * r);
  const double u = r - 0.25 * q;
  const double t = u * kTwoPi;
  const double t2 = t * t;
  const double ps =
      t * (1.0 +
           t2 * (kSin1 +
                 t2 * (kSin2 +
                       t2 * (kSin3 +
                             t2 * (kSin4 +
                                   t2 * (kSin5 +
                                         t2 * (kSin6 + t2 * kSin7)))))));
  const double pc =
      1.0 +
      t2 * (kCos1 +
            t2 * (kCos2 +
                  t2 * (kCos3 +
                        t2 * (kCos4 +
                              t2 * (kCos5 +
                                    t2 * (kCos6 +
                                          t2 * (kCos7 + t2 * kCos8)))))));
  switch (static_cast<int>(q) & 3) {
    case 0:
      *sp = ps;
      *cp = pc;
      break;
    case 1:
      *sp = pc;
      *cp = -ps;
      break;
    case 2:
      *sp = -ps;
      *cp = -pc;
      break;
    default:
      *sp = -pc;
      *cp = ps;
      break;
  }
}

void scalar_sincos2pi(const double* x, std::size_t n, double* s, double* c) {
  for (std::size_t i = 0; i < n; ++i) sincos2pi_one(x[i], s + i, c + i);
}

void scalar_fourier_design(const double* x, std::size_t n, std::size_t m,
                           double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double s1, c1;
    sincos2pi_one(x[i], &s1, &c1);
    double sk = s1;
    double ck = c1;
    std::size_t col = 0;
    while (col < m) {
      out[col * n + i] = kSqrt2 * sk;
      ++col;
      if (col >= m) break;
      out[col * n + i] = kSqrt2 * ck;
      ++col;
      const double sn = sk * c1 + ck * s1;
      const double cn = ck * c1 - sk * s1;
      sk = sn;
      ck = cn;
    }
  }
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{
      scalar_sum,      scalar_dot,       scalar_sum_sq_increments,
      scalar_ito_sums, scalar_sincos2pi, scalar_fourier_design,
  };
  return table;
}

}  // namespace driftbayes::kernels::detail
