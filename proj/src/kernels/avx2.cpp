// AVX2 + FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be reached through the dispatcher after a
// runtime CPU check. Lane layout mirrors the four striped accumulators
// of the scalar reference, so results agree to a few ulp.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "kernel_table.hpp"

namespace driftbayes::kernels::detail {
namespace {

inline double hreduce(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);  // (l0+l2, l1+l3)
  return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

double avx2_sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i];
  return hreduce(acc) + tail;
}

double avx2_dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i] * y[i];
  return hreduce(acc) + tail;
}

double avx2_sum_sq_increments(const double* x, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double tail = 0.0;
  for (; i < m; ++i) {
    const double d = x[i + 1] - x[i];
    tail += d * d;
  }
  return hreduce(acc) + tail;
}

ItoSums avx2_ito_sums(const double* b, const double* x, std::size_t n) {
  ItoSums out;
  if (n < 2) return out;
  const std::size_t m = n - 1;
  __m256d acc_bdx = _mm256_setzero_pd();
  __m256d acc_b2 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d bv = _mm256_loadu_pd(b + i);
    const __m256d dx =
        _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
    acc_bdx = _mm256_fmadd_pd(bv, dx, acc_bdx);
    acc_b2 = _mm256_fmadd_pd(bv, bv, acc_b2);
  }
  double pt = 0.0, qt = 0.0;
  for (; i < m; ++i) {
    pt += b[i] * (x[i + 1] - x[i]);
    qt += b[i] * b[i];
  }
  out.sum_b_dx = hreduce(acc_bdx) + pt;
  out.sum_b2 = hreduce(acc_b2) + qt;
  return out;
}

struct SinCosVec {
  __m256d s;
  __m256d c;
};

inline SinCosVec sincos2pi_vec(__m256d xv) {
  const __m256d rint_x =
      _mm256_round_pd(xv, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d r = _mm256_sub_pd(xv, rint_x);
  const __m256d q = _mm256_round_pd(
      _mm256_mul_pd(r, _mm256_set1_pd(4.0)),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d u = _mm256_fnmadd_pd(q, _mm256_set1_pd(0.25), r);
  const __m256d t = _mm256_mul_pd(u, _mm256_set1_pd(kTwoPi));
  const __m256d t2 = _mm256_mul_pd(t, t);

  __m256d ps = _mm256_set1_pd(kSin7);
  ps = _mm256_fmadd_pd(ps, t2, _mm256_set1_pd(kSin6));
  ps = _mm256_fmadd_pd(ps, t2, _mm256_set1_pd(kSin5));
  ps = _mm256_fmadd_pd(ps, t2, _mm256_set1_pd(kSin4));
  ps = _mm256_fmadd_pd(ps, t2, _mm256_set1_pd(kSin3));
  ps = _mm256_fmadd_pd(ps, t2, _mm256_set1_pd(kSin2));
  ps = _mm256_fmadd_pd(ps, t2, _mm256_set1_pd(kSin1));
  ps = _mm256_fmadd_pd(ps, t2, _mm256_set1_pd(1.0));
  ps = _mm256_mul_pd(ps, t);

  __m256d pc = _mm256_set1_pd(kCos8);
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(kCos7));
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(kCos6));
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(kCos5));
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(kCos4));
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(kCos3));
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(kCos2));
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(kCos1));
  pc = _mm256_fmadd_pd(pc, t2, _mm256_set1_pd(1.0));

  // Quadrant rotation keyed by q mod 4.
  const __m128i qi = _mm256_cvtpd_epi32(q);
  const __m128i zero = _mm_setzero_si128();
  const __m128i bit0 =
      _mm_cmpgt_epi32(_mm_and_si128(qi, _mm_set1_epi32(1)), zero);
  const __m128i bit1 =
      _mm_cmpgt_epi32(_mm_and_si128(qi, _mm_set1_epi32(2)), zero);
  const __m256d m_swap =
      _mm256_castsi256_pd(_mm256_cvtepi32_epi64(bit0));
  const __m256d m_negs =
      _mm256_castsi256_pd(_mm256_cvtepi32_epi64(bit1));
  const __m256d m_negc =
      _mm256_castsi256_pd(_mm256_cvtepi32_epi64(_mm_xor_si128(bit0, bit1)));
  const __m256d signbit = _mm256_set1_pd(-0.0);

  SinCosVec out;
  out.s = _mm256_xor_pd(_mm256_blendv_pd(ps, pc, m_swap),
                        _mm256_and_pd(m_negs, signbit));
  out.c = _mm256_xor_pd(_mm256_blendv_pd(pc, ps, m_swap),
                        _mm256_and_pd(m_negc, signbit));
  return out;
}

// Scalar tail using the same coefficients as the vector path.
inline void sincos2pi_tail(double x, double* sp, double* cp) {
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

void avx2_sincos2pi(const double* x, std::size_t n, double* s, double* c) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const SinCosVec sc = sincos2pi_vec(_mm256_loadu_pd(x + i));
    _mm256_storeu_pd(s + i, sc.s);
    _mm256_storeu_pd(c + i, sc.c);
  }
  for (; i < n; ++i) sincos2pi_tail(x[i], s + i, c + i);
}

void avx2_fourier_design(const double* x, std::size_t n, std::size_t m,
                         double* out) {
  const __m256d sqrt2 = _mm256_set1_pd(kSqrt2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const SinCosVec base = sincos2pi_vec(_mm256_loadu_pd(x + i));
    __m256d sk = base.s;
    __m256d ck = base.c;
    std::size_t col = 0;
    while (col < m) {
      _mm256_storeu_pd(out + col * n + i, _mm256_mul_pd(sqrt2, sk));
      ++col;
      if (col >= m) break;
      _mm256_storeu_pd(out + col * n + i, _mm256_mul_pd(sqrt2, ck));
      ++col;
      const __m256d sn = _mm256_fmadd_pd(sk, base.c, _mm256_mul_pd(ck, base.s));
      const __m256d cn = _mm256_fmsub_pd(ck, base.c, _mm256_mul_pd(sk, base.s));
      sk = sn;
      ck = cn;
    }
  }
  for (; i < n; ++i) {
    double s1, c1;
    sincos2pi_tail(x[i], &s1, &c1);
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

const KernelTable& avx2_table() noexcept {
  static const KernelTable table{
      avx2_sum,      avx2_dot,       avx2_sum_sq_increments,
      avx2_ito_sums, avx2_sincos2pi, avx2_fourier_design,
  };
  return table;
}

}  // namespace driftbayes::kernels::detail
