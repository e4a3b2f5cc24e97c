#pragma once

#include <cstddef>

#include "driftbayes/kernels/kernels.hpp"

namespace driftbayes::kernels::detail {

// Internal dispatch table. One instance per ISA; dispatch.cpp owns the
// active pointer. All entries must behave identically up to floating
// point accumulation order.
struct KernelTable {
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_sq_increments)(const double*, std::size_t);
  ItoSums (*ito_sums)(const double*, const double*, std::size_t);
  void (*sincos2pi)(const double*, std::size_t, double*, double*);
  void (*fourier_design)(const double*, std::size_t, std::size_t, double*);
};

const KernelTable& scalar_table() noexcept;
const KernelTable& avx2_table() noexcept;

// Shared polynomial coefficients for sin/cos on [-pi/4, pi/4]; both
// ISAs evaluate the same Horner forms so results agree to a few ulp.
// sin(t) = t * (1 + t2*(S1 + t2*(S2 + ...))), t2 = t*t
inline constexpr double kSin1 = -1.6666666666666666666666666666667e-01;
inline constexpr double kSin2 = 8.3333333333333333333333333333333e-03;
inline constexpr double kSin3 = -1.9841269841269841269841269841270e-04;
inline constexpr double kSin4 = 2.7557319223985890652557319223986e-06;
inline constexpr double kSin5 = -2.5052108385441718775052108385442e-08;
inline constexpr double kSin6 = 1.6059043836821614599392377170155e-10;
inline constexpr double kSin7 = -7.6471637318198164759011319857881e-13;

// cos(t) = 1 + t2*(C1 + t2*(C2 + ...))
inline constexpr double kCos1 = -5.0e-01;
inline constexpr double kCos2 = 4.1666666666666666666666666666667e-02;
inline constexpr double kCos3 = -1.3888888888888888888888888888889e-03;
inline constexpr double kCos4 = 2.4801587301587301587301587301587e-05;
inline constexpr double kCos5 = -2.7557319223985890652557319223986e-07;
inline constexpr double kCos6 = 2.0876756987868098979210090321201e-09;
inline constexpr double kCos7 = -1.1470745597729724713851697978682e-11;
inline constexpr double kCos8 = 4.7794773323873852974382074911175e-14;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kSqrt2 = 1.4142135623730950488016887242097;

}  // namespace driftbayes::kernels::detail
