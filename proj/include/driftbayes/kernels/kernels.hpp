#pragma once

#include <cstddef>
#include <string>

namespace driftbayes::kernels {

/// Instruction sets the dispatcher can select between. `scalar` is the
/// portable reference; `avx2` requires AVX2 + FMA and is picked at
/// runtime when the CPU supports it.
enum class Isa { scalar, avx2 };

/// The instruction set currently in use.
Isa active_isa() noexcept;

/// Human-readable name of an ISA ("scalar", "avx2").
std::string isa_name(Isa isa);

/// Force a specific ISA (used by the equivalence tests). Throws
/// ValidationError if the CPU cannot run it. Passing the currently
/// active ISA is always valid.
void force_isa(Isa isa);

/// Re-run CPU detection and select the best available ISA.
void reset_isa() noexcept;

/// Fused Girsanov terms over one uniformly spaced path segment:
///   sum_b_dx = sum_{i<n-1} b[i] * (x[i+1] - x[i])
///   sum_b2   = sum_{i<n-1} b[i]^2
/// where x has n_points entries and b has the n_points-1 left-point
/// drift evaluations.
struct ItoSums {
  double sum_b_dx = 0.0;
  double sum_b2 = 0.0;
};

/// Blocked-pairwise sum of x[0..n). Accumulation order is fixed per ISA.
double sum(const double* x, std::size_t n) noexcept;

/// Blocked-pairwise dot product.
double dot(const double* x, const double* y, std::size_t n) noexcept;

/// Sum of squared consecutive increments: sum_{i<n-1} (x[i+1]-x[i])^2.
double sum_sq_increments(const double* x, std::size_t n) noexcept;

/// See ItoSums.
ItoSums ito_sums(const double* b, const double* x,
                 std::size_t n_points) noexcept;

/// s[i] = sin(2*pi*x[i]), c[i] = cos(2*pi*x[i]). Absolute error below
/// 4e-15 for all finite inputs; exactly 1-periodic in the argument
/// because reduction happens before any rounding-sensitive arithmetic.
void sincos2pi(const double* x, std::size_t n, double* s, double* c) noexcept;

/// Trigonometric design block, column-major with n rows and m columns:
///   out[(2k-2)*n + i] = sqrt(2) * sin(2*pi*k*x[i])
///   out[(2k-1)*n + i] = sqrt(2) * cos(2*pi*k*x[i])
/// for k = 1, 2, ... until m columns are filled.
void fourier_design(const double* x, std::size_t n, std::size_t m,
                    double* out) noexcept;

}  // namespace driftbayes::kernels
