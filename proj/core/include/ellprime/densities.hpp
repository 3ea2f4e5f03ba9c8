#pragma once

// Euler-product density constants and the predicted counting integrals.

#include "ellprime/numtheory.hpp"

namespace ellprime {

struct DensityResult {
  double value = 0.0;
  u64 prime_cutoff = 0;
  double tail_bound = 0.0;  // stated uncertainty from truncating the product
};

/// prod over primes p <= cutoff of (1 - (p^2-p-1) / ((p-1)^3 (p+1))),
/// factors as exact rationals, accumulated in log space with compensated
/// summation. Tail bound from |1 - factor| <= 2/p^2 by integral comparison.
DensityResult koblitz_constant(u64 cutoff);

/// Exact boundary factor of delta(1, E) for squarefree-discriminant fields:
/// 1 + prod_{q | D} 1/(q^3 - 2q^2 - q + 3) when D = 1 (mod 4), 1 when
/// D = 0 (mod 4). DomainError for D = 2, 3 (mod 4).
struct ExactRatio {
  i64 num = 1;
  i64 den = 1;
};
ExactRatio serre_boundary_factor(i64 D);

/// Boundary factor times the truncated Euler product; the rational factor is
/// applied exactly after the product.
DensityResult delta_serre(i64 D, u64 cutoff);

/// (1/2) prod over odd primes p <= cutoff of
/// (1 - chi(p) (p^2-p-1) / ((p-chi(p)) (p-1)^2)) with chi(p) = (-1)^((p-1)/2).
DensityResult delta_cm_quartic(u64 cutoff);

/// delta * integral from x0 to x of dt / ((log(t+1) - log d) log t), by
/// adaptive quadrature to relative tolerance 1e-8. Requires x0 + 1 > d.
double predicted_count(double x, double delta, u64 d, double x0);

/// The literal integrand variant delta * integral of dt / (log(t+1) t),
/// provided for comparison; reports must label which form was used.
double predicted_count_literal(double x, double delta, double x0);

inline constexpr double kQuadratureRelTol = 1e-8;

}  // namespace ellprime
