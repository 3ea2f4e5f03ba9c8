#pragma once

// Division polynomials psi_m evaluated at points of E(F_p), and the two
// equivalent primitive-point tests: mP = O iff psi_m(P) = 0 for nonzero P.

#include <vector>

#include "ellprime/elliptic_curve.hpp"

namespace ellprime {

inline constexpr u64 kMaxPsiIndex = 10'000;

/// Evaluates psi_m at one fixed non-identity point, memoized bottom-up.
///
/// Even-index values carry the 2y factor symbolically (psi_{2k} = 2y * w_{2k}
/// with w in x alone), so evaluation at 2-torsion never divides by zero and
/// correctly yields 0.
class PsiEvaluator {
 public:
  PsiEvaluator(const ReducedCurve& curve, const ReducedPoint& point);

  /// psi_m(P) mod p, 1 <= m <= kMaxPsiIndex.
  u64 eval(u64 m);

  const ReducedCurve& curve() const { return curve_; }

 private:
  void extend(u64 m);

  ReducedCurve curve_;
  u64 x_ = 0, y_ = 0;
  u64 two_y_ = 0;
  u64 f2_ = 0;  // 16 * (x^3+ax+b)^2, the y^4 eliminant
  std::vector<u64> w_;
};

u64 psi_eval(const ReducedCurve& curve, const ReducedPoint& point, u64 m);

/// Lucas-style test: P generates a cyclic group of order n iff (n/q)P != O
/// for every prime q | n. Identity input returns false for n > 1.
bool primitive_test_lucas(const ReducedCurve& curve, const ReducedPoint& point,
                          u64 n, const Factorization& n_factors);

/// Division-polynomial test: P generates iff psi_{n/q}(P) != 0 for every
/// prime q | n. DomainError on the identity (psi undefined at O).
bool primitive_test_psi(const ReducedCurve& curve, const ReducedPoint& point,
                        u64 n, const Factorization& n_factors);

}  // namespace ellprime
