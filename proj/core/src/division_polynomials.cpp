#include "ellprime/division_polynomials.hpp"

namespace ellprime {

PsiEvaluator::PsiEvaluator(const ReducedCurve& curve, const ReducedPoint& point)
    : curve_(curve) {
  if (point.infinity)
    throw DomainError("PsiEvaluator: psi is undefined at the identity");
  if (!on_curve(curve, point))
    throw DomainError("PsiEvaluator: point not on curve");
  const u64 p = curve.p;
  x_ = point.x;
  y_ = point.y;
  two_y_ = (2 * y_) % p;
  u64 f = mul_mod(mul_mod(x_, x_, p), x_, p);
  f = (f + mul_mod(curve.a, x_, p)) % p;
  f = (f + curve.b) % p;
  f2_ = mul_mod(16 % p, mul_mod(f, f, p), p);

  // w_m: psi_m for odd m, psi_m / (2y) for even m, all functions of x alone.
  const u64 a = curve.a, b = curve.b;
  const u64 x2 = mul_mod(x_, x_, p);
  const u64 x3 = mul_mod(x2, x_, p);
  const u64 x4 = mul_mod(x2, x2, p);
  const u64 x6 = mul_mod(x3, x3, p);
  const u64 a2 = mul_mod(a, a, p);

  u64 w3 = mul_mod(3 % p, x4, p);
  w3 = (w3 + mul_mod(mul_mod(6 % p, a, p), x2, p)) % p;
  w3 = (w3 + mul_mod(mul_mod(12 % p, b, p), x_, p)) % p;
  w3 = (w3 + p - a2) % p;

  u64 w4 = x6;
  w4 = (w4 + mul_mod(mul_mod(5 % p, a, p), x4, p)) % p;
  w4 = (w4 + mul_mod(mul_mod(20 % p, b, p), x3, p)) % p;
  w4 = (w4 + p - mul_mod(mul_mod(5 % p, a2, p), x2, p)) % p;
  w4 = (w4 + p - mul_mod(mul_mod(4 % p, mul_mod(a, b, p), p), x_, p)) % p;
  w4 = (w4 + p - mul_mod(8 % p, mul_mod(b, b, p), p)) % p;
  w4 = (w4 + p - mul_mod(a2, a, p)) % p;
  w4 = mul_mod(2 % p, w4, p);  // psi_4 = 4y(...) = 2y * 2(...)

  w_ = {0, 1 % p, 1 % p, w3, w4};
}

void PsiEvaluator::extend(u64 m) {
  const u64 p = curve_.p;
  while (w_.size() <= m) {
    const u64 i = w_.size();
    const u64 k = i / 2;
    u64 next;
    if (i % 2 == 1) {
      // psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3; the even
      // pair contributes (2y)^4 = 16 f^2.
      const u64 t1 = mul_mod(w_[k + 2],
                             mul_mod(w_[k], mul_mod(w_[k], w_[k], p), p), p);
      const u64 t2 = mul_mod(
          w_[k - 1], mul_mod(w_[k + 1], mul_mod(w_[k + 1], w_[k + 1], p), p),
          p);
      if (k % 2 == 0)
        next = (mul_mod(f2_, t1, p) + p - t2) % p;
      else
        next = (t1 + p - mul_mod(f2_, t2, p)) % p;
    } else {
      // psi_{2k} / (2y) = w_k (w_{k+2} w_{k-1}^2 - w_{k-2} w_{k+1}^2)
      const u64 t1 = mul_mod(w_[k + 2], mul_mod(w_[k - 1], w_[k - 1], p), p);
      const u64 t2 = mul_mod(w_[k - 2], mul_mod(w_[k + 1], w_[k + 1], p), p);
      next = mul_mod(w_[k], (t1 + p - t2) % p, p);
    }
    w_.push_back(next);
  }
}

u64 PsiEvaluator::eval(u64 m) {
  if (m < 1 || m > kMaxPsiIndex)
    throw BoundsError("PsiEvaluator: index must be in [1, 1e4]");
  extend(m);
  return m % 2 == 1 ? w_[m] : mul_mod(two_y_, w_[m], curve_.p);
}

u64 psi_eval(const ReducedCurve& curve, const ReducedPoint& point, u64 m) {
  return PsiEvaluator(curve, point).eval(m);
}

bool primitive_test_lucas(const ReducedCurve& curve, const ReducedPoint& point,
                          u64 n, const Factorization& n_factors) {
  if (point.infinity) return n == 1;
  if (!scalar_mul(curve, n, point).infinity) return false;
  for (const auto& f : n_factors.factors) {
    if (scalar_mul(curve, n / f.base, point).infinity) return false;
  }
  return true;
}

bool primitive_test_psi(const ReducedCurve& curve, const ReducedPoint& point,
                        u64 n, const Factorization& n_factors) {
  PsiEvaluator psi(curve, point);  // throws on identity
  for (const auto& f : n_factors.factors) {
    if (psi.eval(n / f.base) == 0) return false;
  }
  return true;
}

}  // namespace ellprime
