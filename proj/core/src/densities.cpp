#include "ellprime/densities.hpp"

#include <cmath>
#include <functional>

namespace ellprime {

namespace {

// Kahan-compensated accumulation of log factors.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double tail_from_quadratic_decay(u64 cutoff) {
  // sum_{p > cutoff} |log factor| <= sum_{n > cutoff} 2/n^2 <= 2/(cutoff-1)
  return 2.0 / static_cast<double>(cutoff - 1);
}

}  // namespace

DensityResult koblitz_constant(u64 cutoff) {
  if (cutoff < 100 || cutoff > PrimeSieve::kMaxLimit)
    throw BoundsError("koblitz_constant: cutoff must be in [100, 1e8]");
  const PrimeSieve primes(cutoff);
  CompensatedSum logs;
  for (u32 p : primes.primes()) {
    // factor = 1 - (p^2-p-1)/((p-1)^3 (p+1)), kept exact before the log
    const i128 pw = p;
    const i128 den = (pw - 1) * (pw - 1) * (pw - 1) * (pw + 1);
    const i128 num = den - (pw * pw - pw - 1);
    logs.add(std::log(static_cast<double>(num) / static_cast<double>(den)));
  }
  DensityResult result;
  result.prime_cutoff = cutoff;
  result.value = std::exp(logs.sum);
  result.tail_bound = tail_from_quadratic_decay(cutoff);
  return result;
}

ExactRatio serre_boundary_factor(i64 D) {
  if (D == 0) throw DomainError("serre_boundary_factor: D must be nonzero");
  const i64 mod4 = ((D % 4) + 4) % 4;
  if (mod4 == 0) return {1, 1};
  if (mod4 != 1)
    throw DomainError(
        "serre_boundary_factor: D must be 0 or 1 mod 4 (fundamental)");
  const u64 absD = static_cast<u64>(D < 0 ? -D : D);
  i64 den = 1;
  for (const auto& f : factorize(absD).factors) {
    const i64 q = static_cast<i64>(f.base);
    den *= q * q * q - 2 * q * q - q + 3;
  }
  // 1 + 1/den = (den + 1)/den
  return {den + 1, den};
}

DensityResult delta_serre(i64 D, u64 cutoff) {
  const ExactRatio boundary = serre_boundary_factor(D);
  DensityResult result = koblitz_constant(cutoff);
  result.value = result.value * static_cast<double>(boundary.num) /
                 static_cast<double>(boundary.den);
  result.tail_bound *= static_cast<double>(boundary.num) /
                       static_cast<double>(boundary.den);
  return result;
}

DensityResult delta_cm_quartic(u64 cutoff) {
  if (cutoff < 100 || cutoff > PrimeSieve::kMaxLimit)
    throw BoundsError("delta_cm_quartic: cutoff must be in [100, 1e8]");
  const PrimeSieve primes(cutoff);
  CompensatedSum logs;
  for (u32 p : primes.primes()) {
    if (p == 2) continue;
    const int chi = (p % 4 == 1) ? 1 : -1;
    const i128 pw = p;
    const i128 den = (pw - chi) * (pw - 1) * (pw - 1);
    const i128 num = den - chi * (pw * pw - pw - 1);
    logs.add(std::log(static_cast<double>(num) / static_cast<double>(den)));
  }
  DensityResult result;
  result.prime_cutoff = cutoff;
  result.value = 0.5 * std::exp(logs.sum);
  result.tail_bound = tail_from_quadratic_decay(cutoff);
  return result;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fb, double fm,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
  if (b <= a) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double scale = std::max(std::abs(whole), 1e-12);
  return adaptive_simpson(f, a, b, fa, fb, fm, whole, rel_tol * scale, 48);
}

}  // namespace

double predicted_count(double x, double delta, u64 d, double x0) {
  if (x0 < 2.0 || x < x0)
    throw DomainError("predicted_count: need 2 <= x0 <= x");
  if (d < 1 || x0 + 1.0 <= static_cast<double>(d))
    throw DomainError("predicted_count: integrand singular, need x0 + 1 > d");
  const double log_d = std::log(static_cast<double>(d));
  auto integrand = [log_d](double t) {
    return 1.0 / ((std::log(t + 1.0) - log_d) * std::log(t));
  };
  return delta * integrate(integrand, x0, x, kQuadratureRelTol);
}

double predicted_count_literal(double x, double delta, double x0) {
  if (x0 < 2.0 || x < x0)
    throw DomainError("predicted_count_literal: need 2 <= x0 <= x");
  auto integrand = [](double t) { return 1.0 / (std::log(t + 1.0) * t); };
  return delta * integrate(integrand, x0, x, kQuadratureRelTol);
}

}  // namespace ellprime
