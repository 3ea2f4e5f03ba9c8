#pragma once

// Exact group orders #E(F_p): Legendre-symbol summation for small p,
// baby-step/giant-step search in the Hasse interval for larger p, and the
// Frobenius trace a_p = p + 1 - #E(F_p).

#include "ellprime/elliptic_curve.hpp"

namespace ellprime {

/// Scans use the Legendre sum below this p and BSGS above it.
inline constexpr u64 kNaiveOrderThreshold = 10'000;

/// Both interval conventions around p, with half width floor(2*sqrt(p)):
/// the group-order interval centered at p+1 (contains #E(F_p)) and the
/// literal interval [p - 2*sqrt(p), p + 2*sqrt(p)] used by the measure
/// module.
struct HasseInterval {
  u64 p = 0;
  u64 half_width = 0;  // floor(2*sqrt(p)), exact

  u64 lo() const { return p + 1 - half_width; }
  u64 hi() const { return p + 1 + half_width; }
  u64 literal_lo() const { return p - half_width; }
  u64 literal_hi() const { return p + half_width; }
  u64 width() const { return 2 * half_width; }
};

HasseInterval hasse_interval(u64 p);

/// n = p + 1 + sum_x (x^3+ax+b | p), guarded to p <= 1e7.
u64 order_naive(const ReducedCurve& curve);

/// The unique Hasse-interval order annihilating sampled points; candidate
/// sets from a BSGS pass per point are intersected over at most 8
/// deterministic random points, falling back to order_naive when ambiguity
/// persists. Always equals order_naive.
u64 order_bsgs(const ReducedCurve& curve);

/// order_naive below kNaiveOrderThreshold, order_bsgs above.
u64 group_order(const ReducedCurve& curve);

/// a_p = p + 1 - #E(F_p); |a_p| <= 2*sqrt(p).
i64 trace(const ReducedCurve& curve);

}  // namespace ellprime
