#include "ellprime/order_counting.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <vector>

namespace ellprime {

HasseInterval hasse_interval(u64 p) {
  if (p < 5 || !is_prime_u64(p))
    throw DomainError("hasse_interval: p must be a prime >= 5");
  return {p, isqrt_u64(4 * p)};
}

u64 order_naive(const ReducedCurve& curve) {
  const u64 p = curve.p;
  if (p > 10'000'000) throw BoundsError("order_naive: p must be <= 1e7");
  // Legendre symbols by table lookup: one squaring pass beats p rounds of
  // Euler's criterion.
  std::vector<bool> is_square(p, false);
  for (u64 y = 1; y <= (p - 1) / 2; ++y) is_square[mul_mod(y, y, p)] = true;
  i64 sum = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 rhs = mul_mod(mul_mod(x, x, p), x, p);
    rhs = (rhs + mul_mod(curve.a, x, p)) % p;
    rhs = (rhs + curve.b) % p;
    if (rhs != 0) sum += is_square[rhs] ? 1 : -1;
  }
  return static_cast<u64>(static_cast<i64>(p) + 1 + sum);
}

namespace {

u64 pack(const ReducedPoint& pt, u64 p) {
  return pt.infinity ? 0 : (pt.x + 1) * (p + 1) + pt.y;
}

// All N in [lo, hi] with N*point = O, by one baby-step/giant-step pass.
std::vector<u64> annihilators_in_range(const ReducedCurve& curve,
                                       const ReducedPoint& point, u64 lo,
                                       u64 hi) {
  const u64 span = hi - lo + 1;
  const u64 s = isqrt_u64(span) + 1;

  // baby steps: j*point for j in [0, s)
  std::unordered_map<u64, std::vector<u64>> baby;
  baby.reserve(s * 2);
  ReducedPoint walk = ReducedPoint::identity();
  for (u64 j = 0; j < s; ++j) {
    baby[pack(walk, curve.p)].push_back(j);
    walk = detail::add_unchecked(curve, walk, point);
  }

  // giant steps: solve (lo + j + g*s)*point = O
  const ReducedPoint stride =
      negate(curve, scalar_mul(curve, s, point));  // -s*point
  ReducedPoint anchor = negate(curve, scalar_mul(curve, lo, point));
  std::vector<u64> hits;
  for (u64 g = 0; g * s < span + s; ++g) {
    if (auto it = baby.find(pack(anchor, curve.p)); it != baby.end()) {
      for (u64 j : it->second) {
        const u64 n = lo + j + g * s;
        if (n >= lo && n <= hi) hits.push_back(n);
      }
    }
    anchor = detail::add_unchecked(curve, anchor, stride);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

}  // namespace

u64 order_bsgs(const ReducedCurve& curve) {
  const HasseInterval interval = hasse_interval(curve.p);
  const u64 lo = interval.lo(), hi = interval.hi();

  // Deterministic per-curve sampling.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (curve.p * 0x100000001b3ull) ^
                      (curve.a << 20) ^ curve.b);
  std::uniform_int_distribution<u64> pick_x(0, curve.p - 1);

  std::vector<u64> candidates;
  for (int sample = 0; sample < 8; ++sample) {
    ReducedPoint point = ReducedPoint::identity();
    while (point.infinity) {
      const auto lifted = lift_x(curve, pick_x(rng));
      if (!lifted.empty()) point = lifted.front();
    }
    std::vector<u64> hits = annihilators_in_range(curve, point, lo, hi);
    if (candidates.empty()) {
      candidates = std::move(hits);
    } else {
      std::vector<u64> merged;
      std::set_intersection(candidates.begin(), candidates.end(), hits.begin(),
                            hits.end(), std::back_inserter(merged));
      candidates = std::move(merged);
    }
    if (candidates.size() == 1) return candidates.front();
  }
  return order_naive(curve);
}

u64 group_order(const ReducedCurve& curve) {
  return curve.p <= kNaiveOrderThreshold ? order_naive(curve)
                                         : order_bsgs(curve);
}

i64 trace(const ReducedCurve& curve) {
  return static_cast<i64>(curve.p) + 1 - static_cast<i64>(group_order(curve));
}

}  // namespace ellprime
