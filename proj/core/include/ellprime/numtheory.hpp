#pragma once

// Integer and prime utilities shared by every other module: sieve,
// factorization, arithmetic functions, modular arithmetic.

#include <cstdint>
#include <optional>
#include <vector>

#include "ellprime/errors.hpp"

namespace ellprime {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 inv_mod(u64 a, u64 m);  // DomainError if gcd(a, m) != 1
u64 isqrt_u64(u64 n);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

/// Sieve of Eratosthenes up to `limit` (2 <= limit <= 10^8), immutable after
/// construction and safe to share across threads.
class PrimeSieve {
 public:
  static constexpr u64 kMaxLimit = 100'000'000;

  explicit PrimeSieve(u64 limit);

  u64 limit() const { return limit_; }
  bool is_prime(u64 n) const;
  const std::vector<u32>& primes() const { return primes_; }

  /// pi(x) for x <= limit.
  u64 count_leq(u64 x) const;

 private:
  u64 limit_;
  std::vector<u64> bits_;
  std::vector<u32> primes_;
};

inline PrimeSieve sieve(u64 limit) { return PrimeSieve(limit); }

struct PrimePower {
  u64 base;
  u32 exponent;
  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // bases strictly ascending

  u64 value() const;
  std::vector<u64> divisors() const;  // ascending
  bool is_squarefree() const;
};

/// Complete factorization by trial division, 1 <= n <= 10^12.
Factorization factorize(u64 n);

int moebius(u64 n);
u64 euler_phi(u64 n);

/// (base, exponent) when n = p^k with k >= 1, nullopt otherwise.
std::optional<PrimePower> von_mangoldt_exact(u64 n);

/// Lambda(n) = log p when n = p^k, else 0. Natural log.
double von_mangoldt(u64 n);

/// Quadratic residue symbol (a|p) via Euler's criterion; p must be an odd
/// prime.
int legendre(i64 a, u64 p);

/// Kronecker symbol (a|n), defined for all integers. Used for splitting
/// conditions of quadratic fields.
int kronecker(i64 a, i64 n);

/// Tonelli-Shanks square root mod an odd prime, deterministic (smallest
/// nonresidue), returning the smaller of the two roots; nullopt when a is a
/// nonresidue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

}  // namespace ellprime
