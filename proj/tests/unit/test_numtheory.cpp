#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include "ellprime/numtheory.hpp"

using namespace ellprime;

namespace {

// Trial-division oracle, independent of the sieve and Miller-Rabin.
bool slow_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("sieve lists exactly the primes") {
  const PrimeSieve s(10);
  CHECK(s.primes() == std::vector<u32>{2, 3, 5, 7});

  const PrimeSieve tiny(2);
  CHECK(tiny.primes() == std::vector<u32>{2});

  const PrimeSieve big(1000);
  CHECK(big.primes().size() == 168);  // trial-division count, frozen
  for (u64 n = 0; n <= 1000; ++n) CHECK(big.is_prime(n) == slow_is_prime(n));
  CHECK(big.primes()[0] == 2);
  CHECK(big.primes()[1] == 3);
  CHECK(big.primes()[2] == 5);
  CHECK(std::is_sorted(big.primes().begin(), big.primes().end()));

  CHECK(big.count_leq(1000) == 168);
  CHECK(big.count_leq(1) == 0);
}

TEST_CASE("sieve rejects out-of-range limits") {
  CHECK_THROWS_AS(PrimeSieve(1), BoundsError);
  CHECK_THROWS_AS(PrimeSieve(PrimeSieve::kMaxLimit + 1), BoundsError);
}

TEST_CASE("von mangoldt at prime powers") {
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(von_mangoldt(1) == 0.0);
  CHECK(von_mangoldt(12) == 0.0);

  const auto pp = von_mangoldt_exact(8);
  REQUIRE(pp.has_value());
  CHECK(pp->base == 2);
  CHECK(pp->exponent == 3);
  CHECK_FALSE(von_mangoldt_exact(1).has_value());
  CHECK_FALSE(von_mangoldt_exact(12).has_value());
}

TEST_CASE("von mangoldt agrees with factorize") {
  for (u64 n = 1; n <= 2000; ++n) {
    const bool positive = von_mangoldt(n) > 0.0;
    CHECK(positive == (factorize(n).factors.size() == 1));
  }
}

TEST_CASE("moebius values") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
}

TEST_CASE("euler phi values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(19) == 18);
  // direct gcd count
  u64 count = 0;
  for (u64 m = 1; m < 24; ++m)
    if (std::gcd(m, u64(24)) == 1) ++count;
  CHECK(euler_phi(24) == count);
  CHECK(euler_phi(24) == 8);
}

TEST_CASE("divisor-sum identities up to 1e4") {
  for (u64 n = 1; n <= 10'000; ++n) {
    i64 mu_sum = 0;
    u64 phi_sum = 0;
    for (u64 d : factorize(n).divisors()) {
      mu_sum += moebius(d);
      phi_sum += euler_phi(d);
    }
    CHECK(mu_sum == (n == 1 ? 1 : 0));
    CHECK(phi_sum == n);
  }
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(0, 7) == 0);
  CHECK(legendre(2, 7) == 1);   // 3^2 = 2 mod 7
  CHECK(legendre(2, 3) == -1);  // squares mod 3 are {0,1}
  CHECK_THROWS_AS(legendre(2, 9), DomainError);
  CHECK_THROWS_AS(legendre(2, 2), DomainError);
}

TEST_CASE("sqrt_mod basics") {
  CHECK(sqrt_mod(0, 13) == 0);
  CHECK(sqrt_mod(4, 13) == 2);
  CHECK(sqrt_mod(2, 7) == 3);  // exhaustive: 3^2 = 2, 4^2 = 2 mod 7
  CHECK_FALSE(sqrt_mod(3, 7).has_value());
}

TEST_CASE("sqrt_mod roots verify and match legendre, p <= 997") {
  const PrimeSieve s(997);
  for (u32 p : s.primes()) {
    if (p == 2) continue;
    for (u64 a = 0; a < p; ++a) {
      const auto r = sqrt_mod(a, p);
      if (r) {
        CHECK(mul_mod(*r, *r, p) == a);
        CHECK(*r <= p - *r);  // smaller root returned
      }
      if (p <= 97) {
        const int sym = legendre(static_cast<i64>(a), p);
        CHECK((sym == 1) == (r.has_value() && *r != 0));
        CHECK((sym == 0) == (a == 0));
      }
    }
  }
}

TEST_CASE("factorize basics") {
  CHECK(factorize(1).factors.empty());
  const auto f19 = factorize(19);
  REQUIRE(f19.factors.size() == 1);
  CHECK(f19.factors[0] == PrimePower{19, 1});
  const auto f937 = factorize(937);
  REQUIRE(f937.factors.size() == 1);
  CHECK(f937.factors[0] == PrimePower{937, 1});

  const auto f = factorize(2ull * 2 * 3 * 5 * 5 * 7);
  CHECK(f.value() == 2100);
  CHECK(f.divisors().size() == 36);
  CHECK_THROWS_AS(factorize(0), BoundsError);
  CHECK_THROWS_AS(factorize(1'000'000'000'001ull), BoundsError);
}

TEST_CASE("factorize round-trips against its value") {
  for (u64 n = 1; n <= 5000; ++n) {
    const auto f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t i = 1; i < f.factors.size(); ++i)
      CHECK(f.factors[i - 1].base < f.factors[i].base);
    for (const auto& pf : f.factors) CHECK(slow_is_prime(pf.base));
  }
}

TEST_CASE("deterministic miller-rabin against trial division") {
  for (u64 n = 0; n <= 20'000; ++n) CHECK(is_prime_u64(n) == slow_is_prime(n));
  CHECK(is_prime_u64(1'000'000'007ull));
  CHECK_FALSE(is_prime_u64(1'000'000'007ull * 3));
}

TEST_CASE("kronecker extends legendre") {
  const PrimeSieve s(200);
  for (u32 p : s.primes()) {
    if (p == 2) continue;
    for (i64 a = -30; a <= 30; ++a)
      CHECK(kronecker(a, p) == legendre(a, p));
  }
  // (D|.) is periodic with the right splitting pattern for D = -4
  for (u64 p : {5ull, 13ull, 17ull, 29ull}) CHECK(kronecker(-4, p) == 1);
  for (u64 p : {3ull, 7ull, 11ull, 19ull}) CHECK(kronecker(-4, p) == -1);
}

TEST_CASE("pure operations are safe to call concurrently") {
  const PrimeSieve shared(100'000);
  std::vector<u64> results(8, 0);
  {
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
      workers.emplace_back([&, t] {
        u64 acc = 0;
        for (u64 n = 1000 + t; n <= 3000; n += 8) {
          acc += factorize(n).factors.size();
          acc += static_cast<u64>(moebius(n) + 1);
          acc += euler_phi(n);
          acc += shared.is_prime(n) ? 1 : 0;
        }
        results[t] = acc;
      });
    }
    for (auto& w : workers) w.join();
  }
  for (int t = 0; t < 8; ++t) {
    u64 expected = 0;
    for (u64 n = 1000 + t; n <= 3000; n += 8) {
      expected += factorize(n).factors.size();
      expected += static_cast<u64>(moebius(n) + 1);
      expected += euler_phi(n);
      expected += shared.is_prime(n) ? 1 : 0;
    }
    CHECK(results[t] == expected);
  }
}

TEST_CASE("modular helpers") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(6, 9), DomainError);
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(4 * 877) == 59);
  for (u64 n : {0ull, 1ull, 2ull, 3ull, 4ull, 15ull, 16ull, 17ull,
                (1ull << 52) - 1, 1ull << 52}) {
    const u64 r = isqrt_u64(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
}
