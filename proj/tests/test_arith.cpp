#include <doctest.h>

#include <random>

#include "ppnkit/arith.hpp"

using namespace ppnkit;

TEST_SUITE("arith") {

TEST_CASE("small primes and composites") {
  CHECK(is_prime(Natural(2)));
  CHECK(is_prime(Natural(3)));
  CHECK_FALSE(is_prime(Natural(0)));
  CHECK_FALSE(is_prime(Natural(1)));
  CHECK_FALSE(is_prime(Natural(4)));
  CHECK(is_prime(Natural(47059)));
  CHECK_FALSE(is_prime(Natural(1807)));  // 13 * 139
  CHECK(is_prime(Natural("1729101023519", 10)));
  CHECK(is_prime(Natural("2217342227", 10)));
  CHECK_FALSE(is_prime(Natural("2214502423", 10)));  // 7^2 * 45193927
}

TEST_CASE("is_prime agrees with trial-division sieve up to 1e6") {
  const std::uint32_t limit = 1'000'000;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  for (std::uint32_t n = 0; n <= limit; ++n) {
    bool expected = n >= 2 && !composite[n];
    if (is_prime_u64(n) != expected) {
      CAPTURE(n);
      REQUIRE(is_prime_u64(n) == expected);
    }
  }
  // Spot-check that the mpz entry point routes to the same verdicts.
  for (std::uint32_t n : {2u, 3u, 4u, 999983u, 999984u})
    CHECK(is_prime(Natural(n)) == (n >= 2 && !composite[n]));
}

TEST_CASE("factorize reproduces the quoted factorizations") {
  CHECK(factorize(Natural(1728)).to_string() == "2^6 * 3^3");
  CHECK(factorize(Natural("2214502423", 10)).to_string() == "7^2 * 45193927");
  CHECK(factorize(Natural(1807)).to_string() == "13 * 139");
  CHECK(factorize(Natural(1)).factors.empty());
  CHECK(factorize(Natural(2)).to_string() == "2");
}

TEST_CASE("random factorizations reconstruct and certify") {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1'000'000'000'000ULL);
  for (int i = 0; i < 300; ++i) {
    Natural n(static_cast<unsigned long>(dist(rng)));
    Factorization f = factorize(n);
    CHECK(f.value() == n);
    for (const auto& fp : f.factors) {
      CHECK(is_prime(fp.prime));
      CHECK(fp.exponent >= 1);
    }
    for (std::size_t j = 1; j < f.factors.size(); ++j)
      CHECK(f.factors[j - 1].prime < f.factors[j].prime);
  }
}

TEST_CASE("rational addition reduces exactly") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-10'000, 10'000);
  std::uniform_int_distribution<long> den(1, 10'000);
  for (int i = 0; i < 10'000; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    Rational sum = a + b;
    Rational manual(a.get_num() * b.get_den() + b.get_num() * a.get_den(),
                    a.get_den() * b.get_den());
    manual.canonicalize();
    CHECK(sum == manual);
    CHECK(gcd(Natural(abs(sum.get_num())), Natural(sum.get_den())) == 1);
  }
}

TEST_CASE("probable-prime verdicts above 2^64") {
  Natural big("43572628606668095873923", 10);  // 23-digit prime cofactor
  CHECK(is_prime(big));
  CHECK_FALSE(primality_is_certain(big));
  CHECK(primality_is_certain(Natural("18446744073709551615", 10)));  // 2^64-1

  Natural p("1729101023519", 10), q("2217342227", 10);
  CHECK_FALSE(is_prime(p * q));  // 22-digit semiprime
  CHECK_FALSE(is_prime(big * big));
}

TEST_CASE("next_prime_above") {
  CHECK(next_prime_above(Natural(0)) == 2);
  CHECK(next_prime_above(Natural(2)) == 3);
  CHECK(next_prime_above(Natural(30)) == 31);
  CHECK(next_prime_above(Natural(31)) == 37);
  Natural beyond = next_prime_above(Natural("100000000000000000000", 10));
  CHECK(is_prime(beyond));
  CHECK(beyond > Natural("100000000000000000000", 10));
}

TEST_CASE("factoring effort limit carries the partial result") {
  Natural p = next_prime_above(Natural("1000000000000000", 10));
  Natural q = next_prime_above(Natural("2000000000000000", 10));
  Natural n = 4 * p * q;
  FactorLimits limits;
  limits.trial_division_bound = 1000;
  limits.rho_iteration_budget = 100;  // far too small for 15-digit factors
  try {
    factorize(n, limits);
    FAIL("expected FactorLimitError");
  } catch (const FactorLimitError& e) {
    CHECK(e.partial.value() == 4);
    CHECK(e.unfactored == p * q);
  }
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(Natural(2), Natural(10), Natural(1000)) == 24);
  CHECK(pow_mod(Natural(43), Natural(6), Natural(42)) == 1);
  CHECK(pow_mod(Natural(7), Natural(0), Natural(5)) == 1);
  CHECK_THROWS_AS(pow_mod(Natural(2), Natural(2), Natural(0)), std::domain_error);
}

}  // TEST_SUITE
