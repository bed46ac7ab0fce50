// Exact integer/rational arithmetic, primality and factorization.
//
// Naturals and rationals are GMP values (mpz_class / mpq_class); GMP keeps
// both canonical (no leading-zero limbs, reduced fractions), which is the
// representation invariant everything downstream relies on.
//
// Primality is deterministic Miller-Rabin with the first-twelve-primes
// witness set for n < 2^64, and a Baillie-PSW strong test (MR base 2 plus
// a strong Lucas test with Selfridge parameters) above that.  Verdicts
// beyond the deterministic range are strong-probable-prime only; callers
// that surface primality to users should consult primality_is_certain().
//
// Factoring is trial division up to a configurable bound, then Brent's
// variant of Pollard rho with the fixed polynomial sequence c = 1, 2, 3, ...
// and start value x0 = 2, so runs are reproducible.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppnkit {

using Natural = mpz_class;   // nonnegative in every context we use it
using Integer = mpz_class;
using Rational = mpq_class;  // always stored reduced, positive denominator

// Thrown when an operation exceeds a configured capacity (sieve size,
// Sylvester index, factoring effort, power-sum length).
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorPower {
  Natural prime;
  unsigned exponent = 1;
  bool operator==(const FactorPower&) const = default;
};

struct Factorization {
  std::vector<FactorPower> factors;  // primes strictly ascending

  Natural value() const;             // product of prime^exponent
  std::vector<Natural> primes() const;
  bool squarefree() const;
  std::string to_string() const;     // e.g. "2^6 * 3^3", "1" for empty
};

struct FactorLimits {
  // Trial division bound; also the small-prime table used by the sieve.
  std::uint64_t trial_division_bound = 1'000'000;
  // Total Brent-rho iteration budget across all composite cofactors.
  std::uint64_t rho_iteration_budget = 400'000'000;
};

// Factoring gave up within the configured effort.  The partial result and
// the remaining (composite) cofactor are attached.
class FactorLimitError : public LimitError {
 public:
  FactorLimitError(std::string what, Factorization partial, Natural unfactored)
      : LimitError(std::move(what)),
        partial(std::move(partial)),
        unfactored(std::move(unfactored)) {}

  Factorization partial;
  Natural unfactored;
};

// Largest n for which is_prime is a deterministic statement (2^64 - 1);
// above it the verdict is Baillie-PSW strong-probable-prime.
bool primality_is_certain(const Natural& n);

bool is_prime(const Natural& n);
bool is_prime_u64(std::uint64_t n);

// Smallest prime strictly greater than n (uses is_prime internally).
Natural next_prime_above(const Natural& n);

// Complete factorization of n >= 1; n = 1 yields an empty factor list.
// Throws FactorLimitError when the effort budget is exhausted.
Factorization factorize(const Natural& n, const FactorLimits& limits = {});

// Exact gcd/lcm conveniences over Natural.
Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

// (base^exp) mod m, m >= 1.
Natural pow_mod(const Natural& base, const Natural& exp, const Natural& m);

}  // namespace ppnkit
