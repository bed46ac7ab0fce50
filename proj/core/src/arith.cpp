#include "ppnkit/arith.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace ppnkit {

namespace {

// ---------------------------------------------------------------------
// 64-bit fast path
// ---------------------------------------------------------------------

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod_u64(result, base, m);
    base = mul_mod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witness set proven deterministic for all n < 2^64
// (first twelve primes; Sorenson & Webster).
constexpr std::array<std::uint64_t, 12> kMrWitnesses = {2,  3,  5,  7,  11, 13,
                                                        17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kMrWitnesses) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle-finding variant of Pollard rho on 64-bit n, iteration
// polynomial x^2 + c.  Returns 0 when no factor was found within budget.
std::uint64_t brent_rho_u64(std::uint64_t n, std::uint64_t c, std::uint64_t max_iter,
                            std::uint64_t& used) {
  std::uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
  const std::uint64_t batch = 128;
  while (g == 1 && used < max_iter) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (mul_mod_u64(y, y, n) + c) % n;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t lim = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = (mul_mod_u64(y, y, n) + c) % n;
        q = mul_mod_u64(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += lim;
      used += lim;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time from the saved position.
    do {
      ys = (mul_mod_u64(ys, ys, n) + c) % n;
      g = gcd_u64(ys > x ? ys - x : x - ys, n);
    } while (g == 1);
  }
  return (g == n || g == 1) ? 0 : g;
}

// ---------------------------------------------------------------------
// mpz path: Baillie-PSW above 2^64
// ---------------------------------------------------------------------

// Strong Lucas probable-prime test with Selfridge's parameters:
// first D in 5, -7, 9, -11, ... with jacobi(D, n) = -1, P = 1, Q = (1-D)/4.
bool strong_lucas_prp(const mpz_class& n) {
  // Perfect squares never yield jacobi(D, n) = -1; rule them out first.
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  long d_abs = 5;
  int sign = 1;
  mpz_class D;
  for (;;) {
    D = sign > 0 ? mpz_class(d_abs) : mpz_class(-d_abs);
    int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
    // jacobi = 0 means gcd(|D|, n) > 1; |D| << n here, so n is composite.
    if (j == 0) return false;
    if (j == -1) break;
    d_abs += 2;
    sign = -sign;
  }
  mpz_class Q = (1 - D) / 4;

  // n + 1 = d * 2^s
  mpz_class d = n + 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Binary ladder for U_d, V_d (P = 1).
  mpz_class U = 0, V = 2, Qk = 1;
  mpz_class U2, V2, t;
  long top = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 1;
  for (long i = top; i >= 0; --i) {
    // (U, V) <- (U*V, V^2 - 2 Q^k), k doubles
    U2 = U * V % n;
    V2 = (V * V - 2 * Qk) % n;
    Qk = Qk * Qk % n;
    U = U2;
    V = V2;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<unsigned long>(i))) {
      // (U, V) <- ((P U + V)/2, (D U + P V)/2) with P = 1
      t = U + V;
      if (mpz_odd_p(t.get_mpz_t())) t += n;
      t /= 2;
      V = D * U + V;
      if (mpz_odd_p(V.get_mpz_t())) V += n;
      V /= 2;
      V %= n;
      U = t % n;
      Qk = Qk * Q % n;
    }
  }

  if (U % n == 0) return true;
  if (V % n == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = (V * V - 2 * Qk) % n;
    if (V % n == 0) return true;
    Qk = Qk * Qk % n;
  }
  return false;
}

bool miller_rabin_mpz_base(const mpz_class& n, unsigned long a) {
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x;
  mpz_class base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

bool fits_u64(const mpz_class& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && mpz_sgn(n.get_mpz_t()) >= 0;
}

std::uint64_t to_u64(const mpz_class& n) {
  std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 8 * sizeof(unsigned long)) {
    mpz_class hi = n >> 32;
    lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         (mpz_get_ui(n.get_mpz_t()) & 0xffffffffULL);
  }
  return lo;
}

void append_factor(std::vector<FactorPower>& out, const Natural& p) {
  for (auto& f : out) {
    if (f.prime == p) {
      ++f.exponent;
      return;
    }
  }
  out.push_back({p, 1});
}

// Recursively split a (known composite) 64-bit cofactor with Brent rho.
void factor_u64_rho(std::uint64_t n, std::vector<FactorPower>& out,
                    std::uint64_t budget, std::uint64_t& used) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    append_factor(out, Natural(static_cast<unsigned long>(n)));
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    if (used >= budget)
      throw FactorLimitError("factoring effort exhausted", {}, Natural());
    std::uint64_t g = brent_rho_u64(n, c, budget, used);
    if (g != 0) {
      factor_u64_rho(g, out, budget, used);
      factor_u64_rho(n / g, out, budget, used);
      return;
    }
  }
}

// Brent rho on mpz, same fixed c sequence.  Returns 0 on failure.
mpz_class brent_rho_mpz(const mpz_class& n, unsigned long c, std::uint64_t max_iter,
                        std::uint64_t& used) {
  mpz_class y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1;
  const std::uint64_t batch = 128;
  while (g == 1 && used < max_iter) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t lim = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += lim;
      used += lim;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      g = gcd(mpz_class(abs(ys - x)), n);
    } while (g == 1);
  }
  if (g == n || g == 1) return 0;
  return g;
}

void factor_mpz_rho(const mpz_class& n, std::vector<FactorPower>& out,
                    std::uint64_t budget, std::uint64_t& used) {
  if (n == 1) return;
  if (fits_u64(n)) {
    factor_u64_rho(to_u64(n), out, budget, used);
    return;
  }
  if (is_prime(n)) {
    append_factor(out, n);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    if (used >= budget)
      throw FactorLimitError("factoring effort exhausted", {}, n);
    mpz_class g = brent_rho_mpz(n, c, budget, used);
    if (g != 0) {
      factor_mpz_rho(g, out, budget, used);
      factor_mpz_rho(n / g, out, budget, used);
      return;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& f : factors) {
    Natural pe;
    mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    v *= pe;
  }
  return v;
}

std::vector<Natural> Factorization::primes() const {
  std::vector<Natural> ps;
  ps.reserve(factors.size());
  for (const auto& f : factors) ps.push_back(f.prime);
  return ps;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const FactorPower& f) { return f.exponent == 1; });
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " * ";
    s += f.prime.get_str();
    if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

// ---------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------

bool primality_is_certain(const Natural& n) { return fits_u64(n); }

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin_u64(n);
}

bool is_prime(const Natural& n) {
  if (mpz_sgn(n.get_mpz_t()) <= 0) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  // Baillie-PSW: MR base 2 plus strong Lucas.  No composite is known
  // to pass, but the verdict above 2^64 is "strong probable prime".
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (!miller_rabin_mpz_base(n, 2)) return false;
  return strong_lucas_prp(n);
}

Natural next_prime_above(const Natural& n) {
  Natural c = n < 2 ? Natural(2) : Natural(n + 1);
  if (c > 2 && mpz_even_p(c.get_mpz_t())) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

// ---------------------------------------------------------------------
// Factoring
// ---------------------------------------------------------------------

Factorization factorize(const Natural& n, const FactorLimits& limits) {
  if (mpz_sgn(n.get_mpz_t()) <= 0)
    throw std::domain_error("factorize: n must be >= 1");
  Factorization result;
  if (n == 1) return result;

  mpz_class rest = n;
  // Trial division by 2, 3 then a 6k +/- 1 wheel up to the bound.
  for (std::uint64_t p : {2ULL, 3ULL}) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      append_factor(result.factors, Natural(static_cast<unsigned long>(p)));
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  for (std::uint64_t p = 5; p <= limits.trial_division_bound; p += 6) {
    for (std::uint64_t cand : {p, p + 2}) {
      if (mpz_cmp_ui(rest.get_mpz_t(), 1) == 0) break;
      // Stop early when cand^2 > rest (rest is then prime).
      if (fits_u64(rest)) {
        std::uint64_t r64 = to_u64(rest);
        if (cand > r64 / cand) {
          p = limits.trial_division_bound + 1;
          break;
        }
      }
      while (mpz_divisible_ui_p(rest.get_mpz_t(), cand)) {
        append_factor(result.factors, Natural(static_cast<unsigned long>(cand)));
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), cand);
      }
    }
  }

  if (rest != 1) {
    std::uint64_t used = 0;
    try {
      factor_mpz_rho(rest, result.factors, limits.rho_iteration_budget, used);
    } catch (const FactorLimitError&) {
      std::sort(result.factors.begin(), result.factors.end(),
                [](const FactorPower& a, const FactorPower& b) {
                  return a.prime < b.prime;
                });
      Natural remaining = n / result.value();
      throw FactorLimitError("factoring effort exhausted for " + n.get_str(),
                             result, remaining);
    }
  }

  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorPower& a, const FactorPower& b) {
              return a.prime < b.prime;
            });
  return result;
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Natural lcm(const Natural& a, const Natural& b) {
  Natural l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Natural pow_mod(const Natural& base, const Natural& exp, const Natural& m) {
  if (m < 1) throw std::domain_error("pow_mod: modulus must be >= 1");
  Natural r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace ppnkit
