#include "ppnkit/erdos_moser.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "ppnkit/sieve.hpp"

namespace ppnkit {

namespace {

// Mertens's constant B1 = lim (sum_{p<=x} 1/p - log log x), stored as a
// published 50-digit enclosure (OEIS A077761).
const char* kMertensLo = "0.26149721284764278375542683860869585905156664826119";
const char* kMertensHi = "0.26149721284764278375542683860869585905156664826120";

const Rational kUncondDomain(10372);            // x >= 10372
const Rational kRhDomain(27, 2);                // x >= 13.5
const Rational kChebyshevDomain(89967803);      // x >= 89967803

bool fits_u64_local(const mpz_class& n) {
  return mpz_sgn(n.get_mpz_t()) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64_local(const mpz_class& n) {
  return mpz_get_ui(n.get_mpz_t());
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_small(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// sum_{i=1..count} i^n mod m by plain term-by-term summation.
Natural direct_power_sum(const Natural& count, const Natural& n, const Natural& m) {
  if (count == 0) return Natural(0);
  if (fits_u64_local(m) && fits_u64_local(n) && fits_u64_local(count)) {
    std::uint64_t mm = to_u64_local(m), nn = to_u64_local(n),
                  kk = to_u64_local(count);
    std::uint64_t acc = 0;
    for (std::uint64_t i = 1; i <= kk; ++i) {
      acc += pow_mod_small(i % mm, nn, mm);
      if (acc >= mm) acc -= mm;
    }
    return Natural(static_cast<unsigned long>(acc));
  }
  Natural acc = 0;
  for (Natural i = 1; i <= count; ++i) {
    acc += pow_mod(i % m, n, m);
    acc %= m;
  }
  return acc;
}

}  // namespace

Natural power_sum_mod(const Natural& k, const Natural& n, const Natural& m,
                      std::uint64_t direct_cap) {
  if (m < 1) throw std::domain_error("power_sum_mod: modulus must be >= 1");
  if (k <= direct_cap) return direct_power_sum(k, n, m);
  // Fold over the period: i^n mod m depends on i mod m only, so
  //   sum_{i=1..k} = (k div m) * sum over one full block + partial block.
  if (m > direct_cap)
    throw LimitError("power_sum_mod: k and m both exceed the direct cap of " +
                     std::to_string(direct_cap));
  Natural blocks = k / m;
  Natural partial = k % m;
  Natural block_sum = direct_power_sum(m, n, m);
  Natural result = (blocks % m) * block_sum + direct_power_sum(partial, n, m);
  return result % m;
}

bool em_congruence_direct(const Natural& k, const Natural& n,
                          std::uint64_t direct_cap) {
  if (k < 1 || n < 1)
    throw std::domain_error("em_congruence_direct: k, n must be >= 1");
  Natural lhs = power_sum_mod(k, n, k, direct_cap);
  Natural rhs = pow_mod((k + 1) % k, n, k);
  return lhs == rhs;
}

EmCheck em_criterion(const Natural& k, const Natural& n,
                     std::uint64_t direct_cutoff, const FactorLimits& limits) {
  if (k < 1 || n < 1) throw std::domain_error("em_criterion: k, n must be >= 1");
  EmCheck check;
  check.k = k;
  check.n = n;

  Factorization f = factorize(k, limits);
  Rational sum(1);
  sum /= Rational(k);
  bool divisible = true;
  for (const auto& fp : f.factors) {
    sum += Rational(1) / Rational(fp.prime);
    if ((n % (fp.prime - 1)) != 0) divisible = false;
  }
  sum.canonicalize();
  check.fraction_sum = sum;
  check.sum_is_integer = sum.get_den() == 1;
  if (check.sum_is_integer) check.integer_value = Natural(sum.get_num());
  check.exponent_condition = divisible;
  check.holds_criterion = check.sum_is_integer && divisible;
  if (k <= direct_cutoff) check.holds_direct = em_congruence_direct(k, n);
  return check;
}

Natural canonical_exponent(const PpnRecord& record) {
  Natural l = 1;
  for (const Natural& p : record.primes) l = lcm(l, p - 1);
  return l;
}

const char* to_string(BoundMode m) {
  return m == BoundMode::unconditional ? "unconditional" : "riemann-hypothesis";
}

Interval mertens_estimate(const Interval& x, BoundMode mode, int digits) {
  const Rational& domain =
      mode == BoundMode::unconditional ? kUncondDomain : kRhDomain;
  if (!x.lo_at_least(domain))
    throw std::domain_error(std::string("mertens_estimate: x below the ") +
                            to_string(mode) + " domain");

  Interval log_x = x.log();
  Interval center = log_x.log() + Interval::from_endpoints(kMertensLo, kMertensHi, digits);

  Interval envelope(digits);
  if (mode == BoundMode::unconditional) {
    // 1/(10 log^2 x) + 4/(15 log^3 x)
    Interval log2 = log_x * log_x;
    Interval log3 = log2 * log_x;
    Interval ten = Interval::from_natural(10, digits);
    Interval fifteen = Interval::from_natural(15, digits);
    Interval four = Interval::from_natural(4, digits);
    envelope = Interval::from_natural(1, digits) / (ten * log2) +
               four / (fifteen * log3);
  } else {
    // (3 log x + 4)/(8 pi sqrt x)
    Interval numerator =
        Interval::from_natural(3, digits) * log_x + Interval::from_natural(4, digits);
    Interval denominator =
        Interval::from_natural(8, digits) * Interval::pi(digits) * x.sqrt();
    envelope = numerator / denominator;
  }

  // Widen symmetrically by the envelope's upper bound.
  Interval widened = center + envelope;
  Interval result(digits);
  mpfr_sub(result.lo(), center.lo(), envelope.hi(), MPFR_RNDD);
  mpfr_set(result.hi(), widened.hi(), MPFR_RNDU);
  return result;
}

Interval chebyshev_lower(const Interval& x, int digits) {
  if (!x.lo_at_least(kChebyshevDomain))
    throw std::domain_error("chebyshev_lower: x below domain 89967803");
  Interval log_x = x.log();
  Interval log3 = log_x * log_x * log_x;
  Interval one = Interval::from_natural(1, digits);
  return (one - one / log3) * x;
}

Interval fringe_sum(const Natural& m, int digits) {
  if (m < 2) throw std::domain_error("fringe_sum: m must be >= 2");
  Rational sum = Rational(1) / Rational(m - 1) + Rational(2) / Rational(m + 1) +
                 Rational(2) / Rational(2 * m - 1) + Rational(4) / Rational(2 * m + 1);
  sum.canonicalize();
  return Interval::from_rational(sum, digits);
}

namespace {

std::string rational_to_decimal_string(const Rational& q, int significant) {
  Interval point = Interval::from_rational(q, significant + 4);
  return point.lo_string(significant);
}

// Largest x (as an exact rational) whose Mertens enclosure stays below
// the threshold, found by bisection over [lower_hint, upper_hint].
Rational bisect_x_star(BoundMode mode, const Rational& threshold, int digits) {
  Rational lo(Natural("1000000000000000000000", 10));   // 1e21: comfortably passing
  Rational hi(Natural("10000000000000000000000", 10));  // 1e22: comfortably failing
  for (int iter = 0; iter < 120; ++iter) {
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    Interval est = mertens_estimate(Interval::from_rational(mid, digits), mode, digits);
    if (est.hi_less_than(threshold))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

void push_step(BoundReport& report, std::string name, bool confirmed,
               std::string inequality, const Interval& evidence) {
  BoundStep step;
  step.name = std::move(name);
  step.confirmed = confirmed;
  step.inequality = std::move(inequality);
  step.lo = evidence.lo_string(12);
  step.hi = evidence.hi_string(12);
  if (!confirmed && !report.first_unconfirmed) report.first_unconfirmed = step.name;
  report.steps.push_back(std::move(step));
}

}  // namespace

BoundReport moser_bound(unsigned omega_min, BoundMode mode,
                        std::optional<std::string> x_star, int digits,
                        bool refine_x_star) {
  if (omega_min < 1) throw std::domain_error("moser_bound: omega_min must be >= 1");

  BoundReport report;
  report.omega_min = omega_min;
  report.mode = mode;
  report.precision = digits;
  report.threshold = Rational(4166666, 1000000);
  report.threshold.canonicalize();
  report.fringe_slack = Rational(25, 6) - report.threshold;
  report.fringe_slack.canonicalize();

  // Step 1: k > 2^omega_min makes the fringe terms smaller than the slack
  // between 25/6 and the displayed threshold, so sum_{p|M} 1/p > threshold.
  Natural m_min;
  mpz_ui_pow_ui(m_min.get_mpz_t(), 2, omega_min);
  m_min += 2;  // smallest m = k+1 with k > 2^omega_min
  report.fringe = fringe_sum(m_min, digits);
  bool fringe_ok = report.fringe.hi_less_than(report.fringe_slack);
  push_step(report, "fringe-slack", fringe_ok,
            "fringe(2^omega+2) < 25/6 - 4.166666", report.fringe);

  // Step 2: Mertens enclosure at x_star sits below the threshold, hence
  // below sum_{p|M} 1/p, hence M > prod_{p<=x_star} p.
  std::string x_text = x_star.value_or(
      mode == BoundMode::unconditional ? "3.6769e21" : "3.6847e21");
  Rational x_exact = parse_decimal(x_text);
  if (refine_x_star) {
    x_exact = bisect_x_star(mode, report.threshold, digits);
    x_text = rational_to_decimal_string(x_exact, 24);
    report.x_star_refined = true;
  }
  report.x_star = x_text;
  Interval x_interval = Interval::from_rational(x_exact, digits);
  report.mertens_at_x_star = mertens_estimate(x_interval, mode, digits);
  bool mertens_ok = report.mertens_at_x_star.hi_less_than(report.threshold);
  push_step(report, "mertens-below-threshold", mertens_ok,
            "mertens(x_star).hi < 4.166666", report.mertens_at_x_star);

  // What the M > prod p deduction actually needs: below 25/6 - fringe.
  Rational requirement = Rational(25, 6);
  {
    // subtract the fringe's upper bound, conservatively
    Interval req = Interval::from_rational(requirement, digits) - report.fringe;
    report.mertens_below_requirement =
        mpfr_cmp(report.mertens_at_x_star.hi(), req.lo()) < 0;
  }

  // Step 3: log M > theta(x_star) lower bound.
  report.log_m_lower = chebyshev_lower(x_interval, digits);
  bool cheb_ok = report.log_m_lower.is_positive();
  push_step(report, "chebyshev-theta", cheb_ok,
            "log M > (1 - 1/log^3 x) x > 0", report.log_m_lower);

  // Step 4: 3M < m^4 gives log(k+1) > (log 3 + log M)/4.
  Interval log3 = Interval::log_of_ui(3, digits);
  report.log_k_lower = (log3 + report.log_m_lower) /
                       Interval::from_natural(4, digits);
  bool logk_ok = report.log_k_lower.is_positive();
  push_step(report, "log-k", logk_ok, "log(k+1) > (log 3 + log M)/4",
            report.log_k_lower);

  // Step 5: base-10 exponent for k itself; k = m - 1 >= m/2 absorbs the
  // k+1 -> k step via log k > log(k+1) - log 2.
  Interval log2 = Interval::log_of_ui(2, digits);
  Interval log10 = Interval::log_of_ui(10, digits);
  report.exponent_lower = (report.log_k_lower - log2) / log10;
  bool exp_ok = report.exponent_lower.is_positive();
  push_step(report, "exponent", exp_ok, "log10 k > (log k+1 - log 2)/log 10",
            report.exponent_lower);

  report.all_confirmed = fringe_ok && mertens_ok && cheb_ok && logk_ok && exp_ok;
  return report;
}

MertensVerifyReport mertens_verify(std::uint64_t limit, unsigned samples,
                                   int digits, const std::string& sieve_cache_path) {
  if (limit < 10372)
    throw std::domain_error("mertens_verify: limit must be >= 10372");
  if (samples < 1) throw std::domain_error("mertens_verify: samples must be >= 1");

  MertensVerifyReport report;
  report.limit = limit;
  report.requested_samples = samples;

  // Log-spaced sample points in [10372, limit], deduplicated ascending.
  std::vector<std::uint64_t> points;
  if (samples == 1) {
    points.push_back(limit);
  } else {
    double lo = std::log(10372.0), hi = std::log(static_cast<double>(limit));
    for (unsigned i = 0; i < samples; ++i) {
      double t = lo + (hi - lo) * i / (samples - 1);
      auto x = i + 1 == samples ? limit
                                : static_cast<std::uint64_t>(std::exp(t));
      x = std::max<std::uint64_t>(10372, std::min(x, limit));
      if (points.empty() || x > points.back()) points.push_back(x);
    }
  }

  const mpfr_prec_t prec = decimal_digits_to_bits(digits);
  mpfr_t sum_lo, sum_hi, theta_lo, term_lo, term_hi;
  mpfr_init2(sum_lo, prec);
  mpfr_init2(sum_hi, prec);
  mpfr_init2(theta_lo, prec);
  mpfr_init2(term_lo, prec);
  mpfr_init2(term_hi, prec);
  mpfr_set_zero(sum_lo, 1);
  mpfr_set_zero(sum_hi, 1);
  mpfr_set_zero(theta_lo, 1);

  std::uint64_t chebyshev_domain = 89967803;
  std::size_t next_point = 0;

  auto snapshot = [&](std::uint64_t x) {
    MertensSample sample;
    sample.x = x;
    Interval sum(digits);
    mpfr_set(sum.lo(), sum_lo, MPFR_RNDD);
    mpfr_set(sum.hi(), sum_hi, MPFR_RNDU);
    sample.recip_sum = sum;
    Interval xi = Interval::from_natural(Natural(static_cast<unsigned long>(x)), digits);
    sample.estimate_unconditional =
        mertens_estimate(xi, BoundMode::unconditional, digits);
    sample.estimate_rh = mertens_estimate(xi, BoundMode::riemann_hypothesis, digits);
    sample.inside_unconditional = sample.estimate_unconditional.encloses(sum);
    sample.inside_rh = sample.estimate_rh.encloses(sum);
    if (x >= chebyshev_domain) {
      sample.theta_bound = chebyshev_lower(xi, digits);
      Interval theta(digits);
      mpfr_set(theta.lo(), theta_lo, MPFR_RNDD);
      mpfr_set(theta.hi(), theta_lo, MPFR_RNDU);
      sample.theta_sum_lo = theta.lo_string(20);
      sample.theta_above_bound =
          mpfr_cmp(theta_lo, sample.theta_bound->lo()) > 0;
      report.all_theta_above &= sample.theta_above_bound;
    }
    report.all_inside &= sample.inside_unconditional && sample.inside_rh;
    report.samples.push_back(std::move(sample));
  };

  auto visit = [&](std::uint64_t p) {
    while (next_point < points.size() && p > points[next_point]) {
      snapshot(points[next_point]);
      ++next_point;
    }
    mpfr_set_ui(term_lo, 1, MPFR_RNDD);
    mpfr_div_ui(term_lo, term_lo, p, MPFR_RNDD);
    mpfr_add(sum_lo, sum_lo, term_lo, MPFR_RNDD);
    mpfr_set_ui(term_hi, 1, MPFR_RNDU);
    mpfr_div_ui(term_hi, term_hi, p, MPFR_RNDU);
    mpfr_add(sum_hi, sum_hi, term_hi, MPFR_RNDU);
    mpfr_set_ui(term_lo, p, MPFR_RNDD);
    mpfr_log(term_lo, term_lo, MPFR_RNDD);
    mpfr_add(theta_lo, theta_lo, term_lo, MPFR_RNDD);
    return true;
  };

  if (!sieve_cache_path.empty()) {
    SieveCache cache = sieve_with_cache(limit, sieve_cache_path);
    for (std::uint64_t n = 2; n <= limit; ++n)
      if (cache.is_prime(n) && !visit(n)) break;
  } else {
    for_primes_up_to(limit, visit);
  }
  while (next_point < points.size()) {
    snapshot(points[next_point]);
    ++next_point;
  }

  mpfr_clear(sum_lo);
  mpfr_clear(sum_hi);
  mpfr_clear(theta_lo);
  mpfr_clear(term_lo);
  mpfr_clear(term_hi);
  return report;
}

}  // namespace ppnkit
