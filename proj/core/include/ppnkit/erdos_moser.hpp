// The Erdos-Moser congruence 1^n + ... + k^n = (k+1)^n (mod k), its
// PPN-style characterization, and the conditional lower-bound chain on
// nontrivial solutions of the full equation, audited with interval
// arithmetic.
//
// The congruence holds iff 1/k + sum_{p|k} 1/p is an integer and
// (p-1) | n for every p | k; every PPN K solves it with exponent
// n = lcm{p-1 : p | K}.  The bound chain combines the explicit Mertens
// estimate (unconditional form, or Schoenfeld's conditional form under
// RH), an explicit Chebyshev theta lower bound, and the elementary
// pieces 3M < m^4 and the four-term fringe sum.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppnkit/arith.hpp"
#include "ppnkit/interval.hpp"
#include "ppnkit/ppn.hpp"

namespace ppnkit {

// Longest term-by-term loop power_sum_mod will run.
inline constexpr std::uint64_t kDefaultPowerSumDirectCap = 10'000'000;
// em_criterion cross-checks the congruence directly only up to here.
inline constexpr std::uint64_t kDefaultDirectCheckCutoff = 1'000'000;

// sum_{i=1..k} i^n mod m.  When k exceeds the direct cap the sum is
// folded over the period m (q complete blocks plus a partial block),
// which needs at most 2m iterations; if that too exceeds the cap a
// LimitError is thrown.
Natural power_sum_mod(const Natural& k, const Natural& n, const Natural& m,
                      std::uint64_t direct_cap = kDefaultPowerSumDirectCap);

// Truth of the EM congruence by direct modular computation.
bool em_congruence_direct(const Natural& k, const Natural& n,
                          std::uint64_t direct_cap = kDefaultPowerSumDirectCap);

struct EmCheck {
  Natural k, n;
  Rational fraction_sum;               // 1/k + sum_{p|k} 1/p, exact
  bool sum_is_integer = false;
  std::optional<Natural> integer_value;  // set when the sum is an integer
  bool exponent_condition = false;     // (p-1) | n for every p | k
  bool holds_criterion = false;        // both conditions
  std::optional<bool> holds_direct;    // run only when k <= cutoff
};

// Proposition-5 criterion; fills holds_direct when k is small enough to
// evaluate the congruence term by term.
EmCheck em_criterion(const Natural& k, const Natural& n,
                     std::uint64_t direct_cutoff = kDefaultDirectCheckCutoff,
                     const FactorLimits& limits = {});

// lcm{p - 1 : p | K} for a verified PPN.
Natural canonical_exponent(const PpnRecord& record);

enum class BoundMode { unconditional, riemann_hypothesis };
const char* to_string(BoundMode m);

// Enclosure of sum_{p<=x} 1/p: loglog x + B1 widened by the mode's
// explicit envelope (and the stored enclosure of B1 itself).
// Domains: x >= 10372 unconditional, x >= 13.5 under RH.
Interval mertens_estimate(const Interval& x, BoundMode mode,
                          int digits = kDefaultIntervalDigits);

// Lower bound for sum_{p<=x} log p: the interval encloses
// (1 - 1/log^3 x) x, whose lo certifies theta(x).  Domain x >= 89967803.
Interval chebyshev_lower(const Interval& x, int digits = kDefaultIntervalDigits);

// Enclosure of 1/(m-1) + 2/(m+1) + 2/(2m-1) + 4/(2m+1), m >= 2.
Interval fringe_sum(const Natural& m, int digits = kDefaultIntervalDigits);

struct BoundStep {
  std::string name;
  bool confirmed = false;
  std::string inequality;  // human-readable statement that was tested
  std::string lo, hi;      // interval evidence, decimal strings
};

struct BoundReport {
  unsigned omega_min = 33;
  BoundMode mode = BoundMode::unconditional;
  int precision = kDefaultIntervalDigits;
  Rational threshold;        // 4166666/10^6, the displayed intermediate
  Rational fringe_slack;     // 25/6 - threshold
  std::string x_star;        // decimal, as used
  bool x_star_refined = false;

  Interval fringe;            // at m = 2^omega_min + 2
  Interval mertens_at_x_star;
  Interval log_m_lower;       // Chebyshev theta at x_star
  Interval log_k_lower;       // (log 3 + log M)/4, lower-bounds log(k+1)
  Interval exponent_lower;    // base-10 exponent for k itself

  // The inequality the M > prod_{p<=x} p deduction actually needs:
  // mertens hi below 25/6 - fringe hi.  Tracked alongside the
  // spec-displayed threshold comparison in the steps.
  bool mertens_below_requirement = false;

  std::vector<BoundStep> steps;
  std::optional<std::string> first_unconfirmed;
  bool all_confirmed = false;
};

// Run the audited chain at omega_min.  x_star defaults to the published
// values (3.6769e21 unconditionally, 3.6847e21 under RH); refine_x_star
// bisects for the largest x whose Mertens enclosure stays below the
// threshold and uses that instead.
BoundReport moser_bound(unsigned omega_min, BoundMode mode,
                        std::optional<std::string> x_star = std::nullopt,
                        int digits = kDefaultIntervalDigits,
                        bool refine_x_star = false);

struct MertensSample {
  std::uint64_t x = 0;
  Interval recip_sum;     // enclosure of the exact sieved sum 1/p
  Interval estimate_unconditional;
  Interval estimate_rh;
  bool inside_unconditional = false;
  bool inside_rh = false;
  // Filled for x within the Chebyshev domain.
  std::optional<Interval> theta_bound;     // chebyshev_lower(x)
  std::string theta_sum_lo;                // certified lower bound of sum log p
  bool theta_above_bound = false;
};

struct MertensVerifyReport {
  std::uint64_t limit = 0;
  unsigned requested_samples = 0;
  std::vector<MertensSample> samples;
  bool all_inside = true;        // every sample inside both applicable envelopes
  bool all_theta_above = true;   // every in-domain sample above the theta bound
};

// Desk-scale soundness check: sieve to `limit`, take `samples` log-spaced
// sample points in [10372, limit], and test that the exact reciprocal
// sums sit inside both analytic envelopes (and exact theta above the
// Chebyshev bound where its domain applies).
MertensVerifyReport mertens_verify(std::uint64_t limit, unsigned samples,
                                   int digits = kDefaultIntervalDigits,
                                   const std::string& sieve_cache_path = "");

}  // namespace ppnkit
