// Exhaustive enumeration of PPNs by depth-first unit-fraction search.
//
// A node holds the ascending primes chosen so far, their product P, and
// the remainder 1 - sum 1/p_i as an exact rational a/b.  The remainder of
// such a node always has denominator exactly P (the numerator P - sum P/p_i
// is coprime to every chosen prime), which the closed-form solvers rely on.
//
// Candidate window at a node with t primes still to choose: the next
// prime p must satisfy b/a < p < (t+1) b/a.  The lower bound holds because
// later terms are positive; the upper bound because the remaining t unit
// fractions plus 1/K are each strictly smaller than 1/p.  Together with
// the value cap this makes the sweep exhaustive.
//
// The last level is solved in closed form (one prime q with
// a/b = (P+1)/(P q), so q = b(P+1)/(a P)); the penultimate level may
// factor the discriminant a + P^2 = (a p - P)(a q - P) instead of
// scanning the window, which is the same identity that powers the
// quadratic K^2 + 1 construction.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppnkit/arith.hpp"
#include "ppnkit/ppn.hpp"

namespace ppnkit {

struct SearchConfig {
  unsigned r_max = 5;
  // Cap on K.  The effective cap per factor count r is
  // min(value_limit, curtiss_bound(r)); unset means the Curtiss bound.
  std::optional<Natural> value_limit;
  // Optional cap on individual primes; a truncated window makes the
  // sweep incomplete and raises SearchLimitError with the frontier.
  std::optional<Natural> prime_limit;
  unsigned parallel_width = 1;
  // Conjecture-dependent speedup: restrict to even K (forces 2 into the
  // prime set).  Whether odd PPNs exist is open; exhaustive sweeps must
  // leave this off.
  bool even_only = false;
  // Penultimate-level discriminant solve; disable to cross-validate
  // against the plain window scan.
  bool two_prime_solve = true;
};

struct SearchOutcome {
  std::vector<PpnRecord> records;  // ascending by value
  bool complete = true;
  std::vector<std::string> frontier;  // nodes where the sweep was cut
};

class SearchLimitError : public LimitError {
 public:
  SearchLimitError(std::string what, SearchOutcome partial)
      : LimitError(std::move(what)), partial(std::move(partial)) {}

  SearchOutcome partial;
};

// Closed-form last-level solve: the prime q completing product P with
// remainder a/b, i.e. q = b(P+1)/(aP) when that is integral and prime.
// The caller still checks q against the chosen primes and the value cap.
std::optional<Natural> leaf_prime(const Natural& P, const Rational& remainder);

// All PPNs with at most r_max prime factors and value within the cap.
// Deterministic ascending output for any parallel_width.
SearchOutcome search_ppns(const SearchConfig& config);

}  // namespace ppnkit
