// Primary pseudoperfect numbers: verification, the known table, and the
// constructions that explain it.
//
// K > 1 is a PPN when 1/K + sum_{p|K} 1/p = 1; multiplying by K gives the
// integer form 1 + sum_{p|K} K/p = K, which is what verify_ppn checks.
// Every PPN is squarefree.  Exactly one PPN with r prime factors is known
// for each r <= 8.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ppnkit/arith.hpp"

namespace ppnkit {

struct PpnRecord {
  Natural value;
  std::vector<Natural> primes;  // strictly ascending, product == value
  // False when some prime exceeds the deterministic primality range and
  // carries only a strong-probable-prime verdict.
  bool primality_certain = true;

  unsigned factor_count() const { return static_cast<unsigned>(primes.size()); }
};

enum class PpnRejection {
  not_greater_than_1,
  not_squarefree,
  sum_condition_fails,
};

const char* to_string(PpnRejection r);

struct PpnVerification {
  std::optional<PpnRecord> record;
  std::optional<PpnRejection> rejection;

  bool ok() const { return record.has_value(); }
};

// Factor K and check the integer condition 1 + sum K/p = K.
PpnVerification verify_ppn(const Natural& K, const FactorLimits& limits = {});

// Validated-claim variant for huge inputs: the caller supplies the full
// prime factorization, which is checked (primality, ordering, product)
// before the sum condition is evaluated.  Throws std::invalid_argument
// when the claim itself is bad.
PpnVerification verify_ppn_claimed(const Natural& K, std::vector<Natural> primes);

// The eight known PPNs (r = 1..8), each verified on first use.
const std::vector<PpnRecord>& known_ppns();

// K -> K(K+1) when K+1 is prime; the result is again a PPN.
std::optional<PpnRecord> successor(const PpnRecord& record);

// All PPNs K*p*q obtained by factoring K^2 + 1 = (p - K)(q - K) over
// unordered divisor pairs with p, q prime.  Sorted ascending.
std::vector<PpnRecord> quadratic_extensions(const PpnRecord& record,
                                            const FactorLimits& limits = {});

struct PpnTriple {
  PpnRecord first, second, third;  // K, K' = K(K+1), K'' = K'(K'+1)
  // Present when 6 | K: residues of the triple mod 864, which then form
  // the arithmetic progression (K, K+36, K+72) mod 864.
  std::optional<std::array<Natural, 3>> residues_mod_864;
};

// Requires both K+1 and K^2+K+1 prime; returns the verified chain.
std::optional<PpnTriple> triple(const PpnRecord& record);

// Exhibit a set of proper divisors summing to K (every PPN except 2 is
// pseudoperfect).  Meet-in-the-middle over the divisor set; inputs with
// more than max_proper_divisors proper divisors are rejected with
// LimitError.  Returns std::nullopt when no subset exists (K = 2).
std::optional<std::vector<Natural>> pseudoperfect_subset(
    const PpnRecord& record, std::size_t max_proper_divisors = 32);

}  // namespace ppnkit
