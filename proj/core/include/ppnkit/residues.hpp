// Residue structure of the known PPNs: the mod-36 congruence, the 7-term
// arithmetic progression mod 288, its mod-128 complements, and the
// modulus-uniqueness computation behind "no other modulus will do".

#pragma once

#include <optional>
#include <vector>

#include "ppnkit/arith.hpp"
#include "ppnkit/ppn.hpp"

namespace ppnkit {

struct ResidueReport {
  Natural modulus;
  std::vector<Natural> inputs;
  std::vector<Natural> residues;  // inputs[i] mod modulus
  std::vector<unsigned> indices;  // positional 0,1,2,... unless supplied
  // Present iff residues[i] = start + step*(indices[i] - indices[0])
  // exactly (no wraparound).  With default indices this is the plain
  // positional progression residues[i] = start + step*i.
  struct Ap {
    Natural start, step;
  };
  std::optional<Ap> ap;
};

struct MuCount {
  Natural K;
  unsigned mu;  // prime factors of K congruent to -1 mod 6
};

// Requires 6 | K (domain_error otherwise).  For a valid PPN divisible by
// 6 the count is even.
MuCount mu_parity(const PpnRecord& record);

// K == 6 (mod 36)?  Requires 6 | K.
bool check_mod36(const Natural& K);

// Residues of the value list mod modulus, with exact AP detection.
// Detection is positional by default; explicit indices weight the step,
// e.g. rows r = 2,4,6,8 with residues 6,14,22,30 detect as (6, 4).
ResidueReport residue_ap(const std::vector<Natural>& values, const Natural& modulus,
                         const std::vector<unsigned>& indices = {});

struct ApModuliReport {
  Natural ap_start, ap_step;
  std::vector<unsigned> indices;  // weights, positional by default
  Natural threshold;  // the largest target; a modulus must exceed it
  // gcd over i of (values[i] - target_i) with target_i = a + d*(w_i - w_0);
  // zero when every target is met exactly, in which case any modulus
  // above the threshold works.
  Natural gcd_of_differences;
  bool unbounded_family = false;
  std::optional<Factorization> gcd_factorization;  // absent when gcd = 0
  struct Difference {
    std::size_t index;
    Integer value;  // can be negative
    Factorization factorization;  // of |value|, for nonzero values
  };
  std::vector<Difference> nonzero_differences;
  std::vector<Natural> moduli;  // divisors of the gcd above the threshold
};

// All moduli M for which values[i] mod M = a + d*(w_i - w_0) holds with
// genuine remainders (every target below M).  Weights default to list
// position, matching residue_ap.
ApModuliReport find_ap_moduli(const std::vector<Natural>& values, const Natural& a,
                              const Natural& d,
                              const std::vector<unsigned>& indices = {});

struct ConjectureReport {
  Natural K;
  unsigned r;
  bool divisible_by_6;
  bool mod36_is_6;
  std::optional<Natural> quotient36;        // (K-6)/36 when mod36_is_6
  std::optional<unsigned> residue_mod8;     // (K-6)/36 mod 8
  bool matches_r_minus_2_mod8;              // the strengthened prediction
  std::optional<unsigned> ap_target_mod288; // 6 + 36(r-2) when < 288
  bool ap_extension_possible;               // false for r >= 10
};

// Consistency report (never a proof) for the conjectured residue pattern.
// Requires K > 2.
ConjectureReport conjecture_checks(const Natural& K, unsigned r);
ConjectureReport conjecture_checks(const PpnRecord& record);

}  // namespace ppnkit
