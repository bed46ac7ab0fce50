#include "ppnkit/residues.hpp"

#include <algorithm>

namespace ppnkit {

MuCount mu_parity(const PpnRecord& record) {
  if (record.value % 6 != 0)
    throw std::domain_error("mu_parity requires 6 | K");
  unsigned mu = 0;
  for (const Natural& p : record.primes)
    if (p % 6 == 5) ++mu;
  return {record.value, mu};
}

bool check_mod36(const Natural& K) {
  if (K % 6 != 0) throw std::domain_error("check_mod36 requires 6 | K");
  return K % 36 == 6;
}

ResidueReport residue_ap(const std::vector<Natural>& values, const Natural& modulus,
                         const std::vector<unsigned>& indices) {
  if (modulus < 2) throw std::domain_error("residue_ap requires modulus >= 2");
  if (values.empty()) throw std::domain_error("residue_ap requires nonempty values");
  if (!indices.empty() && indices.size() != values.size())
    throw std::domain_error("residue_ap: indices must match values");

  ResidueReport report;
  report.modulus = modulus;
  report.inputs = values;
  report.residues.reserve(values.size());
  for (const Natural& v : values) report.residues.push_back(v % modulus);
  if (indices.empty()) {
    report.indices.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      report.indices[i] = static_cast<unsigned>(i);
  } else {
    for (std::size_t i = 1; i < indices.size(); ++i)
      if (indices[i] <= indices[i - 1])
        throw std::domain_error("residue_ap: indices must be strictly ascending");
    report.indices = indices;
  }

  // Exact AP against the index weights: residues[i] = start + step*w_i
  // with w_i = indices[i] - indices[0].  Nonnegative constant step; a
  // single value is the degenerate AP (v, 0).
  const Natural& start = report.residues.front();
  if (report.residues.size() == 1) {
    report.ap = ResidueReport::Ap{start, Natural(0)};
    return report;
  }
  if (report.residues[1] >= start) {
    Natural gap = report.residues[1] - start;
    unsigned w1 = report.indices[1] - report.indices[0];
    if (gap % w1 == 0) {
      Natural step = gap / w1;
      bool matches = true;
      for (std::size_t i = 0; i < report.residues.size(); ++i) {
        unsigned w = report.indices[i] - report.indices[0];
        if (report.residues[i] != start + step * w) {
          matches = false;
          break;
        }
      }
      if (matches) report.ap = ResidueReport::Ap{start, step};
    }
  }
  return report;
}

ApModuliReport find_ap_moduli(const std::vector<Natural>& values, const Natural& a,
                              const Natural& d,
                              const std::vector<unsigned>& indices) {
  if (values.empty()) throw std::domain_error("find_ap_moduli requires nonempty values");
  if (!indices.empty() && indices.size() != values.size())
    throw std::domain_error("find_ap_moduli: indices must match values");
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] <= indices[i - 1])
      throw std::domain_error("find_ap_moduli: indices must be strictly ascending");

  ApModuliReport report;
  report.ap_start = a;
  report.ap_step = d;
  if (indices.empty()) {
    report.indices.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      report.indices[i] = static_cast<unsigned>(i);
  } else {
    report.indices = indices;
  }
  unsigned last_weight = report.indices.back() - report.indices.front();
  report.threshold = a + d * last_weight;

  Natural g = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    unsigned w = report.indices[i] - report.indices.front();
    Natural target = a + d * w;
    Integer diff = values[i] - target;
    if (diff != 0) {
      Natural abs_diff = abs(diff);
      report.nonzero_differences.push_back({i, diff, factorize(abs_diff)});
      g = gcd(g, abs_diff);
    }
  }
  report.gcd_of_differences = g;

  if (g == 0) {
    // Every target met exactly: any modulus above the threshold works.
    report.unbounded_family = true;
    return report;
  }

  report.gcd_factorization = factorize(g);
  std::vector<Natural> divisors{1};
  for (const auto& fp : report.gcd_factorization->factors) {
    std::size_t n = divisors.size();
    Natural pe = 1;
    for (unsigned e = 0; e < fp.exponent; ++e) {
      pe *= fp.prime;
      for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pe);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (const Natural& m : divisors)
    if (m > report.threshold) report.moduli.push_back(m);
  return report;
}

ConjectureReport conjecture_checks(const Natural& K, unsigned r) {
  if (K <= 2) throw std::domain_error("conjecture_checks requires K > 2");
  ConjectureReport report;
  report.K = K;
  report.r = r;
  report.divisible_by_6 = K % 6 == 0;
  report.mod36_is_6 = report.divisible_by_6 && K % 36 == 6;
  report.matches_r_minus_2_mod8 = false;
  if (report.mod36_is_6) {
    Natural q = (K - 6) / 36;
    report.quotient36 = q;
    unsigned res8 = static_cast<unsigned>(mpz_fdiv_ui(q.get_mpz_t(), 8));
    report.residue_mod8 = res8;
    report.matches_r_minus_2_mod8 = r >= 2 && res8 == (r - 2) % 8;
  }
  // The mod-288 AP can only continue while 6 + 36(r-2) is a remainder.
  if (r >= 2) {
    unsigned target = 6 + 36 * (r - 2);
    report.ap_extension_possible = target < 288;
    if (report.ap_extension_possible) report.ap_target_mod288 = target;
  } else {
    report.ap_extension_possible = false;
  }
  return report;
}

ConjectureReport conjecture_checks(const PpnRecord& record) {
  return conjecture_checks(record.value, record.factor_count());
}

}  // namespace ppnkit
