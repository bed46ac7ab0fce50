#include "ppnkit/ppn.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ppnkit {

const char* to_string(PpnRejection r) {
  switch (r) {
    case PpnRejection::not_greater_than_1: return "not-greater-than-1";
    case PpnRejection::not_squarefree: return "not-squarefree";
    case PpnRejection::sum_condition_fails: return "sum-condition-fails";
  }
  return "unknown";
}

namespace {

// Integer condition 1 + sum K/p = K over an already-validated squarefree
// prime list.
bool sum_condition_holds(const Natural& K, const std::vector<Natural>& primes) {
  Natural acc = 1;
  for (const Natural& p : primes) acc += K / p;
  return acc == K;
}

PpnVerification verified_from_primes(const Natural& K, std::vector<Natural> primes) {
  if (!sum_condition_holds(K, primes))
    return {std::nullopt, PpnRejection::sum_condition_fails};
  bool certain = std::all_of(primes.begin(), primes.end(), primality_is_certain);
  return {PpnRecord{K, std::move(primes), certain}, std::nullopt};
}

}  // namespace

PpnVerification verify_ppn(const Natural& K, const FactorLimits& limits) {
  if (K <= 1) return {std::nullopt, PpnRejection::not_greater_than_1};
  Factorization f = factorize(K, limits);
  if (!f.squarefree()) return {std::nullopt, PpnRejection::not_squarefree};
  return verified_from_primes(K, f.primes());
}

PpnVerification verify_ppn_claimed(const Natural& K, std::vector<Natural> primes) {
  if (K <= 1) return {std::nullopt, PpnRejection::not_greater_than_1};
  Natural product = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0 && primes[i] <= primes[i - 1]) {
      if (primes[i] == primes[i - 1])
        return {std::nullopt, PpnRejection::not_squarefree};
      throw std::invalid_argument("claimed primes must be strictly ascending");
    }
    if (!is_prime(primes[i]))
      throw std::invalid_argument("claimed factor " + primes[i].get_str() +
                                  " is not prime");
    product *= primes[i];
  }
  if (product != K)
    throw std::invalid_argument("claimed factorization does not multiply to " +
                                K.get_str());
  return verified_from_primes(K, std::move(primes));
}

const std::vector<PpnRecord>& known_ppns() {
  static const std::vector<PpnRecord> table = [] {
    struct Row {
      const char* value;
      std::vector<const char*> primes;
    };
    const Row rows[] = {
        {"2", {"2"}},
        {"6", {"2", "3"}},
        {"42", {"2", "3", "7"}},
        {"1806", {"2", "3", "7", "43"}},
        {"47058", {"2", "3", "11", "23", "31"}},
        {"2214502422", {"2", "3", "11", "23", "31", "47059"}},
        {"52495396602", {"2", "3", "11", "17", "101", "149", "3109"}},
        {"8490421583559688410706771261086",
         {"2", "3", "11", "23", "31", "47059", "2217342227", "1729101023519"}},
    };
    std::vector<PpnRecord> out;
    for (const Row& row : rows) {
      std::vector<Natural> primes;
      for (const char* p : row.primes) primes.emplace_back(p, 10);
      PpnVerification v = verify_ppn_claimed(Natural(row.value, 10), std::move(primes));
      if (!v.ok()) throw std::logic_error("embedded PPN table row failed verification");
      out.push_back(*std::move(v.record));
    }
    return out;
  }();
  return table;
}

std::optional<PpnRecord> successor(const PpnRecord& record) {
  Natural next = record.value + 1;
  if (!is_prime(next)) return std::nullopt;
  std::vector<Natural> primes = record.primes;
  primes.push_back(next);  // next = K+1 exceeds every prime factor of K
  PpnVerification v = verify_ppn_claimed(record.value * next, std::move(primes));
  if (!v.ok()) return std::nullopt;
  return v.record;
}

std::vector<PpnRecord> quadratic_extensions(const PpnRecord& record,
                                            const FactorLimits& limits) {
  const Natural& K = record.value;
  Natural target = K * K + 1;
  Factorization f = factorize(target, limits);

  // All divisors of K^2 + 1, ascending.
  std::vector<Natural> divisors{1};
  for (const auto& fp : f.factors) {
    std::size_t n = divisors.size();
    Natural pe = 1;
    for (unsigned e = 0; e < fp.exponent; ++e) {
      pe *= fp.prime;
      for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pe);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  std::vector<PpnRecord> out;
  for (const Natural& d1 : divisors) {
    Natural d2 = target / d1;
    if (d1 > d2) break;
    Natural p = d1 + K, q = d2 + K;
    if (p == q) continue;  // K^2+1 a perfect square; p = q breaks squarefree-ness
    if (K % p == 0 || K % q == 0) continue;
    if (!is_prime(p) || !is_prime(q)) continue;
    std::vector<Natural> primes = record.primes;
    primes.push_back(p);
    primes.push_back(q);
    std::sort(primes.begin(), primes.end());
    PpnVerification v = verify_ppn_claimed(K * p * q, std::move(primes));
    if (v.ok()) out.push_back(*std::move(v.record));
  }
  std::sort(out.begin(), out.end(),
            [](const PpnRecord& a, const PpnRecord& b) { return a.value < b.value; });
  return out;
}

std::optional<PpnTriple> triple(const PpnRecord& record) {
  const Natural& K = record.value;
  Natural k1 = K + 1;
  Natural k2 = K * K + K + 1;  // (K')+1 where K' = K(K+1)
  if (!is_prime(k1) || !is_prime(k2)) return std::nullopt;

  std::optional<PpnRecord> second = successor(record);
  if (!second) return std::nullopt;
  std::optional<PpnRecord> third = successor(*second);
  if (!third) return std::nullopt;

  PpnTriple t{record, *std::move(second), *std::move(third), std::nullopt};
  if (K % 6 == 0) {
    Natural m = 864;  // 6^3 * 4
    t.residues_mod_864 = {K % m, t.second.value % m, t.third.value % m};
  }
  return t;
}

std::optional<std::vector<Natural>> pseudoperfect_subset(
    const PpnRecord& record, std::size_t max_proper_divisors) {
  // Proper divisors of a squarefree K: all products of proper subsets of
  // its prime set (including 1, excluding K).
  std::vector<Natural> divisors{1};
  for (const Natural& p : record.primes) {
    std::size_t n = divisors.size();
    for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * p);
  }
  std::sort(divisors.begin(), divisors.end());
  divisors.pop_back();  // drop K itself

  if (divisors.size() > max_proper_divisors)
    throw LimitError("pseudoperfect subset search over " +
                     std::to_string(divisors.size()) +
                     " divisors exceeds the cap of " +
                     std::to_string(max_proper_divisors));

  // Meet in the middle over the two halves of the divisor list.
  std::size_t half = divisors.size() / 2;
  std::vector<Natural> left(divisors.begin(), divisors.begin() + half);
  std::vector<Natural> right(divisors.begin() + half, divisors.end());

  std::map<Natural, std::uint64_t> right_sums;  // sum -> subset mask
  for (std::uint64_t mask = 0; mask < (1ULL << right.size()); ++mask) {
    Natural s = 0;
    for (std::size_t i = 0; i < right.size(); ++i)
      if (mask >> i & 1) s += right[i];
    right_sums.emplace(std::move(s), mask);
  }

  for (std::uint64_t mask = 0; mask < (1ULL << left.size()); ++mask) {
    Natural s = 0;
    for (std::size_t i = 0; i < left.size(); ++i)
      if (mask >> i & 1) s += left[i];
    if (s > record.value) continue;
    auto it = right_sums.find(record.value - s);
    if (it == right_sums.end()) continue;
    if (mask == 0 && it->second == 0) continue;  // empty subset
    std::vector<Natural> subset;
    for (std::size_t i = 0; i < left.size(); ++i)
      if (mask >> i & 1) subset.push_back(left[i]);
    for (std::size_t i = 0; i < right.size(); ++i)
      if (it->second >> i & 1) subset.push_back(right[i]);
    return subset;
  }
  return std::nullopt;
}

}  // namespace ppnkit
