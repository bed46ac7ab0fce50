// Segmented sieve of Eratosthenes with an optional on-disk bitset cache.
//
// The stream interface visits the primes <= limit in ascending order,
// each exactly once, without materializing them all.  Capacity defaults
// to 10^9 and is configurable per call.
//
// Cache file layout (little endian):
//   bytes  0.. 3   magic "PPNS"
//   bytes  4.. 7   version (u32, currently 1)
//   bytes  8..15   limit   (u64)
//   bytes 16..     ceil((limit+1)/8) payload bytes; bit i of the payload
//                  (byte i>>3, bit i&7, LSB first) is 1 iff i is prime.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ppnkit/arith.hpp"

namespace ppnkit {

inline constexpr std::uint64_t kDefaultSieveCapacity = 1'000'000'000;

// Visit every prime <= limit in ascending order.  Return false from the
// callback to stop early.
void for_primes_up_to(std::uint64_t limit,
                      const std::function<bool(std::uint64_t)>& visit,
                      std::uint64_t capacity = kDefaultSieveCapacity);

// Materialized variant.  Throws LimitError beyond the capacity.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit,
                                        std::uint64_t capacity = kDefaultSieveCapacity);

std::uint64_t count_primes_up_to(std::uint64_t limit,
                                 std::uint64_t capacity = kDefaultSieveCapacity);

// Full bitset up to limit: bit i set iff i is prime.
std::vector<std::uint8_t> sieve_bitset(std::uint64_t limit,
                                       std::uint64_t capacity = kDefaultSieveCapacity);

struct SieveCache {
  std::uint64_t limit = 0;
  std::vector<std::uint8_t> bits;

  bool is_prime(std::uint64_t n) const {
    return n <= limit && (bits[n >> 3] >> (n & 7) & 1) != 0;
  }
};

// Returns std::nullopt when the file is missing or malformed.
std::optional<SieveCache> load_sieve_cache(const std::string& path);
void save_sieve_cache(const std::string& path, const SieveCache& cache);

// Load a cache whose limit covers `limit`, or sieve and (when path is
// nonempty) persist one.
SieveCache sieve_with_cache(std::uint64_t limit, const std::string& path,
                            std::uint64_t capacity = kDefaultSieveCapacity);

}  // namespace ppnkit
