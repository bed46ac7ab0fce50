#include "ppnkit/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace ppnkit {

namespace {

constexpr std::uint64_t kSegmentSize = 1 << 20;
constexpr char kCacheMagic[4] = {'P', 'P', 'N', 'S'};
constexpr std::uint32_t kCacheVersion = 1;

void check_capacity(std::uint64_t limit, std::uint64_t capacity) {
  if (limit > capacity)
    throw LimitError("sieve limit " + std::to_string(limit) +
                     " exceeds configured capacity " + std::to_string(capacity));
}

// Odd-only base sieve of [2, sqrt_limit].
std::vector<std::uint64_t> base_primes(std::uint64_t sqrt_limit) {
  std::vector<char> comp(sqrt_limit + 1, 0);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= sqrt_limit; ++i) {
    if (!comp[i]) {
      primes.push_back(i);
      for (std::uint64_t j = i * i; j <= sqrt_limit; j += i) comp[j] = 1;
    }
  }
  return primes;
}

void put_le32(std::uint8_t* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}
void put_le64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}
std::uint32_t get_le32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}
std::uint64_t get_le64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void for_primes_up_to(std::uint64_t limit,
                      const std::function<bool(std::uint64_t)>& visit,
                      std::uint64_t capacity) {
  check_capacity(limit, capacity);
  if (limit < 2) return;

  const auto sqrt_limit =
      static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const auto small = base_primes(sqrt_limit);
  for (std::uint64_t p : small) {
    if (p > limit) return;
    if (!visit(p)) return;
  }

  std::vector<char> segment(kSegmentSize);
  std::uint64_t low = sqrt_limit + 1;
  while (low <= limit) {
    std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
    std::fill(segment.begin(), segment.end(), 1);
    for (std::uint64_t p : small) {
      if (p * p > high) break;
      std::uint64_t start = ((low + p - 1) / p) * p;
      if (start < p * p) start = p * p;
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t n = low; n <= high; ++n)
      if (segment[n - low] && !visit(n)) return;
    low = high + 1;
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::uint64_t capacity) {
  std::vector<std::uint64_t> out;
  for_primes_up_to(
      limit,
      [&](std::uint64_t p) {
        out.push_back(p);
        return true;
      },
      capacity);
  return out;
}

std::uint64_t count_primes_up_to(std::uint64_t limit, std::uint64_t capacity) {
  std::uint64_t n = 0;
  for_primes_up_to(
      limit,
      [&](std::uint64_t) {
        ++n;
        return true;
      },
      capacity);
  return n;
}

std::vector<std::uint8_t> sieve_bitset(std::uint64_t limit, std::uint64_t capacity) {
  check_capacity(limit, capacity);
  std::vector<std::uint8_t> bits((limit + 8) / 8, 0);
  for_primes_up_to(
      limit,
      [&](std::uint64_t p) {
        bits[p >> 3] |= static_cast<std::uint8_t>(1u << (p & 7));
        return true;
      },
      capacity);
  return bits;
}

std::optional<SieveCache> load_sieve_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::uint8_t header[16];
  if (!in.read(reinterpret_cast<char*>(header), sizeof header)) return std::nullopt;
  if (std::memcmp(header, kCacheMagic, 4) != 0) return std::nullopt;
  if (get_le32(header + 4) != kCacheVersion) return std::nullopt;
  SieveCache cache;
  cache.limit = get_le64(header + 8);
  std::size_t payload = (cache.limit + 8) / 8;
  cache.bits.resize(payload);
  if (!in.read(reinterpret_cast<char*>(cache.bits.data()),
               static_cast<std::streamsize>(payload)))
    return std::nullopt;
  return cache;
}

void save_sieve_cache(const std::string& path, const SieveCache& cache) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open sieve cache for writing: " + path);
  std::uint8_t header[16];
  std::memcpy(header, kCacheMagic, 4);
  put_le32(header + 4, kCacheVersion);
  put_le64(header + 8, cache.limit);
  out.write(reinterpret_cast<const char*>(header), sizeof header);
  out.write(reinterpret_cast<const char*>(cache.bits.data()),
            static_cast<std::streamsize>(cache.bits.size()));
  if (!out) throw std::runtime_error("short write to sieve cache: " + path);
}

SieveCache sieve_with_cache(std::uint64_t limit, const std::string& path,
                            std::uint64_t capacity) {
  if (!path.empty()) {
    if (auto cached = load_sieve_cache(path); cached && cached->limit >= limit)
      return *cached;
  }
  SieveCache cache;
  cache.limit = limit;
  cache.bits = sieve_bitset(limit, capacity);
  if (!path.empty()) save_sieve_cache(path, cache);
  return cache;
}

}  // namespace ppnkit
