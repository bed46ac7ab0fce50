#include "ppnkit/search.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <thread>

#include "ppnkit/sylvester.hpp"

namespace ppnkit {

namespace {

struct Node {
  std::vector<Natural> chosen;  // ascending primes
  Natural product = 1;
  Natural num = 1, den = 1;  // remainder num/den, reduced; den == product
  unsigned remaining;        // primes still to choose
};

class Driver {
 public:
  Driver(const SearchConfig& config, Natural limit, unsigned target_r)
      : config_(config), limit_(std::move(limit)), target_r_(target_r) {}

  void run(std::vector<std::map<Natural, PpnRecord>>& sink_by_worker,
           std::vector<std::vector<std::string>>& frontier_by_worker);

 private:
  void expand(const Node& node, unsigned worker);
  void solve_leaf(const Node& node, unsigned worker);
  void solve_two_primes(const Node& node, unsigned worker);
  void scan_window(const Node& node, unsigned worker);
  void emit(const Node& node, const std::vector<Natural>& extra, unsigned worker);
  std::string describe(const Node& node) const;

  // Parallel mode: expand() stops at kHandoffDepth and queues subtrees.
  static constexpr unsigned kHandoffDepth = 2;
  bool collecting_ = false;
  std::vector<Node> pending_;

  const SearchConfig& config_;
  Natural limit_;
  unsigned target_r_;
  std::vector<std::map<Natural, PpnRecord>>* sinks_ = nullptr;
  std::vector<std::vector<std::string>>* frontiers_ = nullptr;
};

void Driver::emit(const Node& node, const std::vector<Natural>& extra,
                  unsigned worker) {
  std::vector<Natural> primes = node.chosen;
  primes.insert(primes.end(), extra.begin(), extra.end());
  std::sort(primes.begin(), primes.end());
  Natural K = 1;
  for (const Natural& p : primes) K *= p;
  PpnVerification v = verify_ppn_claimed(K, std::move(primes));
  if (v.ok()) (*sinks_)[worker].emplace(K, *std::move(v.record));
}

std::string Driver::describe(const Node& node) const {
  std::string s = "primes=[";
  for (std::size_t i = 0; i < node.chosen.size(); ++i) {
    if (i) s += ",";
    s += node.chosen[i].get_str();
  }
  s += "] remainder=" + node.num.get_str() + "/" + node.den.get_str() +
       " remaining=" + std::to_string(node.remaining);
  return s;
}

void Driver::solve_leaf(const Node& node, unsigned worker) {
  // q = den (P+1) / (num P) with den == P.
  Natural den_q = node.num * node.product;
  Natural num_q = node.den * (node.product + 1);
  if (num_q % den_q != 0) return;
  Natural q = num_q / den_q;
  if (!node.chosen.empty() && q <= node.chosen.back()) return;
  if (node.product % q == 0) return;
  if (node.product * q > limit_) return;
  if (config_.prime_limit && q > *config_.prime_limit) {
    (*frontiers_)[worker].push_back(describe(node) + " leaf=" + q.get_str());
    return;
  }
  if (!is_prime(q)) return;
  emit(node, {q}, worker);
}

void Driver::solve_two_primes(const Node& node, unsigned worker) {
  assert(node.den == node.product);
  const Natural& P = node.product;
  const Natural& a = node.num;
  Natural discriminant = a + P * P;
  Factorization f = factorize(discriminant);

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

  for (const Natural& d1 : divisors) {
    Natural d2 = discriminant / d1;
    if (d1 > d2) break;
    if ((d1 + P) % a != 0 || (d2 + P) % a != 0) continue;
    Natural p = (d1 + P) / a, q = (d2 + P) / a;
    if (p == q) continue;
    if (!node.chosen.empty() && p <= node.chosen.back()) continue;
    if (P % p == 0 || P % q == 0) continue;
    if (P * p * q > limit_) continue;
    if (config_.prime_limit && q > *config_.prime_limit) {
      (*frontiers_)[worker].push_back(describe(node) + " pair=" + p.get_str() +
                                      "," + q.get_str());
      continue;
    }
    if (!is_prime(p) || !is_prime(q)) continue;
    emit(node, {p, q}, worker);
  }
}

void Driver::scan_window(const Node& node, unsigned worker) {
  const Natural& a = node.num;
  const Natural& b = node.den;
  unsigned t = node.remaining;

  Natural start = b / a;  // window is p > b/a
  if (!node.chosen.empty() && node.chosen.back() > start) start = node.chosen.back();
  Natural p = next_prime_above(start);
  while (a * p <= b) p = next_prime_above(p);

  for (; a * p < (t + 1) * b; p = next_prime_above(p)) {
    // All remaining primes exceed p, so P p^t is a lower bound on K.
    Natural floor_K;
    mpz_pow_ui(floor_K.get_mpz_t(), p.get_mpz_t(), t);
    floor_K *= node.product;
    if (floor_K > limit_) return;
    if (config_.prime_limit && p > *config_.prime_limit) {
      (*frontiers_)[worker].push_back(describe(node) + " cut-at=" + p.get_str());
      return;
    }

    Node child;
    child.chosen = node.chosen;
    child.chosen.push_back(p);
    child.product = node.product * p;
    child.num = a * p - b;
    child.den = b * p;
    Natural g = gcd(child.num, child.den);
    if (g > 1) {
      child.num /= g;
      child.den /= g;
    }
    child.remaining = t - 1;
    expand(child, worker);
  }
}

void Driver::expand(const Node& node, unsigned worker) {
  if (collecting_ && node.chosen.size() >= kHandoffDepth && node.remaining >= 2) {
    pending_.push_back(node);
    return;
  }
  if (node.remaining == 1) {
    solve_leaf(node, worker);
    return;
  }
  if (node.remaining == 2 && config_.two_prime_solve) {
    solve_two_primes(node, worker);
    return;
  }
  scan_window(node, worker);
}

void Driver::run(std::vector<std::map<Natural, PpnRecord>>& sink_by_worker,
                 std::vector<std::vector<std::string>>& frontier_by_worker) {
  sinks_ = &sink_by_worker;
  frontiers_ = &frontier_by_worker;

  Node root;
  root.remaining = target_r_;
  if (config_.even_only && target_r_ >= 1) {
    // Force 2 as the first prime; remainder becomes 1/2.
    if (target_r_ == 1) {
      solve_leaf(root, 0);
      return;
    }
    root.chosen = {Natural(2)};
    root.product = 2;
    root.num = 1;
    root.den = 2;
    root.remaining = target_r_ - 1;
  }

  if (config_.parallel_width <= 1) {
    expand(root, 0);
    return;
  }

  // Enumerate shallow subtree roots sequentially, then distribute.
  collecting_ = true;
  expand(root, 0);
  collecting_ = false;

  std::mutex queue_mutex;
  std::size_t next = 0;
  auto work = [&](unsigned worker) {
    for (;;) {
      std::size_t idx;
      {
        std::lock_guard<std::mutex> lock(queue_mutex);
        if (next >= pending_.size()) return;
        idx = next++;
      }
      expand(pending_[idx], worker);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < config_.parallel_width; ++w)
    pool.emplace_back(work, w);
  for (auto& th : pool) th.join();
}

}  // namespace

std::optional<Natural> leaf_prime(const Natural& P, const Rational& remainder) {
  if (P < 1) throw std::domain_error("leaf_prime: P must be >= 1");
  if (remainder <= 0 || remainder > 1)
    throw std::domain_error("leaf_prime: remainder must be in (0, 1]");
  Natural a(remainder.get_num());
  Natural b(remainder.get_den());
  Natural den_q = a * P;
  Natural num_q = b * (P + 1);
  if (num_q % den_q != 0) return std::nullopt;
  Natural q = num_q / den_q;
  if (!is_prime(q)) return std::nullopt;
  return q;
}

SearchOutcome search_ppns(const SearchConfig& config) {
  if (config.r_max < 1) throw std::domain_error("search: r_max must be >= 1");
  if (config.parallel_width < 1)
    throw std::domain_error("search: parallel_width must be >= 1");
  if (config.value_limit && *config.value_limit < 2)
    throw std::domain_error("search: value_limit must be >= 2");

  unsigned workers = std::max(1u, config.parallel_width);
  std::vector<std::map<Natural, PpnRecord>> sink_by_worker(workers);
  std::vector<std::vector<std::string>> frontier_by_worker(workers);

  for (unsigned r = 1; r <= config.r_max; ++r) {
    // Curtiss ceiling makes the per-depth sweep a completeness certificate.
    Natural ceiling = curtiss_bound(r);
    if (config.value_limit && *config.value_limit < ceiling)
      ceiling = *config.value_limit;
    Driver driver(config, ceiling, r);
    driver.run(sink_by_worker, frontier_by_worker);
  }

  SearchOutcome outcome;
  std::map<Natural, PpnRecord> merged;
  for (auto& sink : sink_by_worker)
    for (auto& [value, record] : sink) merged.emplace(value, std::move(record));
  outcome.records.reserve(merged.size());
  for (auto& [value, record] : merged) outcome.records.push_back(std::move(record));
  for (auto& f : frontier_by_worker)
    outcome.frontier.insert(outcome.frontier.end(), f.begin(), f.end());
  std::sort(outcome.frontier.begin(), outcome.frontier.end());
  outcome.complete = outcome.frontier.empty();

  if (!outcome.complete)
    throw SearchLimitError("prime limit truncated the sweep", std::move(outcome));
  return outcome;
}

}  // namespace ppnkit
