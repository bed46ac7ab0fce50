#include "ppnkit/sylvester.hpp"

#include <mutex>
#include <vector>

namespace ppnkit {

namespace {
std::mutex g_memo_mutex;
std::vector<Natural> g_terms;  // g_terms[0] unused; g_terms[n] = S_n
}  // namespace

Natural sylvester_term(unsigned n, unsigned index_cap) {
  if (n < 1) throw std::domain_error("sylvester_term: index must be >= 1");
  if (n > index_cap)
    throw LimitError("sylvester_term: index " + std::to_string(n) +
                     " exceeds cap " + std::to_string(index_cap) +
                     " (terms are doubly exponential)");
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  if (g_terms.empty()) g_terms = {Natural(0), Natural(2)};
  while (g_terms.size() <= n) {
    const Natural& s = g_terms.back();
    g_terms.push_back((s - 1) * s + 1);
  }
  return g_terms[n];
}

Natural curtiss_bound(unsigned r, unsigned index_cap) {
  if (r < 1) throw std::domain_error("curtiss_bound: r must be >= 1");
  return sylvester_term(r + 1, index_cap) - 1;
}

}  // namespace ppnkit
