// Sylvester's sequence 2, 3, 7, 43, 1807, ... and the Curtiss ceiling.
//
// S_1 = 2 and S_{n+1} = (S_n - 1) S_n + 1, equivalently
// S_n = S_1 S_2 ... S_{n-1} + 1.  Terms grow doubly exponentially, so the
// index is capped (default 16, S_16 has ~6700 digits); the cap is a
// per-call override.  Terms are memoized per process behind a mutex.

#pragma once

#include "ppnkit/arith.hpp"

namespace ppnkit {

inline constexpr unsigned kDefaultSylvesterIndexCap = 16;

// S_n for n >= 1.  Throws LimitError above the index cap.
Natural sylvester_term(unsigned n, unsigned index_cap = kDefaultSylvesterIndexCap);

// Largest possible value of a primary pseudoperfect number with r prime
// factors: S_{r+1} - 1.
Natural curtiss_bound(unsigned r, unsigned index_cap = kDefaultSylvesterIndexCap);

}  // namespace ppnkit
