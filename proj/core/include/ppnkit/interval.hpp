// Interval arithmetic with directed rounding, backed by MPFR.
//
// Every operation rounds the lower endpoint down and the upper endpoint
// up, so an Interval built from exact inputs always encloses the exact
// real result.  Precision is requested in decimal digits and converted to
// a binary mantissa size with guard bits.  Endpoints print as decimal
// strings rounded outward, so printed enclosures remain enclosures.

#pragma once

#include <cstdint>
#include <string>

#include <mpfr.h>

#include "ppnkit/arith.hpp"

namespace ppnkit {

inline constexpr int kDefaultIntervalDigits = 60;

class Interval {
 public:
  explicit Interval(int decimal_digits = kDefaultIntervalDigits);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  // --- constructors from exact values -------------------------------
  static Interval from_natural(const Natural& n, int digits = kDefaultIntervalDigits);
  static Interval from_rational(const Rational& q, int digits = kDefaultIntervalDigits);
  // Plain or scientific decimal literal ("3.6769e21", "13.5"); parsed as
  // an exact rational first, so the enclosure is as tight as the mantissa
  // allows (often exact).
  static Interval from_decimal(const std::string& text, int digits = kDefaultIntervalDigits);
  static Interval from_endpoints(const std::string& lo, const std::string& hi,
                                 int digits = kDefaultIntervalDigits);
  static Interval pi(int digits = kDefaultIntervalDigits);
  static Interval log_of_ui(unsigned long n, int digits = kDefaultIntervalDigits);

  int digits() const { return digits_; }
  mpfr_prec_t precision_bits() const { return prec_; }

  // --- arithmetic (result carries this interval's precision) --------
  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  Interval operator/(const Interval& rhs) const;  // rhs must not straddle 0
  Interval add_rational(const Rational& q) const;
  Interval sub_rational(const Rational& q) const;

  Interval log() const;   // requires lo > 0
  Interval sqrt() const;  // requires lo >= 0
  Interval inverse_times(unsigned long k) const;  // k / *this

  // --- queries -------------------------------------------------------
  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  // Directed comparisons against exact rationals: true only when the
  // whole interval satisfies the inequality.
  bool hi_less_than(const Rational& q) const;
  bool lo_greater_than(const Rational& q) const;
  bool lo_at_least(const Rational& q) const;
  bool contains(const Rational& q) const;
  // Whole-interval containment: every point of other inside *this.
  bool encloses(const Interval& other) const;

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  std::string lo_string(int significant = 0) const;  // rounded down
  std::string hi_string(int significant = 0) const;  // rounded up
  double width_double() const;

  // Raw endpoint access for module-internal accumulation loops.
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
  int digits_;
};

mpfr_prec_t decimal_digits_to_bits(int digits);

// Exact value of a plain or scientific decimal literal.
Rational parse_decimal(const std::string& text);

}  // namespace ppnkit
