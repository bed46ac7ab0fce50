#include "ppnkit/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppnkit {

mpfr_prec_t decimal_digits_to_bits(int digits) {
  if (digits < 2) throw std::domain_error("interval precision must be >= 2 digits");
  // log2(10) = 3.3219...; add guard bits for intermediate rounding.
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 16);
}

Interval::Interval(int decimal_digits)
    : prec_(decimal_digits_to_bits(decimal_digits)), digits_(decimal_digits) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_), digits_(other.digits_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept
    : prec_(other.prec_), digits_(other.digits_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
    digits_ = other.digits_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_natural(const Natural& n, int digits) {
  Interval r(digits);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const Rational& q, int digits) {
  Interval r(digits);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

// Parse "[-]ddd[.ddd][e[+-]dd]" into an exact rational.
Rational parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_dot) --exponent;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exponent += std::stol(s.substr(pos + 1));
      break;
    } else {
      throw std::invalid_argument("bad decimal literal: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + text);
  // Explicit base 10: the auto-detecting constructor would read a
  // leading zero as octal.
  Integer mantissa(digits.empty() ? "0" : digits, 10);
  if (negative) mantissa = -mantissa;
  Rational q(mantissa);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0)
    q *= Rational(scale);
  else
    q /= Rational(scale);
  q.canonicalize();
  return q;
}

Interval Interval::from_decimal(const std::string& text, int digits) {
  return from_rational(parse_decimal(text), digits);
}

Interval Interval::from_endpoints(const std::string& lo, const std::string& hi,
                                  int digits) {
  Interval r(digits);
  Rational ql = parse_decimal(lo), qh = parse_decimal(hi);
  if (ql > qh) throw std::invalid_argument("interval endpoints out of order");
  mpfr_set_q(r.lo_, ql.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, qh.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(int digits) {
  Interval r(digits);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log_of_ui(unsigned long n, int digits) {
  Interval r(digits);
  mpfr_set_ui(r.lo_, n, MPFR_RNDD);
  mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_ui(r.hi_, n, MPFR_RNDU);
  mpfr_log(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval r(digits_);
  mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval r(digits_);
  mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& rhs) const {
  // General sign-safe product: min/max over the four endpoint products,
  // each rounded in the appropriate direction.
  Interval r(digits_);
  mpfr_t t;
  mpfr_init2(t, prec_);

  mpfr_mul(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_mul(r.hi_, lo_, rhs.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);

  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& rhs) const {
  if (rhs.contains_zero())
    throw std::domain_error("interval division by an interval containing zero");
  Interval r(digits_);
  mpfr_t t;
  mpfr_init2(t, prec_);

  mpfr_div(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, rhs.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, rhs.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_div(r.hi_, lo_, rhs.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, rhs.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, rhs.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);

  mpfr_clear(t);
  return r;
}

Interval Interval::add_rational(const Rational& q) const {
  Interval r(digits_);
  mpfr_add_q(r.lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(r.hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::sub_rational(const Rational& q) const {
  Interval r(digits_);
  mpfr_sub_q(r.lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_sub_q(r.hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("interval log of nonpositive value");
  Interval r(digits_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of negative value");
  Interval r(digits_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::inverse_times(unsigned long k) const {
  if (contains_zero()) throw std::domain_error("interval reciprocal across zero");
  // k/x is decreasing on either side of zero, so [k/hi, k/lo] holds for
  // both all-positive and all-negative intervals.
  Interval r(digits_);
  mpfr_ui_div(r.lo_, k, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, k, lo_, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::hi_less_than(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

bool Interval::lo_greater_than(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool Interval::lo_at_least(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::encloses(const Interval& other) const {
  return mpfr_cmp(lo_, other.lo_) <= 0 && mpfr_cmp(hi_, other.hi_) >= 0;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {
std::string format_endpoint(mpfr_srcptr v, int significant, mpfr_rnd_t rnd) {
  char* out = nullptr;
  // MPFR understands rounding-mode characters inside the format: the '*'
  // consumes an mpfr_rnd_t argument.
  int n = mpfr_asprintf(&out, "%.*R*e", significant - 1, rnd, v);
  if (n < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(out);
  mpfr_free_str(out);
  return s;
}
}  // namespace

std::string Interval::lo_string(int significant) const {
  if (significant <= 0) significant = digits_;
  return format_endpoint(lo_, significant, MPFR_RNDD);
}

std::string Interval::hi_string(int significant) const {
  if (significant <= 0) significant = digits_;
  return format_endpoint(hi_, significant, MPFR_RNDU);
}

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

}  // namespace ppnkit
