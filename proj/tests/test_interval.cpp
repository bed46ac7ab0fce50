#include <doctest.h>

#include <random>

#include "ppnkit/interval.hpp"

using namespace ppnkit;

namespace {

Rational random_rational(std::mt19937_64& rng, bool allow_negative = true) {
  std::uniform_int_distribution<long> num(1, 1'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  std::uniform_int_distribution<int> sign(0, 1);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  if (allow_negative && sign(rng)) q = -q;
  return q;
}

}  // namespace

TEST_SUITE("interval") {

TEST_CASE("exact decimals are points, inexact ones tight enclosures") {
  Interval half = Interval::from_decimal("13.5");
  CHECK(half.contains(Rational(27, 2)));
  CHECK(half.width_double() == 0.0);

  Interval tenth = Interval::from_decimal("0.1");
  CHECK(tenth.contains(Rational(1, 10)));
  CHECK(tenth.width_double() > 0.0);
  CHECK(tenth.width_double() < 1e-55);

  Interval x0 = Interval::from_decimal("3.6769e21");
  CHECK(x0.contains(Rational(Natural("3676900000000000000000", 10))));
  CHECK(x0.width_double() == 0.0);  // integer, exactly representable
}

TEST_CASE("parse_decimal handles signs, exponents, leading zeros") {
  CHECK(parse_decimal("042") == Rational(42));
  CHECK(parse_decimal("-1.5e2") == Rational(-150));
  CHECK(parse_decimal("2.5e-3") == Rational(1, 400));
  CHECK(parse_decimal("0.261497") == Rational(261497, 1000000));
  CHECK_THROWS_AS(parse_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
}

TEST_CASE("arithmetic encloses the exact rational result") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng);
    Interval ia = Interval::from_rational(a, 40);
    Interval ib = Interval::from_rational(b, 40);
    CHECK((ia + ib).contains(Rational(a + b)));
    CHECK((ia - ib).contains(Rational(a - b)));
    CHECK((ia * ib).contains(Rational(a * b)));
    if (b != 0) CHECK((ia / ib).contains(Rational(a / b)));
  }
}

TEST_CASE("mixed-sign multiplication stays sound") {
  Interval a = Interval::from_endpoints("-2", "3");
  Interval b = Interval::from_endpoints("-5", "7");
  Interval p = a * b;
  // extremes: -2*7 = -14, 3*-5 = -15, 3*7 = 21
  CHECK(p.contains(Rational(-15)));
  CHECK(p.contains(Rational(21)));
  CHECK(p.contains(Rational(0)));
  CHECK_FALSE(p.contains(Rational(22)));
  CHECK_FALSE(p.contains(Rational(-16)));
}

TEST_CASE("division across zero is rejected") {
  Interval a = Interval::from_decimal("1");
  Interval z = Interval::from_endpoints("-1", "1");
  CHECK_THROWS_AS(a / z, std::domain_error);
  CHECK_THROWS_AS(z.inverse_times(1), std::domain_error);
}

TEST_CASE("higher precision results nest inside lower precision ones") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational q = random_rational(rng, /*allow_negative=*/false) + 1;
    Interval coarse = Interval::from_rational(q, 20).log();
    Interval fine = Interval::from_rational(q, 80).log();
    CHECK(coarse.encloses(fine));
    Interval coarse_sqrt = Interval::from_rational(q, 20).sqrt();
    Interval fine_sqrt = Interval::from_rational(q, 80).sqrt();
    CHECK(coarse_sqrt.encloses(fine_sqrt));
  }
}

TEST_CASE("pi enclosure") {
  Interval pi = Interval::pi(50);
  CHECK(pi.lo_greater_than(Rational(Natural("31415926535897932", 10),
                                    Natural("10000000000000000", 10))));
  CHECK(pi.hi_less_than(Rational(Natural("31415926535897933", 10),
                                 Natural("10000000000000000", 10))));
}

TEST_CASE("printed endpoints are outward rounded") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    Rational q = random_rational(rng);
    Interval iv = Interval::from_rational(q, 40);
    Rational lo = parse_decimal(iv.lo_string(20));
    Rational hi = parse_decimal(iv.hi_string(20));
    CHECK(lo <= q);
    CHECK(hi >= q);
  }
}

TEST_CASE("log and sqrt domains") {
  CHECK_THROWS_AS(Interval::from_decimal("0").log(), std::domain_error);
  CHECK_THROWS_AS(Interval::from_decimal("-1").sqrt(), std::domain_error);
  Interval e_enclosure = Interval::from_endpoints("2.71828182845", "2.71828182846");
  Interval one = e_enclosure.log();
  CHECK(one.contains(Rational(1)));
}

TEST_CASE("endpoint ordering is validated") {
  CHECK_THROWS_AS(Interval::from_endpoints("2", "1"), std::invalid_argument);
}

}  // TEST_SUITE
