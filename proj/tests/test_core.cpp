#include <doctest.h>

#include "accelqed/constants.hpp"

using namespace accelqed::core;

namespace {
double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}
}  // namespace

TEST_CASE("CODATA constants match reference values to 6+ digits") {
  const auto k = codata();
  CHECK(rel_err(k.hbar, 1.054572e-27) < 1e-6);
  CHECK(rel_err(k.c, 2.997925e10) < 1e-6);
  CHECK(rel_err(k.k_boltzmann, 1.380649e-16) < 1e-6);
  CHECK(rel_err(k.e_charge, 4.803205e-10) < 1e-6);
  CHECK(rel_err(k.bohr_radius, 5.291772e-9) < 1e-6);
  CHECK(k.hbar > 0);
  CHECK(k.c > 0);
  CHECK(k.k_boltzmann > 0);
  CHECK(k.e_charge > 0);
  CHECK(k.bohr_radius > 0);
}

TEST_CASE("independently constructed constant sets are bit-identical") {
  CHECK(codata() == codata());
}

TEST_CASE("unruh_temperature") {
  CHECK(unruh_temperature(Acceleration(0.0)) == 0.0);
  // a ~ 1e22 cm/s^2 corresponds to about 1 K
  CHECK(rel_err(unruh_temperature(Acceleration(2.47e22)), 1.0) < 5e-3);
  // linearity
  const double t1 = unruh_temperature(Acceleration(3.7e21));
  const double t2 = unruh_temperature(Acceleration(7.4e21));
  CHECK(t2 == 2.0 * t1);
  CHECK_THROWS_AS(Acceleration(-1.0), std::invalid_argument);
}

TEST_CASE("unruh_acceleration inverts unruh_temperature") {
  CHECK(unruh_acceleration(0.0).value == 0.0);
  CHECK(rel_err(unruh_acceleration(1.0).value, 2.4660830214026106e22) < 1e-12);
  for (double T : {1e-3, 1.0, 1e3}) {
    CHECK(rel_err(unruh_temperature(unruh_acceleration(T)), T) < 1e-12);
  }
  CHECK_THROWS_AS(unruh_acceleration(-0.5), std::invalid_argument);
}

TEST_CASE("unruh_temperature linear in a (property)") {
  const double base = unruh_temperature(Acceleration(1.0));
  for (double scale : {0.0, 0.5, 3.0, 1e10, 4.4e21}) {
    CHECK(rel_err(unruh_temperature(Acceleration(scale)) + 1e-300,
                  scale * base + 1e-300) < 1e-14);
  }
}

TEST_CASE("convert_acceleration") {
  CHECK(convert_acceleration(1.0, AccelUnit::m_s2, AccelUnit::cm_s2) == 100.0);
  CHECK(convert_acceleration(1.0, AccelUnit::g0, AccelUnit::cm_s2) == 980.665);
  for (auto from : {AccelUnit::cm_s2, AccelUnit::m_s2, AccelUnit::g0})
    for (auto to : {AccelUnit::cm_s2, AccelUnit::m_s2, AccelUnit::g0}) {
      const double v = 12.5;
      CHECK(rel_err(convert_acceleration(convert_acceleration(v, from, to), to, from), v) <
            1e-15);
    }
  CHECK_THROWS_AS(parse_accel_unit("furlong_fortnight2"), std::invalid_argument);
  CHECK(parse_accel_unit("m/s2") == AccelUnit::m_s2);
}
