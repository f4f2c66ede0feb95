#include <doctest.h>

#include <cmath>

#include "accelqed/pair.hpp"

using namespace accelqed;
using pair::PairConfig;
using pair::Term;
using pair::Zone;
using pair::ZoneClass;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

const double kPi = 3.14159265358979323846;

PairConfig static_pair(double R, double a, double t) {
  return PairConfig{R, a, t, atom::PolarizabilityModel{atom::StaticPol{1e-24}},
                    atom::PolarizabilityModel{atom::StaticPol{2e-24}}};
}

PairConfig hydrogen_pair(double R, double a, double t) {
  return PairConfig{R, a, t, atom::hydrogen_lorentz(), atom::hydrogen_lorentz()};
}

}  // namespace

TEST_CASE("pair terms: closed forms for frequency-independent polarizabilities") {
  // with constant alpha the wavenumber integrals are elementary, so every
  // term must match its far-zone asymptote at any R
  const auto k = core::codata();
  const double R = 3e-6, a = 1e13, t = 1e-4;
  const auto c = static_pair(R, a, t);
  const double aa = 1e-24 * 2e-24;
  const double hc = k.hbar * k.c;
  SUBCASE("static: -23/(4 pi) hbar c alpha alpha' / R^7") {
    CHECK(rel_err(pair::static_vdw(c), -23.0 / (4.0 * kPi) * hc * aa / std::pow(R, 7)) <
          1e-7);
  }
  SUBCASE("linear: 11/(8 pi) (a^2 t / c^3) hbar c alpha alpha' / R^6") {
    const double want =
        11.0 / (8.0 * kPi) * a * a * t / (k.c * k.c * k.c) * hc * aa / std::pow(R, 6);
    CHECK(rel_err(pair::linear_correction(c), want) < 1e-7);
  }
  SUBCASE("quadratic: 9/(8 pi) (a^2 t^2 / c^2) hbar c alpha alpha' / R^7") {
    const double want =
        9.0 / (8.0 * kPi) * a * a * t * t / (k.c * k.c) * hc * aa / std::pow(R, 7);
    CHECK(rel_err(pair::quadratic_correction(c), want) < 1e-7);
  }
  SUBCASE("the far asymptote helper agrees") {
    for (auto term : {Term::static_term, Term::linear, Term::quadratic}) {
      double direct = 0.0;
      switch (term) {
        case Term::static_term: direct = pair::static_vdw(c); break;
        case Term::linear: direct = pair::linear_correction(c); break;
        case Term::quadratic: direct = pair::quadratic_correction(c); break;
      }
      CHECK(rel_err(pair::zone_asymptote(term, Zone::far, c), direct) < 1e-7);
    }
  }
}

TEST_CASE("pair terms: London limit in the near zone") {
  const auto k = core::codata();
  const double R = 1e-7;
  const auto c = hydrogen_pair(R, 0.0, 0.0);
  const double alpha0 = c.alpha_a.static_value();
  const double w0 = c.alpha_a.lowest_resonance();
  const double london = -0.75 * k.hbar * w0 * alpha0 * alpha0 / std::pow(R, 6);
  SUBCASE("full quadrature approaches the London energy") {
    CHECK(rel_err(pair::static_vdw(c), london) < 5e-3);
  }
  SUBCASE("near asymptote equals the London closed form") {
    CHECK(rel_err(pair::zone_asymptote(Term::static_term, Zone::near, c), london) < 1e-6);
  }
  SUBCASE("near asymptote refuses Static models") {
    CHECK_THROWS_AS(pair::zone_asymptote(Term::static_term, Zone::near,
                                         static_pair(R, 0.0, 0.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("classify_zone") {
  CHECK(pair::classify_zone(hydrogen_pair(1e-7, 0, 0)) == ZoneClass::near);
  CHECK(pair::classify_zone(hydrogen_pair(5e-6, 0, 0)) == ZoneClass::intermediate);
  CHECK(pair::classify_zone(hydrogen_pair(1e-4, 0, 0)) == ZoneClass::far);
  CHECK_THROWS_AS(pair::classify_zone(static_pair(1e-6, 0, 0)), std::invalid_argument);
}

TEST_CASE("power-law exponents in both zones") {
  const double a = 1e13, t = 1e-4;
  SUBCASE("far zone: -7, -6, -7") {
    const auto c = hydrogen_pair(1e-4, a, t);
    CHECK(std::abs(pair::powerlaw_exponent(Term::static_term, c) + 7.0) < 0.05);
    CHECK(std::abs(pair::powerlaw_exponent(Term::linear, c) + 6.0) < 0.05);
    CHECK(std::abs(pair::powerlaw_exponent(Term::quadratic, c) + 7.0) < 0.05);
  }
  SUBCASE("near zone: -6, -5, -6") {
    const auto c = hydrogen_pair(1e-7, a, t);
    CHECK(std::abs(pair::powerlaw_exponent(Term::static_term, c) + 6.0) < 0.1);
    CHECK(std::abs(pair::powerlaw_exponent(Term::linear, c) + 5.0) < 0.1);
    CHECK(std::abs(pair::powerlaw_exponent(Term::quadratic, c) + 6.0) < 0.1);
  }
  SUBCASE("vanishing term is reported") {
    CHECK_THROWS_AS(pair::powerlaw_exponent(Term::linear, hydrogen_pair(1e-7, 0.0, 0.0)),
                    std::runtime_error);
  }
}

TEST_CASE("pair terms: structure") {
  const double R = 1e-6, a = 1e13, t = 1e-4;
  SUBCASE("exchange symmetry") {
    PairConfig ab{R, a, t, atom::hydrogen_lorentz(),
                  atom::PolarizabilityModel{atom::StaticPol{1e-24}}};
    PairConfig ba{R, a, t, atom::PolarizabilityModel{atom::StaticPol{1e-24}},
                  atom::hydrogen_lorentz()};
    CHECK(pair::static_vdw(ab) == pair::static_vdw(ba));
    CHECK(pair::linear_correction(ab) == pair::linear_correction(ba));
    CHECK(pair::quadratic_correction(ab) == pair::quadratic_correction(ba));
  }
  SUBCASE("exact scaling in a and t") {
    const auto base = hydrogen_pair(R, a, t);
    auto scaled = base;
    scaled.a = 2.0 * a;
    CHECK(rel_err(pair::linear_correction(scaled), 4.0 * pair::linear_correction(base)) <
          1e-14);
    CHECK(rel_err(pair::quadratic_correction(scaled),
                  4.0 * pair::quadratic_correction(base)) < 1e-14);
    scaled = base;
    scaled.t = 3.0 * t;
    CHECK(rel_err(pair::linear_correction(scaled), 3.0 * pair::linear_correction(base)) <
          1e-14);
    CHECK(rel_err(pair::quadratic_correction(scaled),
                  9.0 * pair::quadratic_correction(base)) < 1e-14);
    CHECK(pair::static_vdw(scaled) == pair::static_vdw(base));
  }
  SUBCASE("a = 0 and t = 0 short-circuit exactly") {
    CHECK(pair::linear_correction(hydrogen_pair(R, 0.0, t)) == 0.0);
    CHECK(pair::linear_correction(hydrogen_pair(R, a, 0.0)) == 0.0);
    CHECK(pair::quadratic_correction(hydrogen_pair(R, 0.0, t)) == 0.0);
    CHECK(pair::quadratic_correction(hydrogen_pair(R, a, 0.0)) == 0.0);
    CHECK(pair::relative_correction(hydrogen_pair(R, 0.0, 0.0)) == 0.0);
  }
  SUBCASE("sign structure for ground-state atoms") {
    const auto b = pair::total_interaction(hydrogen_pair(R, a, t));
    CHECK(b.converged);
    CHECK(b.static_term < 0.0);
    CHECK(b.linear_t_term > 0.0);
    CHECK(b.quadratic_t_term > 0.0);
    CHECK(b.total == b.static_term + b.linear_t_term + b.quadratic_t_term);
    CHECK_FALSE(b.validity_flag);
  }
  SUBCASE("validity flag when a t / c exceeds 1") {
    auto c = hydrogen_pair(R, 1e14, 1.0);  // a t / c ~ 3.3e3
    CHECK(c.beyond_validity());
    const auto b = pair::total_interaction(c);
    CHECK(b.validity_flag);
    CHECK(std::isfinite(b.total));
  }
  SUBCASE("relative_correction is consistent with the parts") {
    const auto c = hydrogen_pair(R, a, t);
    const double want = std::abs(pair::linear_correction(c) +
                                 pair::quadratic_correction(c)) /
                        std::abs(pair::static_vdw(c));
    CHECK(pair::relative_correction(c) == want);
  }
  SUBCASE("config validation") {
    CHECK_THROWS_AS(pair::static_vdw(hydrogen_pair(0.0, a, t)), std::invalid_argument);
    CHECK_THROWS_AS(pair::static_vdw(hydrogen_pair(R, -1.0, t)), std::invalid_argument);
    CHECK_THROWS_AS(pair::static_vdw(hydrogen_pair(R, a, -1.0)), std::invalid_argument);
  }
}
