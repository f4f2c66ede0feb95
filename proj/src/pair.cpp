#include "accelqed/pair.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace accelqed::pair {

namespace {

using atom::polarizability_iu;

void PairConfigCheck(const PairConfig& c) {
  if (!(c.R > 0.0)) throw std::invalid_argument("PairConfig: R must be > 0");
  if (!(c.a >= 0.0)) throw std::invalid_argument("PairConfig: a must be >= 0");
  if (!(c.t >= 0.0)) throw std::invalid_argument("PairConfig: t must be >= 0");
  c.alpha_a.validate();
  c.alpha_b.validate();
}

double checked(const quad::IntegralResult& r, bool* ok) {
  if (!r.converged) {
    if (ok == nullptr) throw std::runtime_error("pair: quadrature did not converge");
    *ok = false;
  }
  return r.value;
}

// integral over wavenumber u of alpha_A alpha_B * kernel(u) * exp(-2uR)
double pair_integral(const PairConfig& c, const quad::QuadConfig& q,
                     const core::PhysicalConstants& k,
                     const std::function<double(double)>& kernel, bool* ok) {
  auto f = [&](double u) {
    return polarizability_iu(c.alpha_a, k.c * u, k) *
           polarizability_iu(c.alpha_b, k.c * u, k) * kernel(u) *
           std::exp(-2.0 * u * c.R);
  };
  return checked(quad::integrate_decaying(f, 1.0 / (2.0 * c.R), q), ok);
}

double static_vdw_impl(const PairConfig& c, const quad::QuadConfig& q,
                       const core::PhysicalConstants& k, bool* ok) {
  PairConfigCheck(c);
  const double R = c.R;
  const double I = pair_integral(c, q, k, [R](double u) {
    const double u2 = u * u;
    return u2 * u2 + 2.0 * u2 * u / R + 5.0 * u2 / (R * R) + 6.0 * u / (R * R * R) +
           3.0 / (R * R * R * R);
  }, ok);
  return -k.hbar * k.c / (M_PI * R * R) * I;
}

double linear_impl(const PairConfig& c, const quad::QuadConfig& q,
                   const core::PhysicalConstants& k, bool* ok) {
  PairConfigCheck(c);
  if (c.a == 0.0 || c.t == 0.0) return 0.0;
  const double R = c.R;
  const double I = pair_integral(c, q, k, [R](double u) {
    return 3.0 * u * u + 4.0 * u / R + 2.0 / (R * R);
  }, ok);
  return c.a * c.a * c.t / (2.0 * k.c * k.c * k.c) * k.hbar * k.c /
         (M_PI * R * R * R) * I;
}

double quadratic_impl(const PairConfig& c, const quad::QuadConfig& q,
                      const core::PhysicalConstants& k, bool* ok) {
  PairConfigCheck(c);
  if (c.a == 0.0 || c.t == 0.0) return 0.0;
  const double R = c.R;
  const double I = pair_integral(c, q, k, [R](double u) {
    const double u2 = u * u;
    return -u2 * u2 + 4.0 * u2 * u / R + 8.0 * u2 / (R * R) +
           8.0 * u / (R * R * R) + 4.0 / (R * R * R * R);
  }, ok);
  return c.a * c.a * c.t * c.t / (6.0 * k.c * k.c) * k.hbar * k.c /
         (M_PI * R * R) * I;
}

}  // namespace

void PairConfig::validate() const { PairConfigCheck(*this); }

bool PairConfig::beyond_validity(const core::PhysicalConstants& k) const {
  return a * a * t * t / (k.c * k.c) > 1.0;
}

double static_vdw(const PairConfig& cfg, const quad::QuadConfig& q,
                  const core::PhysicalConstants& k) {
  return static_vdw_impl(cfg, q, k, nullptr);
}

double linear_correction(const PairConfig& cfg, const quad::QuadConfig& q,
                         const core::PhysicalConstants& k) {
  return linear_impl(cfg, q, k, nullptr);
}

double quadratic_correction(const PairConfig& cfg, const quad::QuadConfig& q,
                            const core::PhysicalConstants& k) {
  return quadratic_impl(cfg, q, k, nullptr);
}

InteractionBreakdown total_interaction(const PairConfig& cfg,
                                       const quad::QuadConfig& q,
                                       const core::PhysicalConstants& k) {
  InteractionBreakdown out;
  out.static_term = static_vdw_impl(cfg, q, k, &out.converged);
  out.linear_t_term = linear_impl(cfg, q, k, &out.converged);
  out.quadratic_t_term = quadratic_impl(cfg, q, k, &out.converged);
  out.total = out.static_term + out.linear_t_term + out.quadratic_t_term;
  out.validity_flag = cfg.beyond_validity(k);
  return out;
}

ZoneClass classify_zone(const PairConfig& cfg, const core::PhysicalConstants& k) {
  double w_min = std::numeric_limits<double>::infinity();
  const double wa = cfg.alpha_a.lowest_resonance();
  const double wb = cfg.alpha_b.lowest_resonance();
  if (wa > 0.0) w_min = std::min(w_min, wa);
  if (wb > 0.0) w_min = std::min(w_min, wb);
  if (!std::isfinite(w_min))
    throw std::invalid_argument(
        "classify_zone: two Static models have no resonance scale");
  const double scale = k.c / w_min;
  if (cfg.R < 0.1 * scale) return ZoneClass::near;
  if (cfg.R > 10.0 * scale) return ZoneClass::far;
  return ZoneClass::intermediate;
}

double zone_asymptote(Term term, Zone zone, const PairConfig& cfg,
                      const quad::QuadConfig& q, const core::PhysicalConstants& k) {
  PairConfigCheck(cfg);
  const double R = cfg.R;
  const double hc = k.hbar * k.c;
  if (zone == Zone::near) {
    if (std::holds_alternative<atom::StaticPol>(cfg.alpha_a.variant) ||
        std::holds_alternative<atom::StaticPol>(cfg.alpha_b.variant))
      throw std::invalid_argument(
          "zone_asymptote: near zone requires frequency-dependent polarizabilities");
    const double L = atom::london_integral(cfg.alpha_a, cfg.alpha_b, q, k).value;
    const double R6 = std::pow(R, 6);
    switch (term) {
      case Term::static_term:
        return -3.0 * hc / (M_PI * R6) * L;
      case Term::linear:
        return cfg.a * cfg.a * cfg.t / (k.c * k.c * k.c) * hc / (M_PI * R6 / R) * L;
      case Term::quadratic:
        return 2.0 * cfg.a * cfg.a * cfg.t * cfg.t / (3.0 * k.c * k.c) * hc /
               (M_PI * R6) * L;
    }
  } else {
    const double aA0 = cfg.alpha_a.static_value(k);
    const double aB0 = cfg.alpha_b.static_value(k);
    const double R7 = std::pow(R, 7);
    switch (term) {
      case Term::static_term:
        return -23.0 / (4.0 * M_PI) * hc * aA0 * aB0 / R7;
      case Term::linear:
        return 11.0 / (8.0 * M_PI) * cfg.a * cfg.a * cfg.t / (k.c * k.c * k.c) *
               hc * aA0 * aB0 * R / R7;
      case Term::quadratic:
        return 9.0 / (8.0 * M_PI) * cfg.a * cfg.a * cfg.t * cfg.t /
               (k.c * k.c) * hc * aA0 * aB0 / R7;
    }
  }
  throw std::invalid_argument("zone_asymptote: unknown term");
}

double powerlaw_exponent(Term term, const PairConfig& cfg, double dlogR,
                         const quad::QuadConfig& q, const core::PhysicalConstants& k) {
  PairConfigCheck(cfg);
  auto eval = [&](double R) {
    PairConfig c = cfg;
    c.R = R;
    switch (term) {
      case Term::static_term: return static_vdw(c, q, k);
      case Term::linear: return linear_correction(c, q, k);
      case Term::quadratic: return quadratic_correction(c, q, k);
    }
    throw std::invalid_argument("powerlaw_exponent: unknown term");
  };
  const double e_hi = eval(cfg.R * (1.0 + dlogR));
  const double e_lo = eval(cfg.R * (1.0 - dlogR));
  if (e_hi == 0.0 || e_lo == 0.0)
    throw std::runtime_error("powerlaw_exponent: term evaluates to zero");
  return (std::log(std::abs(e_hi)) - std::log(std::abs(e_lo))) /
         (std::log1p(dlogR) - std::log1p(-dlogR));
}

double relative_correction(const PairConfig& cfg, const quad::QuadConfig& q,
                           const core::PhysicalConstants& k) {
  PairConfigCheck(cfg);
  if (cfg.a == 0.0 || cfg.t == 0.0) {
    // corrections vanish identically; still require a nonzero static term
    if (static_vdw(cfg, q, k) == 0.0)
      throw std::runtime_error("relative_correction: static term is zero");
    return 0.0;
  }
  const double s = static_vdw(cfg, q, k);
  if (s == 0.0)
    throw std::runtime_error("relative_correction: static term is zero");
  return std::abs(linear_correction(cfg, q, k) + quadratic_correction(cfg, q, k)) /
         std::abs(s);
}

}  // namespace accelqed::pair
