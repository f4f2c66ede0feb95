#pragma once

#include "accelqed/atom.hpp"
#include "accelqed/constants.hpp"
#include "accelqed/quad.hpp"

namespace accelqed::pair {

struct PairConfig {
  double R;    // cm, interatomic distance
  double a;    // cm/s^2
  double t;    // s, lab time since the atoms were at rest
  atom::PolarizabilityModel alpha_a;
  atom::PolarizabilityModel alpha_b;

  void validate() const;
  // The correction terms are perturbative in time; a^2 t^2 / c^2 > 1 is
  // outside the derivation's regime. Computed anyway, flagged here.
  bool beyond_validity(const core::PhysicalConstants& k = core::codata()) const;
};

struct InteractionBreakdown {
  double static_term = 0.0;     // erg
  double linear_t_term = 0.0;   // erg, ~ a^2 t / 2 c^3
  double quadratic_t_term = 0.0;// erg, ~ a^2 t^2 / 6 c^2
  double total = 0.0;           // erg
  bool converged = true;
  bool validity_flag = false;   // true when a^2 t^2 / c^2 > 1
};

// Interaction energy of the two atoms at rest (retarded van der Waals /
// Casimir-Polder form); strictly negative for ground-state models.
double static_vdw(const PairConfig& cfg, const quad::QuadConfig& q = {},
                  const core::PhysicalConstants& k = core::codata());

// Acceleration correction linear in t. Exactly zero for a = 0 or t = 0,
// without invoking quadrature.
double linear_correction(const PairConfig& cfg, const quad::QuadConfig& q = {},
                         const core::PhysicalConstants& k = core::codata());

// Acceleration correction quadratic in t; same zero short-circuit.
double quadratic_correction(const PairConfig& cfg, const quad::QuadConfig& q = {},
                            const core::PhysicalConstants& k = core::codata());

InteractionBreakdown total_interaction(const PairConfig& cfg,
                                       const quad::QuadConfig& q = {},
                                       const core::PhysicalConstants& k = core::codata());

enum class Term { static_term, linear, quadratic };
enum class Zone { near, far };

// Zone classification relative to c/omega_min of the lowest resonance:
// near below 0.1, far above 10, intermediate refused for asymptotes.
enum class ZoneClass { near, intermediate, far };
ZoneClass classify_zone(const PairConfig& cfg,
                        const core::PhysicalConstants& k = core::codata());

// Closed-form zone asymptotes (far zone uses static polarizabilities).
double zone_asymptote(Term term, Zone zone, const PairConfig& cfg,
                      const quad::QuadConfig& q = {},
                      const core::PhysicalConstants& k = core::codata());

// Centered log-log derivative d ln|E| / d ln R of one term.
double powerlaw_exponent(Term term, const PairConfig& cfg, double dlogR = 1e-3,
                         const quad::QuadConfig& q = {},
                         const core::PhysicalConstants& k = core::codata());

// |linear + quadratic| / |static|
double relative_correction(const PairConfig& cfg, const quad::QuadConfig& q = {},
                           const core::PhysicalConstants& k = core::codata());

}  // namespace accelqed::pair
