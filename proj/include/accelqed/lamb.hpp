#pragma once

#include "accelqed/atom.hpp"
#include "accelqed/constants.hpp"
#include "accelqed/quad.hpp"

namespace accelqed::lamb {

// UV regularization of the non-Bose integral pieces, which diverge at large
// frequency. Default scale is the electron rest mass, m c^2 / hbar.
struct CutoffPolicy {
  enum class Shape { hard, exponential };
  double lambda = 7.76e20;  // rad/s
  Shape shape = Shape::hard;

  void validate(const atom::AtomModel& m) const {
    if (!(lambda > m.max_transition_frequency()))
      throw std::invalid_argument(
          "CutoffPolicy: lambda must exceed the largest transition frequency");
  }
};

// Decomposition of the vacuum-fluctuation shift: coth(pi c w/a) = 1 + 2 n_B
// splits each of the w^3 and (a^2/c^2) w pieces into a cutoff-regularized
// part and an exponentially convergent Bose part.
struct ShiftBreakdown {
  double inertial_vf = 0.0;          // erg, w^3 piece with coth -> 1, cutoff-regularized
  double thermal_vf = 0.0;           // erg, w^3 Bose piece
  double nonthermal_a2_bose = 0.0;   // erg, (a^2/c^2) w Bose piece
  double nonthermal_a2_cutoff = 0.0; // erg, (a^2/c^2) w piece with coth -> 1
  double rr = 0.0;                   // erg (filled by callers that want the total)
  double cutoff_lambda = 0.0;        // rad/s
  double acceleration = 0.0;         // cm/s^2
  bool converged = true;

  double total_vf() const {
    return inertial_vf + thermal_vf + nonthermal_a2_bose + nonthermal_a2_cutoff;
  }
};

// Radiation-reaction shift; independent of acceleration by construction.
double rr_shift(const atom::AtomModel& atom, const CutoffPolicy& cutoff,
                const quad::QuadConfig& cfg = {},
                const core::PhysicalConstants& k = core::codata());

ShiftBreakdown vf_shift(const atom::AtomModel& atom, core::Acceleration a,
                        const CutoffPolicy& cutoff,
                        const quad::QuadConfig& cfg = {},
                        const core::PhysicalConstants& k = core::codata());

// Bisection root of log(|thermal_vf| / |nonthermal_a2_bose + nonthermal_a2_cutoff|)
// over a log-spaced acceleration bracket, to 1% in a. Throws if the ratio
// does not cross 1 inside the bracket; the message reports both endpoint
// ratios.
core::Acceleration comparable_acceleration(const atom::AtomModel& atom,
                                           const CutoffPolicy& cutoff,
                                           double a_lo, double a_hi,
                                           const quad::QuadConfig& cfg = {},
                                           const core::PhysicalConstants& k = core::codata());

// Ratio probed by comparable_acceleration, exposed for auditing.
double thermal_nonthermal_ratio(const atom::AtomModel& atom, core::Acceleration a,
                                const CutoffPolicy& cutoff,
                                const quad::QuadConfig& cfg = {},
                                const core::PhysicalConstants& k = core::codata());

}  // namespace accelqed::lamb
