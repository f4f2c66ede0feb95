#pragma once

#include <string>
#include <variant>
#include <vector>

#include "accelqed/constants.hpp"
#include "accelqed/quad.hpp"

namespace accelqed::atom {

// One electric-dipole transition out of the reference state a.
// omega_ba = omega_b - omega_a (negative for downward transitions),
// dipole_sq = |<a|r|b>|^2 in cm^2.
struct Transition {
  double omega_ba;
  double dipole_sq;
};

struct AtomModel {
  std::string name;
  std::string state_label;
  std::vector<Transition> transitions;

  void validate() const;
  bool is_ground_state() const;  // all omega_ba > 0
  double max_transition_frequency() const;
};

struct StaticPol {
  double alpha0;  // cm^3
};
struct LorentzPol {
  double alpha0;  // cm^3
  double omega0;  // rad/s
};

struct PolarizabilityModel {
  std::variant<StaticPol, LorentzPol, AtomModel> variant;

  void validate() const;
  // Lowest resonance, or 0 for a Static model (no resonance).
  double lowest_resonance() const;
  double static_value(const core::PhysicalConstants& k = core::codata()) const;
};

// alpha(iu) at imaginary angular frequency u >= 0 (rad/s):
//   Static          -> alpha0
//   Lorentz         -> alpha0 w0^2/(w0^2 + u^2)
//   FromTransitions -> (2 e^2 / 3 hbar) sum_b w_ba d_b^2 / (w_ba^2 + u^2)
double polarizability_iu(const PolarizabilityModel& model, double u,
                         const core::PhysicalConstants& k = core::codata());

// integral_0^inf alpha_A(i c u) alpha_B(i c u) du over wavenumber u [1/cm];
// result in cm^5. Rejects Static x Static (divergent).
quad::IntegralResult london_integral(const PolarizabilityModel& a,
                                     const PolarizabilityModel& b,
                                     const quad::QuadConfig& cfg = {},
                                     const core::PhysicalConstants& k = core::codata());

// Built-in models.
AtomModel hydrogen_1s();                    // single dominant 1s->2p transition
PolarizabilityModel hydrogen_lorentz();     // alpha0 = 4.5 a0^3, w0 = Lyman-alpha

// Load an AtomModel from a JSON document of the form
// {"name": ..., "state": ..., "transitions": [{"omega_ba_rad_s": ..., "dipole_sq_cm2": ...}]}
AtomModel load_atom_json(const std::string& text);
AtomModel load_atom_file(const std::string& path);

}  // namespace accelqed::atom
