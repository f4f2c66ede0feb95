#pragma once

#include <functional>
#include <string>
#include <vector>

#include "accelqed/atom.hpp"
#include "accelqed/lamb.hpp"

namespace accelqed::wall {

// Boundary kernel, isotropically contracted to a scalar. The paper-level
// closed form is external input; this module only requires the contract
// K(w -> 0) = O(w) (integrability against the coth weight) and a declared
// bound |K| <= k_max, enforced at sampled abscissae.
struct WallKernel {
  std::function<double(double w, double z0, double a)> evaluator;
  double k_max = 1.0;
  enum class Source { closed_form_user, tabulated } source = Source::closed_form_user;

  double eval_checked(double w, double z0, double a) const;
  // Spot-checks |K| <= k_max and linear vanishing at the origin over a few
  // decades below omega_scale.
  void check_contract(double omega_scale, double z0, double a) const;
};

struct WallConfig {
  double z0;                  // cm, atom-wall distance
  double a = 0.0;             // cm/s^2
  lamb::CutoffPolicy cutoff;  // applied to the non-Bose pieces

  void validate() const {
    if (!(z0 > 0.0)) throw std::invalid_argument("WallConfig: z0 must be > 0");
    if (!(a >= 0.0)) throw std::invalid_argument("WallConfig: a must be >= 0");
  }
};

// Vacuum-fluctuation shift near the wall: coth-weighted PV integral of the
// kernel, split coth = 1 + 2 n_B with the same cutoff policy as the
// free-space module.
double vf_shift_wall(const atom::AtomModel& atom, const WallKernel& kernel,
                     const WallConfig& wc, const quad::QuadConfig& cfg = {},
                     const core::PhysicalConstants& k = core::codata());

// Radiation-reaction shift near the wall; acceleration enters only through
// the kernel.
double rr_shift_wall(const atom::AtomModel& atom, const WallKernel& kernel,
                     const WallConfig& wc, const quad::QuadConfig& cfg = {},
                     const core::PhysicalConstants& k = core::codata());

double total_wall_shift(const atom::AtomModel& atom, const WallKernel& kernel,
                        const WallConfig& wc, const quad::QuadConfig& cfg = {},
                        const core::PhysicalConstants& k = core::codata());

// Tabulated kernel from CSV text with header "omega_rad_s,K_value" and
// strictly increasing omega; monotone cubic (Fritsch-Carlson) interpolation,
// linear from (0,0) below the first point, zero beyond the last.
WallKernel load_kernel_csv_text(const std::string& text);
WallKernel load_kernel_csv_file(const std::string& path);

}  // namespace accelqed::wall
