#include "accelqed/lamb.hpp"

#include <cmath>
#include <sstream>

namespace accelqed::lamb {

namespace {

using quad::IntegralResult;
using quad::QuadConfig;

struct Resolvent {
  double s;  // omega_ab = omega_a - omega_b
  int sign;  // -1 for vf (difference), +1 for rr (sum)

  double operator()(double w) const {
    return 1.0 / (w + s) + sign * 1.0 / (w - s);
  }
  double pole() const { return std::abs(s); }
};

double check(const IntegralResult& r, bool* ok) {
  if (!r.converged && ok == nullptr)
    throw std::runtime_error("lamb: quadrature did not converge");
  if (ok && !r.converged) *ok = false;
  return r.value;
}

// PV integral of w^n * res(w), cutoff-regularized per policy
double cutoff_piece(const Resolvent& res, int n, const CutoffPolicy& cutoff,
                    const QuadConfig& cfg, bool* ok) {
  if (cutoff.shape == CutoffPolicy::Shape::hard) {
    auto f = [&](double w) { return std::pow(w, n) * res(w); };
    return check(quad::integrate_principal_value(f, res.pole(), 0.0, cutoff.lambda, cfg), ok);
  }
  auto f = [&](double w) {
    return std::pow(w, n) * std::exp(-w / cutoff.lambda) * res(w);
  };
  return check(quad::integrate_principal_value(f, res.pole(), cutoff.lambda, cfg), ok);
}

// PV integral of w^n * 2 n_B(2 pi c w / a) * res(w)
double bose_piece(const Resolvent& res, int n, double a,
                  const QuadConfig& cfg, const core::PhysicalConstants& k,
                  bool* ok) {
  const double theta = 2.0 * M_PI * k.c / a;  // Bose argument per unit omega
  auto f = [&](double w) {
    return std::pow(w, n) * 2.0 * quad::bose_occupation(theta * w) * res(w);
  };
  return check(quad::integrate_principal_value(f, res.pole(), 1.0 / theta, cfg), ok);
}

}  // namespace

double rr_shift(const atom::AtomModel& atom, const CutoffPolicy& cutoff,
                const quad::QuadConfig& cfg, const core::PhysicalConstants& k) {
  atom.validate();
  cutoff.validate(atom);
  const double pref = k.e_charge * k.e_charge / (3.0 * M_PI * k.c * k.c * k.c);
  double sum = 0.0;
  for (const auto& t : atom.transitions) {
    const Resolvent res{-t.omega_ba, +1};
    sum += t.dipole_sq * cutoff_piece(res, 3, cutoff, cfg, nullptr);
  }
  return -pref * sum;
}

ShiftBreakdown vf_shift(const atom::AtomModel& atom, core::Acceleration a,
                        const CutoffPolicy& cutoff, const quad::QuadConfig& cfg,
                        const core::PhysicalConstants& k) {
  atom.validate();
  cutoff.validate(atom);
  const double pref = k.e_charge * k.e_charge / (3.0 * M_PI * k.c * k.c * k.c);
  ShiftBreakdown out;
  out.cutoff_lambda = cutoff.lambda;
  out.acceleration = a.value;
  for (const auto& t : atom.transitions) {
    const Resolvent res{-t.omega_ba, -1};
    const double d2 = t.dipole_sq;
    out.inertial_vf += pref * d2 * cutoff_piece(res, 3, cutoff, cfg, &out.converged);
    if (a.value > 0.0) {
      const double a2c2 = a.value * a.value / (k.c * k.c);
      out.thermal_vf += pref * d2 * bose_piece(res, 3, a.value, cfg, k, &out.converged);
      out.nonthermal_a2_bose +=
          pref * d2 * a2c2 * bose_piece(res, 1, a.value, cfg, k, &out.converged);
      out.nonthermal_a2_cutoff +=
          pref * d2 * a2c2 * cutoff_piece(res, 1, cutoff, cfg, &out.converged);
    }
    // a = 0: thermal and a^2 pieces are identically zero; coth is never
    // evaluated at a singular argument
  }
  return out;
}

double thermal_nonthermal_ratio(const atom::AtomModel& atom, core::Acceleration a,
                                const CutoffPolicy& cutoff,
                                const quad::QuadConfig& cfg,
                                const core::PhysicalConstants& k) {
  if (!(a.value > 0.0))
    throw std::invalid_argument("thermal_nonthermal_ratio: requires a > 0");
  const ShiftBreakdown b = vf_shift(atom, a, cutoff, cfg, k);
  const double nonthermal = b.nonthermal_a2_bose + b.nonthermal_a2_cutoff;
  return std::abs(b.thermal_vf) / std::abs(nonthermal);
}

core::Acceleration comparable_acceleration(const atom::AtomModel& atom,
                                           const CutoffPolicy& cutoff,
                                           double a_lo, double a_hi,
                                           const quad::QuadConfig& cfg,
                                           const core::PhysicalConstants& k) {
  if (!(a_lo > 0.0 && a_hi > a_lo))
    throw std::invalid_argument("comparable_acceleration: need 0 < a_lo < a_hi");
  auto logratio = [&](double a) {
    return std::log(thermal_nonthermal_ratio(atom, core::Acceleration(a), cutoff, cfg, k));
  };
  const double f_lo = logratio(a_lo);
  const double f_hi = logratio(a_hi);
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    std::ostringstream os;
    os << "comparable_acceleration: |thermal|/|nonthermal| does not cross 1 in ["
       << a_lo << ", " << a_hi << "] cm/s^2; endpoint ratios "
       << std::exp(f_lo) << " and " << std::exp(f_hi);
    throw std::runtime_error(os.str());
  }
  double lo = std::log(a_lo), hi = std::log(a_hi);
  double s_lo = f_lo;
  // bisect on log(a) until the bracket is within 1% in a
  while (hi - lo > std::log1p(0.01)) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = logratio(std::exp(mid));
    if (std::signbit(f_mid) == std::signbit(s_lo)) {
      lo = mid;
      s_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return core::Acceleration(std::exp(0.5 * (lo + hi)));
}

}  // namespace accelqed::lamb
