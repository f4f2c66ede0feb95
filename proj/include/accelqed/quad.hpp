#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace accelqed::quad {

struct QuadConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-300;
  std::size_t max_evaluations = 1'000'000;
  // Semi-infinite integrals are truncated where the decay envelope
  // exp(-x/decay_scale) drops below this fraction of its peak.
  double tail_truncation_threshold = 1e-16;

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
      throw std::invalid_argument("QuadConfig: rel_tol must be in (0,1)");
    if (max_evaluations < 100)
      throw std::invalid_argument("QuadConfig: max_evaluations must be >= 100");
    if (!(abs_tol >= 0.0))
      throw std::invalid_argument("QuadConfig: abs_tol must be >= 0");
    if (!(tail_truncation_threshold > 0.0 && tail_truncation_threshold < 1.0))
      throw std::invalid_argument("QuadConfig: tail_truncation_threshold must be in (0,1)");
  }
};

struct IntegralResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval.
IntegralResult integrate_interval(const Integrand& f, double a, double b,
                                  const QuadConfig& cfg = {});

// Integral over [0, inf) of an integrand bounded by C*exp(-x/decay_scale)
// at large x. The tail is truncated per cfg.tail_truncation_threshold.
IntegralResult integrate_decaying(const Integrand& f, double decay_scale,
                                  const QuadConfig& cfg = {});

// Cauchy principal value over [0, inf) with a simple pole at `pole` on the
// positive axis, for integrands decaying like exp(-x/decay_scale) away from
// the pole. Pole handled by residue subtraction: the residue r is estimated
// by a Richardson-extrapolated limit of (x-pole)*f(x), the window
// [pole-w, pole+w] integrates f(x) - r/(x-pole), and the analytic remainder
// r*log((b-pole)/(pole-a)) vanishes for the symmetric window.
IntegralResult integrate_principal_value(const Integrand& f, double pole,
                                         double decay_scale,
                                         const QuadConfig& cfg = {});

// Same, on a finite interval [a, b]. The pole may lie outside [a, b], in
// which case this reduces to plain adaptive quadrature.
IntegralResult integrate_principal_value(const Integrand& f, double pole,
                                         double a, double b,
                                         const QuadConfig& cfg = {});

// coth(x) for x > 0, relative error < 1e-13 over [1e-12, 700].
double coth_stable(double x);

// n_B(x) = 1/(e^x - 1) for x > 0. Satisfies coth(x/2) = 1 + 2 n_B(x).
double bose_occupation(double x);

}  // namespace accelqed::quad
