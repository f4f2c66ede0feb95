#include "accelqed/wall.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace accelqed::wall {

double WallKernel::eval_checked(double w, double z0, double a) const {
  const double v = evaluator(w, z0, a);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "wall kernel returned a non-finite value at omega = " << w;
    throw std::runtime_error(os.str());
  }
  if (std::abs(v) > k_max * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "wall kernel violates its declared bound |K| <= " << k_max
       << " at omega = " << w << " (K = " << v << ")";
    throw std::runtime_error(os.str());
  }
  return v;
}

void WallKernel::check_contract(double omega_scale, double z0, double a) const {
  // K must vanish at least linearly at the origin, otherwise the coth
  // weight makes the integral log-divergent there
  const double t1 = 1e-4 * omega_scale;
  const double t2 = 1e-7 * omega_scale;
  const double r1 = std::abs(eval_checked(t1, z0, a)) / t1;
  const double r2 = std::abs(eval_checked(t2, z0, a)) / t2;
  const double floor = 1e-12 * k_max / omega_scale;
  if (r2 > 50.0 * std::max(r1, floor)) {
    std::ostringstream os;
    os << "wall kernel violates the K(omega->0) = O(omega) contract: "
       << "|K|/omega grows from " << r1 << " at omega = " << t1 << " to "
       << r2 << " at omega = " << t2;
    throw std::runtime_error(os.str());
  }
}

namespace {

double checked(const quad::IntegralResult& r) {
  if (!r.converged)
    throw std::runtime_error("wall: quadrature did not converge");
  return r.value;
}

// sum over transitions of d^2/3 * [PV integrals of K * resolvent]
double kernel_shift(const atom::AtomModel& atom, const WallKernel& kernel,
                    const WallConfig& wc, int resolvent_sign, bool with_coth,
                    const quad::QuadConfig& cfg, const core::PhysicalConstants& k) {
  atom.validate();
  wc.validate();
  wc.cutoff.validate(atom);
  kernel.check_contract(atom.max_transition_frequency(), wc.z0, wc.a);
  double sum = 0.0;
  for (const auto& t : atom.transitions) {
    const double s = -t.omega_ba;  // omega_ab
    const double pole = std::abs(s);
    auto res = [s, resolvent_sign](double w) {
      return 1.0 / (w + s) + resolvent_sign / (w - s);
    };
    double integral = 0.0;
    if (wc.cutoff.shape == lamb::CutoffPolicy::Shape::hard) {
      auto f = [&](double w) { return kernel.eval_checked(w, wc.z0, wc.a) * res(w); };
      integral += checked(quad::integrate_principal_value(f, pole, 0.0, wc.cutoff.lambda, cfg));
    } else {
      auto f = [&](double w) {
        return kernel.eval_checked(w, wc.z0, wc.a) *
               std::exp(-w / wc.cutoff.lambda) * res(w);
      };
      integral += checked(quad::integrate_principal_value(f, pole, wc.cutoff.lambda, cfg));
    }
    if (with_coth && wc.a > 0.0) {
      const double theta = 2.0 * M_PI * k.c / wc.a;
      auto f = [&](double w) {
        return kernel.eval_checked(w, wc.z0, wc.a) * 2.0 *
               quad::bose_occupation(theta * w) * res(w);
      };
      integral += checked(quad::integrate_principal_value(f, pole, 1.0 / theta, cfg));
    }
    sum += t.dipole_sq / 3.0 * integral;
  }
  const double z3 = 2.0 * wc.z0;
  return k.e_charge * k.e_charge /
         (8.0 * M_PI * M_PI * k.c * k.c * k.c * z3 * z3 * z3) * sum;
}

}  // namespace

double vf_shift_wall(const atom::AtomModel& atom, const WallKernel& kernel,
                     const WallConfig& wc, const quad::QuadConfig& cfg,
                     const core::PhysicalConstants& k) {
  return -kernel_shift(atom, kernel, wc, -1, /*with_coth=*/true, cfg, k);
}

double rr_shift_wall(const atom::AtomModel& atom, const WallKernel& kernel,
                     const WallConfig& wc, const quad::QuadConfig& cfg,
                     const core::PhysicalConstants& k) {
  return +kernel_shift(atom, kernel, wc, +1, /*with_coth=*/false, cfg, k);
}

double total_wall_shift(const atom::AtomModel& atom, const WallKernel& kernel,
                        const WallConfig& wc, const quad::QuadConfig& cfg,
                        const core::PhysicalConstants& k) {
  return vf_shift_wall(atom, kernel, wc, cfg, k) +
         rr_shift_wall(atom, kernel, wc, cfg, k);
}

namespace {

struct Pchip {
  std::vector<double> x, y, slope;

  // Fritsch-Carlson monotone slopes
  void build() {
    const std::size_t n = x.size();
    slope.assign(n, 0.0);
    if (n == 1) return;
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    slope[0] = d[0];
    slope[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] * d[i] <= 0.0) {
        slope[i] = 0.0;
      } else {
        const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
        const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
        slope[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
      }
    }
  }

  double operator()(double t) const {
    if (t <= x.front()) {
      // linear from (0, 0) through the first sample keeps K = O(omega)
      return t <= 0.0 ? 0.0 : y.front() * (t / x.front());
    }
    if (t >= x.back()) return 0.0;
    auto it = std::upper_bound(x.begin(), x.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double h = x[i + 1] - x[i];
    const double s = (t - x[i]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    return h00 * y[i] + h10 * h * slope[i] + h01 * y[i + 1] + h11 * h * slope[i + 1];
  }
};

}  // namespace

WallKernel load_kernel_csv_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("kernel CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "omega_rad_s,K_value")
    throw std::invalid_argument("kernel CSV: header must be 'omega_rad_s,K_value'");
  auto table = std::make_shared<Pchip>();
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    double w, v;
    char comma;
    if (!(row >> w >> comma >> v) || comma != ',')
      throw std::invalid_argument("kernel CSV: malformed row at line " +
                                  std::to_string(lineno));
    if (!table->x.empty() && w <= table->x.back())
      throw std::invalid_argument("kernel CSV: omega must be strictly increasing (line " +
                                  std::to_string(lineno) + ")");
    if (!(w > 0.0))
      throw std::invalid_argument("kernel CSV: omega must be > 0 (line " +
                                  std::to_string(lineno) + ")");
    table->x.push_back(w);
    table->y.push_back(v);
  }
  if (table->x.size() < 2)
    throw std::invalid_argument("kernel CSV: need at least two rows");
  table->build();
  double bound = 0.0;
  for (double v : table->y) bound = std::max(bound, std::abs(v));
  WallKernel kern;
  kern.k_max = bound * 1.1;  // Hermite overshoot margin
  kern.source = WallKernel::Source::tabulated;
  kern.evaluator = [table](double w, double, double) { return (*table)(w); };
  return kern;
}

WallKernel load_kernel_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open kernel CSV: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_kernel_csv_text(ss.str());
}

}  // namespace accelqed::wall
