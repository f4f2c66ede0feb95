// Acceptance gate: one line per criterion, nonzero exit if any fail.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "accelqed/pair.hpp"
#include "accelqed/run.hpp"
#include "accelqed/wall.hpp"

using namespace accelqed;

namespace {

int g_failures = 0;

void report(int n, const std::string& label, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", n, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

void criterion(int n, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(n, label, ok, detail);
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

const double kPi = 3.14159265358979323846;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pair::PairConfig lorentz_pair(double R, double a, double t) {
  return pair::PairConfig{R, a, t, atom::hydrogen_lorentz(), atom::hydrogen_lorentz()};
}

double eval_term(pair::Term term, const pair::PairConfig& c) {
  switch (term) {
    case pair::Term::static_term: return pair::static_vdw(c);
    case pair::Term::linear: return pair::linear_correction(c);
    case pair::Term::quadratic: return pair::quadratic_correction(c);
  }
  return 0.0;
}

double wall_test_kernel(double w) {
  const double ws = 2.0 * 1.5503e16;
  return w / (w + ws) * std::exp(-w / ws);
}

double pv_riemann(const std::function<double(double)>& h, double pole, double upper) {
  const double delta = pole / 20000.5;
  const auto n = static_cast<std::size_t>(upper / delta);
  double sum = 0.0;
  for (std::size_t j = 1; j <= n; ++j) sum += h(static_cast<double>(j) * delta);
  return sum * delta;
}

}  // namespace

int main() {
  const auto k = core::codata();
  const double w0 = atom::hydrogen_lorentz().lowest_resonance();

  criterion(1, "acceleration at 1 K lands on the 1e22 cm/s^2 scale", [&](std::string& d) {
    const double a = core::unruh_acceleration(1.0).value;
    d = "a(1 K) = " + std::to_string(a);
    return a > 2.3e22 && a < 2.6e22;
  });

  criterion(2, "retarded dispersion coefficient -23/(4 pi) for constant alpha",
            [&](std::string&) {
    const double aa = 1e-24 * 2e-24;
    for (double R : {1e-5, 1e-4, 1e-3}) {
      pair::PairConfig c{R, 0.0, 0.0, atom::PolarizabilityModel{atom::StaticPol{1e-24}},
                         atom::PolarizabilityModel{atom::StaticPol{2e-24}}};
      const double want = -23.0 / (4.0 * kPi) * k.hbar * k.c * aa / std::pow(R, 7);
      if (rel_err(pair::static_vdw(c), want) >= 1e-6) return false;
    }
    return true;
  });

  criterion(3, "London limit for identical Lorentz atoms", [&](std::string& d) {
    const double R = 1e-3 * k.c / w0;
    const auto c = lorentz_pair(R, 0.0, 0.0);
    const double alpha0 = c.alpha_a.static_value();
    const double want = -0.75 * k.hbar * w0 * alpha0 * alpha0 / std::pow(R, 6);
    const double rel = rel_err(pair::static_vdw(c), want);
    d = "rel dev " + std::to_string(rel);
    return rel < 5e-3;
  });

  criterion(4, "power laws -6/-5/-6 near and -7/-6/-7 far", [&](std::string&) {
    const double near_R = 1e-3 * k.c / w0, far_R = 1e3 * k.c / w0;
    const double expect_near[] = {-6.0, -5.0, -6.0};
    const double expect_far[] = {-7.0, -6.0, -7.0};
    const pair::Term terms[] = {pair::Term::static_term, pair::Term::linear,
                                pair::Term::quadratic};
    for (int i = 0; i < 3; ++i) {
      if (std::abs(pair::powerlaw_exponent(terms[i], lorentz_pair(near_R, 1e13, 1e-4)) -
                   expect_near[i]) >= 0.05)
        return false;
      if (std::abs(pair::powerlaw_exponent(terms[i], lorentz_pair(far_R, 1e13, 1e-4)) -
                   expect_far[i]) >= 0.05)
        return false;
    }
    return true;
  });

  criterion(5, "rest-frame interaction recovered exactly at a = 0 or t = 0",
            [&](std::string&) {
    for (const auto& c : {lorentz_pair(1e-6, 0.0, 1e-4), lorentz_pair(1e-6, 1e13, 0.0)}) {
      const auto b = pair::total_interaction(c);
      if (b.linear_t_term != 0.0 || b.quadratic_t_term != 0.0) return false;
      if (b.total != b.static_term) return false;
      if (b.static_term != pair::static_vdw(c)) return false;
    }
    return true;
  });

  criterion(6, "correction magnitudes at a^2 t^2 / c^2 = 0.2", [&](std::string& d) {
    const double t = 1e-3;
    const double a = std::sqrt(0.2) * k.c / t;
    const double rc_near = pair::relative_correction(lorentz_pair(1e-7, a, t));
    const double rc_far = pair::relative_correction(lorentz_pair(3e-5, a, t));
    const auto c = lorentz_pair(1e-7, a, t);
    const double ratio = std::abs(pair::quadratic_correction(c) / pair::static_vdw(c));
    const double analytic = 2.0 / 9.0 * a * a * t * t / (k.c * k.c);
    d = "near " + std::to_string(rc_near) + ", far " + std::to_string(rc_far);
    return rc_near > 0.02 && rc_near < 0.30 && rc_far > 0.002 && rc_far < 0.10 &&
           rel_err(ratio, analytic) < 0.01;
  });

  criterion(7, "radiation reaction is bit-identical across accelerations",
            [&](std::string&) {
    const auto m = atom::hydrogen_1s();
    const lamb::CutoffPolicy cut;
    const double rr0 = lamb::rr_shift(m, cut);
    for (double a : {0.0, 1e10, 1e22, 1e26}) {
      (void)lamb::vf_shift(m, core::Acceleration(a), cut);
      if (lamb::rr_shift(m, cut) != rr0) return false;
    }
    wall::WallKernel kern;
    kern.evaluator = [](double w, double, double) { return wall_test_kernel(w); };
    kern.k_max = 1.0;
    wall::WallConfig wc{1e-6, 0.0, {}};
    const double wr0 = wall::rr_shift_wall(m, kern, wc);
    for (double a : {1e10, 1e22, 1e26}) {
      wc.a = a;
      if (wall::rr_shift_wall(m, kern, wc) != wr0) return false;
    }
    return true;
  });

  criterion(8, "thermal piece: zero at a = 0, cutoff-stable, monotone in a",
            [&](std::string&) {
    const auto m = atom::hydrogen_1s();
    lamb::CutoffPolicy cut;
    if (lamb::vf_shift(m, core::Acceleration(0.0), cut).thermal_vf != 0.0) return false;
    const auto b1 = lamb::vf_shift(m, core::Acceleration(1e24), cut);
    lamb::CutoffPolicy doubled = cut;
    doubled.lambda = 2.0 * cut.lambda;
    const auto b2 = lamb::vf_shift(m, core::Acceleration(1e24), doubled);
    if (rel_err(b2.thermal_vf, b1.thermal_vf) >= 1e-8) return false;
    if (rel_err(b2.nonthermal_a2_bose, b1.nonthermal_a2_bose) >= 1e-8) return false;
    double prev = 0.0;
    for (double a = 1e22; a <= 1.0001e26; a *= std::sqrt(10.0)) {
      const double th = std::abs(lamb::vf_shift(m, core::Acceleration(a), cut).thermal_vf);
      if (th <= prev) return false;
      prev = th;
    }
    return true;
  });

  criterion(9, "thermal and non-thermal parts comparable within a* in [1e23, 1e27]",
            [&](std::string& d) {
    const auto m = atom::hydrogen_1s();
    const lamb::CutoffPolicy cut;
    const auto a = lamb::comparable_acceleration(m, cut, 1e23, 1e27);
    const double r = lamb::thermal_nonthermal_ratio(m, a, cut);
    d = "a* = " + std::to_string(a.value) + ", ratio " + std::to_string(r);
    return std::abs(std::log(r)) < 0.01;
  });

  criterion(10, "quadrature oracles: analytic kernels, PV reference, coth identity",
            [&](std::string&) {
    using quad::integrate_decaying;
    const struct { std::function<double(double)> f; double scale, want; } cases[] = {
        {[](double x) { return x * x * x * std::exp(-2.0 * x); }, 0.5, 3.0 / 8.0},
        {[](double x) {
           return (((x + 2.0) * x + 5.0) * x * x + 6.0 * x + 3.0) * std::exp(-2.0 * x);
         }, 0.5, 23.0 / 4.0},
        {[](double x) { return (3.0 * x * x + 4.0 * x + 2.0) * std::exp(-2.0 * x); },
         0.5, 11.0 / 4.0},
        {[](double x) {
           const double x2 = x * x;
           return (-x2 * x2 + 4.0 * x2 * x + 8.0 * x2 + 8.0 * x + 4.0) * std::exp(-2.0 * x);
         }, 0.5, 27.0 / 4.0}};
    for (const auto& c : cases)
      if (rel_err(integrate_decaying(c.f, c.scale).value, c.want) >= 1e-8) return false;
    const auto pv = quad::integrate_principal_value(
        [](double x) { return std::exp(-x) / (x - 1.0); }, 1.0, 1.0);
    if (rel_err(pv.value, -0.6971748832350661) >= 1e-7) return false;
    for (double x = 1e-8; x <= 50.0; x *= 3.0)
      if (rel_err(quad::coth_stable(x / 2.0), 1.0 + 2.0 * quad::bose_occupation(x)) >= 1e-12)
        return false;
    return true;
  });

  criterion(11, "wall engine against dense-grid oracle, scaling, Bose limit",
            [&](std::string&) {
    const auto m = atom::hydrogen_1s();
    wall::WallKernel kern;
    kern.evaluator = [](double w, double, double) { return wall_test_kernel(w); };
    kern.k_max = 1.0;
    wall::WallConfig wc{1e-6, 0.0, {}};
    wc.cutoff.lambda = 1e18;
    const double wt = 1.5503e16;
    const double z3 = 2.0 * wc.z0;
    const double pref = k.e_charge * k.e_charge /
                        (8.0 * kPi * kPi * k.c * k.c * k.c * z3 * z3 * z3) * 4.662e-17 / 3.0;
    const double rr_want = pref * pv_riemann([&](double w) {
      return wall_test_kernel(w) * (1.0 / (w - wt) + 1.0 / (w + wt));
    }, wt, wc.cutoff.lambda);
    const double vf_want = -pref * pv_riemann([&](double w) {
      return wall_test_kernel(w) * (1.0 / (w - wt) - 1.0 / (w + wt));
    }, wt, wc.cutoff.lambda);
    if (rel_err(wall::rr_shift_wall(m, kern, wc), rr_want) >= 1e-5) return false;
    const double vf = wall::vf_shift_wall(m, kern, wc);
    if (rel_err(vf, vf_want) >= 1e-5) return false;
    auto far = wc;
    far.z0 = 2.0 * wc.z0;
    if (wall::vf_shift_wall(m, kern, far) * 8.0 != vf) return false;
    auto slow = wc;
    slow.a = 1e10;
    return rel_err(wall::vf_shift_wall(m, kern, slow), vf) < 1e-6;
  });

  criterion(12, "golden configs, strict schema, partial-failure exit", [&](std::string& d) {
    const std::string src = ACCELQED_SOURCE_DIR "/tests/golden/";
    const std::string out_dir = ACCELQED_BINARY_DIR "/";
    for (const std::string name :
         {"unruh", "pair_far_static", "pair_london", "pair_correction", "lamb"}) {
      auto cfg = cli::parse_config(slurp(src + name + ".json"));
      cfg.output = cli::OutputSpec{out_dir + "accept_" + name + ".csv",
                                   cli::OutputSpec::Format::csv};
      if (cli::run(cfg).exit_status != 0) {
        d = name + ": nonzero exit";
        return false;
      }
      if (slurp(cfg.output->path) != slurp(src + name + ".csv")) {
        d = name + ": output drifted from the checked-in reference";
        return false;
      }
    }
    try {
      cli::parse_config(R"({"command": "unruh", "a_cm_s2": [1], "surprise": 1})");
      d = "unknown key accepted";
      return false;
    } catch (const cli::ConfigError&) {
    }
    auto partial = cli::parse_config(R"({
      "command": "lamb", "atom": {"builtin": "hydrogen"},
      "a_cm_s2": [0.0, 1e22], "quad": {"max_evaluations": 200}})");
    partial.output = cli::OutputSpec{out_dir + "accept_partial.csv",
                                     cli::OutputSpec::Format::csv};
    if (cli::run(partial).exit_status != 2) {
      d = "expected exit 2 for the partial failure";
      return false;
    }
    std::istringstream rows(slurp(partial.output->path));
    std::string line;
    int n = 0;
    while (std::getline(rows, line)) ++n;
    if (n != 3) {
      d = "partial-failure output lost rows";
      return false;
    }
    return true;
  });

  if (g_failures > 0) {
    std::printf("%d of 12 criteria failing\n", g_failures);
    return 1;
  }
  std::printf("all 12 criteria passing\n");
  return 0;
}
