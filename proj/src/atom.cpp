#include "accelqed/atom.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace accelqed::atom {

void AtomModel::validate() const {
  if (transitions.empty())
    throw std::invalid_argument("AtomModel '" + name + "': needs at least one transition");
  for (const auto& t : transitions) {
    if (!(std::isfinite(t.omega_ba) && t.omega_ba != 0.0))
      throw std::invalid_argument("AtomModel '" + name + "': omega_ba must be finite and nonzero");
    if (!(t.dipole_sq >= 0.0))
      throw std::invalid_argument("AtomModel '" + name + "': dipole_sq must be >= 0");
  }
}

bool AtomModel::is_ground_state() const {
  return std::all_of(transitions.begin(), transitions.end(),
                     [](const Transition& t) { return t.omega_ba > 0.0; });
}

double AtomModel::max_transition_frequency() const {
  double m = 0.0;
  for (const auto& t : transitions) m = std::max(m, std::abs(t.omega_ba));
  return m;
}

void PolarizabilityModel::validate() const {
  if (const auto* s = std::get_if<StaticPol>(&variant)) {
    if (!(s->alpha0 >= 0.0))
      throw std::invalid_argument("Static polarizability: alpha0 must be >= 0");
  } else if (const auto* l = std::get_if<LorentzPol>(&variant)) {
    if (!(l->alpha0 >= 0.0))
      throw std::invalid_argument("Lorentz polarizability: alpha0 must be >= 0");
    if (!(l->omega0 > 0.0))
      throw std::invalid_argument("Lorentz polarizability: omega0 must be > 0");
  } else {
    const auto& m = std::get<AtomModel>(variant);
    m.validate();
    if (!m.is_ground_state())
      throw std::invalid_argument(
          "FromTransitions polarizability requires a ground-state atom model");
  }
}

double PolarizabilityModel::lowest_resonance() const {
  if (std::holds_alternative<StaticPol>(variant)) return 0.0;
  if (const auto* l = std::get_if<LorentzPol>(&variant)) return l->omega0;
  const auto& m = std::get<AtomModel>(variant);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& t : m.transitions) lo = std::min(lo, std::abs(t.omega_ba));
  return lo;
}

double PolarizabilityModel::static_value(const core::PhysicalConstants& k) const {
  return polarizability_iu(*this, 0.0, k);
}

double polarizability_iu(const PolarizabilityModel& model, double u,
                         const core::PhysicalConstants& k) {
  if (!(u >= 0.0))
    throw std::invalid_argument("polarizability_iu: u must be >= 0");
  if (const auto* s = std::get_if<StaticPol>(&model.variant)) return s->alpha0;
  if (const auto* l = std::get_if<LorentzPol>(&model.variant))
    return l->alpha0 * l->omega0 * l->omega0 / (l->omega0 * l->omega0 + u * u);
  const auto& m = std::get<AtomModel>(model.variant);
  double sum = 0.0;
  for (const auto& t : m.transitions)
    sum += t.omega_ba * t.dipole_sq / (t.omega_ba * t.omega_ba + u * u);
  return 2.0 * k.e_charge * k.e_charge / (3.0 * k.hbar) * sum;
}

quad::IntegralResult london_integral(const PolarizabilityModel& a,
                                     const PolarizabilityModel& b,
                                     const quad::QuadConfig& cfg,
                                     const core::PhysicalConstants& k) {
  a.validate();
  b.validate();
  const bool a_static = std::holds_alternative<StaticPol>(a.variant);
  const bool b_static = std::holds_alternative<StaticPol>(b.variant);
  if (a_static && b_static)
    throw std::invalid_argument(
        "london_integral: Static x Static polarizabilities give a divergent "
        "integral; use a frequency-dependent model for at least one atom");
  // wavenumber scale of the slowest-decaying Lorentzian tail
  double w_scale = 0.0;
  if (!a_static) w_scale = std::max(w_scale, a.lowest_resonance());
  if (!b_static) w_scale = std::max(w_scale, b.lowest_resonance());
  const double k_scale = w_scale / k.c;
  // tails fall as 1/u^4 (both dynamic) or 1/u^2 (one Static); pick the
  // truncation point so the dropped tail is below the requested tolerance
  const double upper = (a_static || b_static) ? 1e9 * k_scale : 3e3 * k_scale;
  auto f = [&](double u) {
    return polarizability_iu(a, k.c * u, k) * polarizability_iu(b, k.c * u, k);
  };
  return quad::integrate_interval(f, 0.0, upper, cfg);
}

AtomModel hydrogen_1s() {
  // 1s -> 2p at the Lyman-alpha frequency; |<1s|r|2p>|^2 from the
  // oscillator strength f = 0.4162 via d^2 = 3 hbar f / (2 m_e omega).
  return AtomModel{"hydrogen", "1s", {{1.5503e16, 4.662e-17}}};
}

PolarizabilityModel hydrogen_lorentz() {
  const double a0 = core::codata().bohr_radius;
  return PolarizabilityModel{LorentzPol{4.5 * a0 * a0 * a0, 1.5503e16}};
}

AtomModel load_atom_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("atom dataset: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("atom dataset: root must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "state" && key != "transitions")
      throw std::invalid_argument("atom dataset: unknown key '" + key + "'");
  if (!j.contains("name") || !j["name"].is_string())
    throw std::invalid_argument("atom dataset: missing string field 'name'");
  if (!j.contains("state") || !j["state"].is_string())
    throw std::invalid_argument("atom dataset: missing string field 'state'");
  if (!j.contains("transitions") || !j["transitions"].is_array())
    throw std::invalid_argument("atom dataset: missing array field 'transitions'");
  AtomModel m;
  m.name = j["name"].get<std::string>();
  m.state_label = j["state"].get<std::string>();
  for (const auto& t : j["transitions"]) {
    if (!t.is_object() || !t.contains("omega_ba_rad_s") || !t.contains("dipole_sq_cm2"))
      throw std::invalid_argument(
          "atom dataset: each transition needs omega_ba_rad_s and dipole_sq_cm2");
    for (const auto& [key, _] : t.items())
      if (key != "omega_ba_rad_s" && key != "dipole_sq_cm2")
        throw std::invalid_argument("atom dataset: unknown transition key '" + key + "'");
    m.transitions.push_back(
        {t["omega_ba_rad_s"].get<double>(), t["dipole_sq_cm2"].get<double>()});
  }
  m.validate();
  return m;
}

AtomModel load_atom_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open atom dataset: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_atom_json(ss.str());
}

}  // namespace accelqed::atom
