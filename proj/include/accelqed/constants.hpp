#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Gaussian/CGS units throughout: erg, cm, s, esu, K.
namespace accelqed::core {

struct PhysicalConstants {
  double hbar;         // erg s
  double c;            // cm/s
  double k_boltzmann;  // erg/K
  double e_charge;     // esu
  double bohr_radius;  // cm

  friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

// CODATA 2018 values in CGS. Compiled in; tests may pass a modified set
// explicitly where an operation accepts one.
constexpr PhysicalConstants codata() {
  return PhysicalConstants{
      1.054571817e-27,    // hbar
      2.99792458e10,      // c (exact)
      1.380649e-16,       // k_B (exact)
      4.80320471257e-10,  // e = 1.602176634e-19 C * c_SI/10
      5.29177210903e-9,   // a_0
  };
}

constexpr double kStandardGravityCmS2 = 980.665;  // g_0, exact by definition

struct Acceleration {
  double value;  // cm/s^2, proper acceleration

  explicit Acceleration(double v) : value(v) {
    if (!(v >= 0.0))
      throw std::invalid_argument("Acceleration must be >= 0, got " + std::to_string(v));
  }
};

// T = hbar a / (2 pi c k_B)
inline double unruh_temperature(Acceleration a,
                                const PhysicalConstants& k = codata()) {
  return k.hbar * a.value / (2.0 * M_PI * k.c * k.k_boltzmann);
}

// Inverse map, a = 2 pi c k_B T / hbar
inline Acceleration unruh_acceleration(double temperature_K,
                                       const PhysicalConstants& k = codata()) {
  if (!(temperature_K >= 0.0))
    throw std::invalid_argument("Temperature must be >= 0 K");
  return Acceleration(2.0 * M_PI * k.c * k.k_boltzmann * temperature_K / k.hbar);
}

enum class AccelUnit { cm_s2, m_s2, g0 };

inline double accel_unit_in_cm_s2(AccelUnit u) {
  switch (u) {
    case AccelUnit::cm_s2: return 1.0;
    case AccelUnit::m_s2: return 100.0;
    case AccelUnit::g0: return kStandardGravityCmS2;
  }
  throw std::invalid_argument("unknown acceleration unit");
}

inline AccelUnit parse_accel_unit(const std::string& tag) {
  if (tag == "cm_s2" || tag == "cm/s2") return AccelUnit::cm_s2;
  if (tag == "m_s2" || tag == "m/s2") return AccelUnit::m_s2;
  if (tag == "g0") return AccelUnit::g0;
  throw std::invalid_argument("unknown acceleration unit tag: " + tag);
}

inline double convert_acceleration(double value, AccelUnit from, AccelUnit to) {
  return value * (accel_unit_in_cm_s2(from) / accel_unit_in_cm_s2(to));
}

}  // namespace accelqed::core
