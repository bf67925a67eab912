#include "springsel/mechanics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace springsel {

namespace {

constexpr double kPi = std::numbers::pi;

// Slack allowed on range checks so values computed from the same inputs
// (e.g. L = L0 - P/R) are not rejected by one ulp.
double slack(double scale) { return 1e-9 * std::max(1.0, std::abs(scale)); }

constexpr Material kSteel{MaterialId::steel, 81500.0, 206000.0, 7850.0, 2230.0};
constexpr Material kStainless{MaterialId::stainless, 70000.0, 185000.0, 7900.0, 1950.0};

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string_view to_string(MaterialId id) noexcept {
  switch (id) {
    case MaterialId::steel:
      return "steel";
    case MaterialId::stainless:
      return "stainless";
  }
  return "?";
}

std::string_view to_string(EndType ends) noexcept {
  switch (ends) {
    case EndType::closed:
      return "closed";
    case EndType::closed_ground:
      return "closed_ground";
  }
  return "?";
}

std::optional<MaterialId> parse_material(std::string_view text) noexcept {
  if (text == "steel") return MaterialId::steel;
  if (text == "stainless") return MaterialId::stainless;
  return std::nullopt;
}

std::optional<EndType> parse_end_type(std::string_view text) noexcept {
  if (text == "closed") return EndType::closed;
  if (text == "closed_ground") return EndType::closed_ground;
  return std::nullopt;
}

double Material::tensile_strength(double d) const { return tensile_at_1mm * std::pow(d, -0.16); }

const Material& material(MaterialId id) noexcept {
  return id == MaterialId::stainless ? kStainless : kSteel;
}

void validate_entry(const CatalogueEntry& e) {
  if (!finite_positive(e.d)) throw GeometryError("wire diameter must be positive");
  if (!std::isfinite(e.Do) || e.Do <= 2.0 * e.d) throw GeometryError("outer diameter must exceed 2*d");
  if (!finite_positive(e.L0)) throw GeometryError("free length must be positive");
  if (!finite_positive(e.R)) throw GeometryError("rate must be positive");
  if (!std::isfinite(e.price) || e.price < 0.0) throw GeometryError("price must be non-negative");
  const double C = (e.Do - e.d) / e.d;
  if (C < kMinSpringIndex) {
    throw GeometryError("spring index " + std::to_string(C) + " below 3");
  }
}

DerivedGeometry derive_geometry(const CatalogueEntry& entry, const Material& mat) {
  validate_entry(entry);
  DerivedGeometry g;
  g.D = entry.Do - entry.d;
  g.Di = entry.Do - 2.0 * entry.d;
  g.C = g.D / entry.d;
  g.n = mat.G * std::pow(entry.d, 4) / (8.0 * std::pow(g.D, 3) * entry.R);
  if (!(g.n > 0.0) || !std::isfinite(g.n)) throw GeometryError("non-positive active coil count");
  g.nt = g.n + kDeadCoils;
  g.Ls = entry.ends == EndType::closed_ground ? g.nt * entry.d : (g.nt + 1.0) * entry.d;
  if (g.Ls >= entry.L0) {
    throw GeometryError("solid length " + std::to_string(g.Ls) + " mm not below free length");
  }
  g.p = (entry.L0 - g.Ls) / g.n + entry.d;
  return g;
}

double min_operating_length(const CatalogueEntry& entry, const DerivedGeometry& geom) noexcept {
  return geom.Ls + kSolidReserveFraction * (entry.L0 - geom.Ls);
}

double load_at_length(const CatalogueEntry& entry, const DerivedGeometry& geom, double L) {
  if (L < geom.Ls - slack(geom.Ls) || L > entry.L0 + slack(entry.L0)) {
    throw RangeError("length " + std::to_string(L) + " outside [Ls, L0]");
  }
  return std::max(0.0, entry.R * (entry.L0 - L));
}

double length_at_load(const CatalogueEntry& entry, const DerivedGeometry& geom, double P) {
  const double solid_load = entry.R * (entry.L0 - geom.Ls);
  if (P < 0.0 || P > solid_load + slack(solid_load)) {
    throw RangeError("load " + std::to_string(P) + " N exceeds solid load");
  }
  return entry.L0 - P / entry.R;
}

double stored_energy(const CatalogueEntry& entry, const DerivedGeometry& geom, double L1, double L2) {
  if (L2 < geom.Ls - slack(geom.Ls) || L1 < L2 || L1 > entry.L0 + slack(entry.L0)) {
    throw RangeError("operating lengths must satisfy Ls <= L2 <= L1 <= L0");
  }
  const double s1 = entry.L0 - L1;
  const double s2 = entry.L0 - L2;
  return 0.5 * entry.R * (s2 * s2 - s1 * s1);
}

double spring_mass_g(const DerivedGeometry& geom, const CatalogueEntry& entry, const Material& mat) {
  const double wire_mm3 = (kPi * entry.d * entry.d / 4.0) * (kPi * geom.D * geom.nt);
  return mat.rho * wire_mm3 * 1e-6;
}

double active_mass_kg(const DerivedGeometry& geom, const CatalogueEntry& entry, const Material& mat) {
  const double wire_mm3 = (kPi * entry.d * entry.d / 4.0) * (kPi * geom.D * geom.n);
  return mat.rho * wire_mm3 * 1e-9;
}

double envelope_volume_cm3(const CatalogueEntry& entry, double L) {
  return kPi * (entry.Do / 2.0) * (entry.Do / 2.0) * L / 1000.0;
}

MassAndVolumes mass_and_volumes(const CatalogueEntry& entry, const DerivedGeometry& geom,
                                const Material& mat, double L) {
  return {spring_mass_g(geom, entry, mat), envelope_volume_cm3(entry, entry.L0),
          envelope_volume_cm3(entry, L)};
}

double surge_frequency(double rate_n_per_mm, double active_mass_kg) {
  return 0.5 * std::sqrt(rate_n_per_mm * 1e3 / active_mass_kg);
}

double surge_frequency(const CatalogueEntry& entry, const DerivedGeometry& geom, const Material& mat) {
  return surge_frequency(entry.R, active_mass_kg(geom, entry, mat));
}

double wahl_factor(double C) { return (4.0 * C - 1.0) / (4.0 * C - 4.0) + 0.615 / C; }

double stress_per_newton(const CatalogueEntry& entry, const DerivedGeometry& geom) {
  return wahl_factor(geom.C) * 8.0 * geom.D / (kPi * std::pow(entry.d, 3));
}

double shear_stress(const CatalogueEntry& entry, const DerivedGeometry& geom, double P) {
  if (P < 0.0) throw RangeError("negative load");
  return stress_per_newton(entry, geom) * P;
}

double endurance_fraction(double ncycles) {
  if (ncycles <= 1e5) return 0.42;
  if (ncycles <= 1e6) return 0.38;
  return 0.35;
}

double static_allowable_shear(const CatalogueEntry& entry, const Material& mat) {
  return 0.56 * mat.tensile_strength(entry.d);
}

double fatigue_life_factor(const CatalogueEntry& entry, const DerivedGeometry& geom,
                           const Material& mat, double P1, double P2, double ncycles) {
  if (P1 < 0.0 || P2 < P1) throw RangeError("fatigue check needs 0 <= P1 <= P2");
  if (ncycles < 1.0) throw RangeError("Ncycles must be at least 1");
  const double k = stress_per_newton(entry, geom);
  const double tau1 = k * P1;
  const double tau2 = k * P2;
  const double tau_u = static_allowable_shear(entry, mat);
  const double tau_e = endurance_fraction(ncycles) * tau_u;
  const double mean = 0.5 * (tau1 + tau2);
  const double amplitude = 0.5 * (tau2 - tau1);
  // Goodman: amplitude/tau_e + mean/tau_u = 1 on the boundary.
  const double utilisation = amplitude / tau_e + mean / tau_u;
  if (utilisation * kFatigueFactorCap <= 1.0) return kFatigueFactorCap;
  return 1.0 / utilisation;
}

double buckling_length(const CatalogueEntry& entry, const DerivedGeometry& geom,
                       const Material& mat, double nu) {
  if (!(nu > 0.0)) throw RangeError("end fixation factor must be positive");
  const double ratio = mat.G / mat.E;
  const double t = kPi * geom.D / (nu * entry.L0);
  const double radicand = 1.0 - (1.0 - ratio) / (0.5 + ratio) * t * t;
  if (radicand < 0.0) return 0.0;
  const double critical_deflection = entry.L0 * 0.5 / (1.0 - ratio) * (1.0 - std::sqrt(radicand));
  return std::max(0.0, entry.L0 - critical_deflection);
}

}  // namespace springsel
