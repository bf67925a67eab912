#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace springsel {

/// Raised when a catalogue entry describes a spring that cannot exist.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a length or load lies outside the spring's working range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class MaterialId : std::uint8_t { steel, stainless };
enum class EndType : std::uint8_t { closed, closed_ground };

std::string_view to_string(MaterialId id) noexcept;
std::string_view to_string(EndType ends) noexcept;
std::optional<MaterialId> parse_material(std::string_view text) noexcept;
std::optional<EndType> parse_end_type(std::string_view text) noexcept;

/// Wire material. Moduli in N/mm^2, density in kg/m^3.
struct Material {
  MaterialId id;
  double G;
  double E;
  double rho;
  /// Rm at d = 1 mm; Rm(d) = A * d^-0.16.
  double tensile_at_1mm;

  double tensile_strength(double d) const;
};

const Material& material(MaterialId id) noexcept;

/// One stock spring as the manufacturer lists it.
struct CatalogueEntry {
  std::uint32_t id = 0;
  double Do = 0.0;  // outer diameter, mm
  double d = 0.0;   // wire diameter, mm
  double L0 = 0.0;  // free length, mm
  double R = 0.0;   // rate, N/mm
  MaterialId material = MaterialId::steel;
  EndType ends = EndType::closed_ground;
  double price = 0.0;

  friend bool operator==(const CatalogueEntry&, const CatalogueEntry&) = default;
};

struct DerivedGeometry {
  double D = 0.0;   // mean diameter
  double Di = 0.0;  // inner diameter
  double C = 0.0;   // spring index D/d
  double n = 0.0;   // active coils
  double nt = 0.0;  // total coils, n + dead coils
  double p = 0.0;   // pitch
  double Ls = 0.0;  // solid length
};

inline constexpr double kDeadCoils = 2.0;
inline constexpr double kMinSpringIndex = 3.0;
/// Fraction of (L0 - Ls) kept in reserve above solid length.
inline constexpr double kSolidReserveFraction = 0.1;
inline constexpr double kFatigueFactorCap = 100.0;

/// Throws GeometryError when the catalogue invariants do not hold.
void validate_entry(const CatalogueEntry& entry);

/// Computes the six dependent design parameters from (Do, d, L0, R).
/// Catalogued R is taken as ground truth; n is back-computed from it.
DerivedGeometry derive_geometry(const CatalogueEntry& entry, const Material& mat);

/// Shortest length the spring may be operated at.
double min_operating_length(const CatalogueEntry& entry, const DerivedGeometry& geom) noexcept;

double load_at_length(const CatalogueEntry& entry, const DerivedGeometry& geom, double L);
double length_at_load(const CatalogueEntry& entry, const DerivedGeometry& geom, double P);

/// Work stored between the two operating lengths, N*mm.
double stored_energy(const CatalogueEntry& entry, const DerivedGeometry& geom, double L1, double L2);

double spring_mass_g(const DerivedGeometry& geom, const CatalogueEntry& entry, const Material& mat);
double active_mass_kg(const DerivedGeometry& geom, const CatalogueEntry& entry, const Material& mat);
/// Cylindrical envelope of outer diameter Do and length L, cm^3.
double envelope_volume_cm3(const CatalogueEntry& entry, double L);

struct MassAndVolumes {
  double mass_g;
  double vol_at_L0_cm3;
  double vol_at_L_cm3;
};
MassAndVolumes mass_and_volumes(const CatalogueEntry& entry, const DerivedGeometry& geom,
                                const Material& mat, double L);

/// First surge frequency (fixed-fixed), Hz, from rate N/mm and active mass kg.
double surge_frequency(double rate_n_per_mm, double active_mass_kg);
double surge_frequency(const CatalogueEntry& entry, const DerivedGeometry& geom, const Material& mat);

double wahl_factor(double C);
/// Corrected shear stress per newton of axial load, N/mm^2 per N.
double stress_per_newton(const CatalogueEntry& entry, const DerivedGeometry& geom);
double shear_stress(const CatalogueEntry& entry, const DerivedGeometry& geom, double P);

/// Allowable zero-mean shear amplitude as a fraction of the static allowable.
double endurance_fraction(double ncycles);
double static_allowable_shear(const CatalogueEntry& entry, const Material& mat);

/// Goodman-line safety factor of the stress cycle (tau1, tau2). Values above
/// one mean the cycle survives `ncycles`; the result saturates at kFatigueFactorCap.
double fatigue_life_factor(const CatalogueEntry& entry, const DerivedGeometry& geom,
                           const Material& mat, double P1, double P2, double ncycles);

/// Length below which the spring buckles, or 0 when it is stable at any
/// deflection. `nu` is the end fixation (seating) coefficient.
double buckling_length(const CatalogueEntry& entry, const DerivedGeometry& geom,
                       const Material& mat, double nu);

}  // namespace springsel
