#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "springsel/catalogue.hpp"
#include "springsel/mechanics.hpp"
#include "springsel/spec.hpp"

namespace springsel::testing {

inline CatalogueEntry make_entry(double Do, double d, double L0, double R,
                                 MaterialId mat = MaterialId::steel,
                                 EndType ends = EndType::closed_ground, double price = 1.0,
                                 std::uint32_t id = 1) {
  CatalogueEntry e;
  e.id = id;
  e.Do = Do;
  e.d = d;
  e.L0 = L0;
  e.R = R;
  e.material = mat;
  e.ends = ends;
  e.price = price;
  return e;
}

inline DerivedGeometry geometry_of(const CatalogueEntry& e) { return derive_geometry(e, material(e.material)); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Valid spring with continuous (unrounded) dimensions.
inline CatalogueEntry random_entry(std::mt19937_64& rng, std::uint32_t id = 1) {
  for (;;) {
    const double d = 0.2 * std::pow(40.0, uniform(rng, 0.0, 1.0));
    const double C = uniform(rng, 4.0, 16.0);
    const double D = C * d;
    const double L0 = uniform(rng, 1.0, 10.0) * D;
    const MaterialId mat = uniform(rng, 0.0, 1.0) < 0.8 ? MaterialId::steel : MaterialId::stainless;
    const EndType ends = uniform(rng, 0.0, 1.0) < 0.7 ? EndType::closed_ground : EndType::closed;
    const double solid_fraction = uniform(rng, 0.12, 0.6);
    const double extra = ends == EndType::closed ? 3.0 : 2.0;
    const double n = solid_fraction * L0 / d - extra;
    if (n < 1.5) continue;
    const Material& m = material(mat);
    const double R = m.G * std::pow(d, 4) / (8.0 * D * D * D * n);
    return make_entry(D + d, d, L0, R, mat, ends, uniform(rng, 0.1, 50.0), id);
  }
}

inline const Catalogue& seeded_catalogue() {
  static const Catalogue cat = generate_synthetic(2000, 1000);
  return cat;
}

}  // namespace springsel::testing
