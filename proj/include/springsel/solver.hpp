#pragma once

#include "springsel/mechanics.hpp"
#include "springsel/spec.hpp"

namespace springsel {

struct LengthRange {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const noexcept { return lo > hi; }

  friend bool operator==(const LengthRange&, const LengthRange&) = default;
};

/// The (L1, L2) region allowed by every limit that can be written through
/// the operating lengths. Energy couples L1 and L2 quadratically and is kept
/// as its own range rather than folded into the intervals.
struct FeasibleBox {
  LengthRange L1;
  LengthRange L2;
  LengthRange stroke;
  LengthRange energy;  // N*mm

  bool contains(double L1v, double L2v, double R, double L0) const noexcept;
};

struct OperatingPoint {
  double L1 = 0.0;
  double L2 = 0.0;
  /// Every limit expressible through L1 and L2 is met.
  bool feasible = false;
  FeasibleBox box;
};

FeasibleBox feasible_box(const CatalogueEntry& entry, const DerivedGeometry& geom, const Material& mat,
                         const SpecificationSheet& sheet);

/// Picks (L1, L2) optimising the sheet's objective inside the box; ties go to
/// the largest L1, then the largest L2. When the box is empty, returns the
/// least-violating point of a small clamped candidate set with feasible = false.
OperatingPoint choose_operating_point(const CatalogueEntry& entry, const DerivedGeometry& geom,
                                      const Material& mat, const SpecificationSheet& sheet);

/// Value of the sheet's objective criterion at (L1, L2).
double objective_at(const CatalogueEntry& entry, const DerivedGeometry& geom, const Material& mat,
                    const SpecificationSheet& sheet, double L1, double L2);

}  // namespace springsel
