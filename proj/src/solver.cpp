#include "springsel/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "springsel/marks.hpp"

namespace springsel {

namespace {

constexpr double kRelTol = 1e-9;

double tol(double scale) { return kRelTol * std::max(1.0, std::abs(scale)); }

bool within(const LengthRange& r, double v) { return v >= r.lo - tol(r.lo) && v <= r.hi + tol(r.hi); }

double clamp_to(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

// a*L1 + b*L2 = c
struct Line {
  double a;
  double b;
  double c;
};

struct Candidate {
  double L1;
  double L2;
};

std::optional<Candidate> intersect(const Line& p, const Line& q) {
  const double det = p.a * q.b - p.b * q.a;
  if (std::abs(det) < 1e-14 * std::max({1.0, std::abs(p.a * q.b), std::abs(p.b * q.a)})) {
    return std::nullopt;
  }
  return Candidate{(p.c * q.b - p.b * q.c) / det, (p.a * q.c - p.c * q.a) / det};
}

// Points of the line with (L0-L2)^2 - (L0-L1)^2 = k, in deflection space
// x = L0 - L1, y = L0 - L2.
void intersect_hyperbola(const Line& line, double k, double L0, std::vector<Candidate>& out) {
  const double g = (line.a + line.b) * L0 - line.c;  // a*x + b*y = g
  auto push = [&](double x, double y) {
    if (std::isfinite(x) && std::isfinite(y)) out.push_back({L0 - x, L0 - y});
  };
  if (std::abs(line.b) < 1e-15) {
    if (std::abs(line.a) < 1e-15) return;
    const double x = g / line.a;
    const double y2 = k + x * x;
    if (y2 >= 0.0) push(x, std::sqrt(y2));
    return;
  }
  // (a^2 - b^2) x^2 - 2 a g x + (g^2 - k b^2) = 0
  const double qa = line.a * line.a - line.b * line.b;
  const double qb = -2.0 * line.a * g;
  const double qc = g * g - k * line.b * line.b;
  auto y_of = [&](double x) { return (g - line.a * x) / line.b; };
  if (std::abs(qa) < 1e-14 * std::max(1.0, line.a * line.a)) {
    if (std::abs(qb) < 1e-300) return;
    const double x = -qc / qb;
    push(x, y_of(x));
    return;
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  // Numerically stable pair of roots.
  const double t = -0.5 * (qb + std::copysign(sq, qb));
  if (t != 0.0) {
    push(t / qa, y_of(t / qa));
    push(qc / t, y_of(qc / t));
  } else {
    push(0.0, y_of(0.0));
  }
}

// Extremes of u*x + v*y on y^2 - x^2 = k (y > 0) satisfy x / y = -u / v.
void hyperbola_stationary(double u, double v, double k, double L0, std::vector<Candidate>& out) {
  if (k <= 0.0 || std::abs(v) < 1e-300) return;
  const double r = -u / v;
  if (std::abs(r) >= 1.0) return;
  const double y = std::sqrt(k / (1.0 - r * r));
  out.push_back({L0 - r * y, L0 - y});
}

struct ObjectiveShape {
  // Gradient in (L1, L2) when the objective is linear there, else zero.
  double dL1 = 0.0;
  double dL2 = 0.0;
  std::optional<Line> plateau;  // fatigue cap boundary
};

ObjectiveShape shape_of(const CatalogueEntry& e, const DerivedGeometry& g, const Material& m,
                        const SpecificationSheet& sheet) {
  ObjectiveShape s;
  switch (sheet.objective.criterion) {
    case Criterion::L2:
      s.dL2 = 1.0;
      break;
    case Criterion::P2:
      s.dL2 = -e.R;
      break;
    case Criterion::fatigueFactor: {
      // Goodman utilisation k*R*(A*(L0-L2) - B*(L0-L1)) is linear in (L1, L2).
      const double tau_u = static_allowable_shear(e, m);
      const double tau_e = endurance_fraction(sheet.ncycles) * tau_u;
      const double A = 0.5 * (1.0 / tau_e + 1.0 / tau_u);
      const double B = 0.5 * (1.0 / tau_e - 1.0 / tau_u);
      const double kR = stress_per_newton(e, g) * e.R;
      s.dL1 = B;
      s.dL2 = -A;
      s.plateau = Line{B, -A, 1.0 / (kFatigueFactorCap * kR) - (A - B) * e.L0};
      break;
    }
    default:
      break;
  }
  return s;
}

}  // namespace

bool FeasibleBox::contains(double L1v, double L2v, double R, double L0) const noexcept {
  if (!within(L1, L1v) || !within(L2, L2v) || !within(stroke, L1v - L2v)) return false;
  const double s1 = L0 - L1v;
  const double s2 = L0 - L2v;
  const double e = 0.5 * R * (s2 * s2 - s1 * s1);
  return within(energy, e);
}

FeasibleBox feasible_box(const CatalogueEntry& entry, const DerivedGeometry& geom, const Material& mat,
                         const SpecificationSheet& sheet) {
  const double L0 = entry.L0;
  const double R = entry.R;
  const double Lmin = min_operating_length(entry, geom);
  auto b = [&](Criterion c) -> const Interval& { return sheet.bound(c); };

  FeasibleBox box;
  box.L1 = {std::max({Lmin, b(Criterion::L1).lo, L0 - b(Criterion::P1).hi / R}),
            std::min({L0, b(Criterion::L1).hi, L0 - b(Criterion::P1).lo / R})};

  double lo2 = std::max({Lmin, b(Criterion::L2).lo, L0 - b(Criterion::P2).hi / R});
  double hi2 = std::min({L0, b(Criterion::L2).hi, L0 - b(Criterion::P2).lo / R});
  const double area = envelope_volume_cm3(entry, 1.0);
  lo2 = std::max(lo2, b(Criterion::volAtL2).lo / area);
  hi2 = std::min(hi2, b(Criterion::volAtL2).hi / area);
  if (sheet.participates(Criterion::bucklingMargin)) {
    const double LK = buckling_length(entry, geom, mat, sheet.nu);
    lo2 = std::max(lo2, LK + b(Criterion::bucklingMargin).lo);
    hi2 = std::min(hi2, LK + b(Criterion::bucklingMargin).hi);
  }
  if (sheet.participates(Criterion::solidReserve)) {
    lo2 = std::max(lo2, Lmin + b(Criterion::solidReserve).lo);
    hi2 = std::min(hi2, Lmin + b(Criterion::solidReserve).hi);
  }
  box.L2 = {lo2, hi2};
  box.stroke = {std::max(0.0, b(Criterion::sh).lo), b(Criterion::sh).hi};
  box.energy = {b(Criterion::energy).lo, b(Criterion::energy).hi};
  return box;
}

double objective_at(const CatalogueEntry& e, const DerivedGeometry& g, const Material& m,
                    const SpecificationSheet& sheet, double L1, double L2) {
  switch (sheet.objective.criterion) {
    case Criterion::L2:
      return L2;
    case Criterion::P2:
      return e.R * (e.L0 - L2);
    case Criterion::energy: {
      const double s1 = e.L0 - L1;
      const double s2 = e.L0 - L2;
      return 0.5 * e.R * (s2 * s2 - s1 * s1);
    }
    case Criterion::fatigueFactor: {
      const double P1 = std::max(0.0, e.R * (e.L0 - L1));
      const double P2 = std::max(P1, e.R * (e.L0 - L2));
      return fatigue_life_factor(e, g, m, P1, P2, sheet.ncycles);
    }
    case Criterion::mass:
      return spring_mass_g(g, e, m);
    case Criterion::price:
      return e.price;
    case Criterion::L0:
      return e.L0;
    case Criterion::R:
      return e.R;
    default:
      return criterion_value(sheet.objective.criterion, e, g, m, {L1, L2}, sheet);
  }
}

OperatingPoint choose_operating_point(const CatalogueEntry& entry, const DerivedGeometry& geom,
                                      const Material& mat, const SpecificationSheet& sheet) {
  const double L0 = entry.L0;
  const double R = entry.R;
  const double Lmin = min_operating_length(entry, geom);
  const Sense sense = sheet.objective.sense;

  OperatingPoint result;
  result.box = feasible_box(entry, geom, mat, sheet);
  const FeasibleBox& box = result.box;

  // True when (f1, L1a, L2a) beats (f2, L1b, L2b): objective first, then the
  // larger L1, then the larger L2.
  auto better = [&](double f1, const Candidate& a, double f2, const Candidate& b) {
    const double scale = std::max({1.0, std::abs(f1), std::abs(f2)});
    if (std::abs(f1 - f2) > 1e-12 * scale) return sense == Sense::minimize ? f1 < f2 : f1 > f2;
    if (a.L1 != b.L1) return a.L1 > b.L1;
    return a.L2 > b.L2;
  };

  const ObjectiveShape shape = shape_of(entry, geom, mat, sheet);

  std::vector<Line> lines = {
      {1.0, 0.0, box.L1.lo},      {1.0, 0.0, box.L1.hi},      {0.0, 1.0, box.L2.lo},
      {0.0, 1.0, box.L2.hi},      {1.0, -1.0, box.stroke.lo}, {1.0, -1.0, box.stroke.hi},
  };
  if (shape.plateau) lines.push_back(*shape.plateau);

  std::vector<double> hyperbolas;
  for (double e : {box.energy.lo, box.energy.hi}) {
    if (std::isfinite(e) && e >= 0.0) hyperbolas.push_back(2.0 * e / R);
  }

  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (auto c = intersect(lines[i], lines[j])) candidates.push_back(*c);
    }
  }
  for (double k : hyperbolas) {
    for (const Line& line : lines) intersect_hyperbola(line, k, L0, candidates);
    // Gradient in deflection space is minus the gradient in length space.
    if (shape.dL1 != 0.0 || shape.dL2 != 0.0) {
      hyperbola_stationary(-shape.dL1, -shape.dL2, k, L0, candidates);
    }
    hyperbola_stationary(0.0, 1.0, k, L0, candidates);
  }

  std::optional<Candidate> best;
  double best_value = 0.0;
  for (Candidate c : candidates) {
    if (!box.contains(c.L1, c.L2, R, L0)) continue;
    c.L1 = clamp_to(c.L1, box.L1.lo, box.L1.hi);
    c.L2 = std::min(clamp_to(c.L2, box.L2.lo, box.L2.hi), c.L1);
    const double f = objective_at(entry, geom, mat, sheet, c.L1, c.L2);
    if (!best || better(f, c, best_value, *best)) {
      best = c;
      best_value = f;
    }
  }

  if (best) {
    result.L1 = best->L1;
    result.L2 = best->L2;
    result.feasible = true;
    return result;
  }

  // Nothing satisfies every operating limit: try the nearest attainable value
  // of each bound and keep the point with the smallest total mark.
  auto relaxed = [&](const LengthRange& r) {
    const double lo = clamp_to(r.lo, Lmin, L0);
    const double hi = clamp_to(r.hi, Lmin, L0);
    return std::array<double, 3>{lo, 0.5 * (lo + hi), hi};
  };
  const auto l1_values = relaxed(box.L1);
  const auto l2_values = relaxed(box.L2);
  std::vector<Candidate> fallback;
  for (double v1 : l1_values) {
    for (double v2 : l2_values) fallback.push_back({v1, std::min(v1, v2)});
    for (double s : {box.stroke.lo, box.stroke.hi}) fallback.push_back({v1, clamp_to(v1 - s, Lmin, v1)});
  }
  for (double v2 : l2_values) {
    for (double s : {box.stroke.lo, box.stroke.hi}) fallback.push_back({clamp_to(v2 + s, v2, L0), v2});
  }

  double best_mark = 0.0;
  for (const Candidate& c : fallback) {
    const CriterionValues values = criterion_values(entry, geom, mat, {c.L1, c.L2}, sheet);
    const double mark = total_crisp_mark(values, sheet);
    const double f = values[index(sheet.objective.criterion)];
    const bool take = !best || mark < best_mark - 1e-12 ||
                      (mark <= best_mark + 1e-12 && better(f, c, best_value, *best));
    if (take) {
      best = c;
      best_mark = mark;
      best_value = f;
    }
  }
  result.L1 = best->L1;
  result.L2 = best->L2;
  result.feasible = false;
  return result;
}

}  // namespace springsel
