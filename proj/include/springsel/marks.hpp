#pragma once

#include <array>
#include <span>

#include "springsel/fuzzy.hpp"
#include "springsel/spec.hpp"

namespace springsel {

/// Relative distance of `value` outside [lo, hi]; zero inside.
double crisp_mark(double lo, double hi, double value) noexcept;

/// How one criterion of one spring sits against the sheet.
struct CriterionReport {
  Criterion criterion = Criterion::Do;
  double value = 0.0;
  Interval bounds;
  double weight = 1.0;
  /// Counted in marks and ncv (margins only once asked for).
  bool active = true;
  /// Enters the fuzzy aggregate (designer-constrained criteria only).
  bool constrained = false;
  double crisp = 0.0;
  double worst = 0.0;
  FuzzyVector fuzzy;

  bool violated() const noexcept { return active && crisp > 0.0; }
};

using CriterionReports = std::array<CriterionReport, kCriterionCount>;

/// Values within 1e-9 relative of a bound count as on it.
inline constexpr double kBoundTolerance = 1e-9;

CriterionReports build_reports(const CriterionValues& values, const SpecificationSheet& sheet);

/// Unweighted sum of active crisp marks; used to rank infeasible operating points.
double total_crisp_mark(const CriterionValues& values, const SpecificationSheet& sheet);

/// Weighted mean of the marks of violated criteria; zero when none is violated.
double violation(std::span<const CriterionReport> reports) noexcept;

int count_violations(std::span<const CriterionReport> reports) noexcept;

/// Fuzzy quality of the whole sheet, over constrained criteria.
FuzzyVector spec_quality(std::span<const CriterionReport> reports);

inline constexpr double kViolationWeight = 100.0;
inline constexpr double kMinObjective = 1e-12;

/// ln(Objective * exp(a*b*Violation)). Lower is better when minimising,
/// higher when maximising; the log form keeps large violations finite.
double evaluation_score(double objective, double violation, Sense sense) noexcept;

}  // namespace springsel
