#include "springsel/marks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace springsel {

namespace {

double tolerant_mark(double lo, double hi, double value) noexcept {
  if (value > hi && value - hi <= kBoundTolerance * std::max(1.0, std::abs(hi))) return 0.0;
  if (value < lo && lo - value <= kBoundTolerance * std::max(1.0, std::abs(lo))) return 0.0;
  return crisp_mark(lo, hi, value);
}

}  // namespace

double crisp_mark(double lo, double hi, double value) noexcept {
  if (value > hi) return hi == 0.0 ? value : (value - hi) / std::abs(hi);
  // A zero lower bound only bites on signed margins; mirror the zero-upper rule.
  if (value < lo) return lo == 0.0 ? -value : (lo - value) / std::abs(lo);
  return 0.0;
}

CriterionReports build_reports(const CriterionValues& values, const SpecificationSheet& sheet) {
  CriterionReports reports;
  for (Criterion c : kAllCriteria) {
    CriterionReport& r = reports[index(c)];
    r.criterion = c;
    r.value = values[index(c)];
    r.bounds = sheet.bound(c);
    r.weight = sheet.weight(c);
    r.active = sheet.participates(c);
    r.constrained = sheet.constrained(c);
    r.crisp = r.active ? tolerant_mark(r.bounds.lo, r.bounds.hi, r.value) : 0.0;
    r.worst = worst_mark(r.bounds.lo, r.bounds.hi, r.value);
    r.fuzzy = quality_memberships(r.worst);
  }
  return reports;
}

double total_crisp_mark(const CriterionValues& values, const SpecificationSheet& sheet) {
  double total = 0.0;
  for (Criterion c : kAllCriteria) {
    if (!sheet.participates(c)) continue;
    const Interval& iv = sheet.bound(c);
    total += tolerant_mark(iv.lo, iv.hi, values[index(c)]);
  }
  return total;
}

double violation(std::span<const CriterionReport> reports) noexcept {
  double weighted = 0.0;
  double weights = 0.0;
  for (const CriterionReport& r : reports) {
    if (!r.violated()) continue;
    weighted += r.weight * r.crisp;
    weights += r.weight;
  }
  return weights > 0.0 ? weighted / weights : 0.0;
}

int count_violations(std::span<const CriterionReport> reports) noexcept {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(),
                                        [](const CriterionReport& r) { return r.violated(); }));
}

FuzzyVector spec_quality(std::span<const CriterionReport> reports) {
  std::vector<FuzzyVector> marks;
  std::vector<double> weights;
  for (const CriterionReport& r : reports) {
    if (!r.constrained) continue;
    marks.push_back(r.fuzzy);
    weights.push_back(r.weight);
  }
  return aggregate_spec(marks, weights);
}

double evaluation_score(double objective, double violation, Sense sense) noexcept {
  const double a = sense == Sense::minimize ? 1.0 : -1.0;
  return std::log(std::max(objective, kMinObjective)) + a * kViolationWeight * violation;
}

}  // namespace springsel
