#include "springsel/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace springsel {

namespace {

using enum Comparison;

// 1 at or below a, 0 at or above b.
double ramp_down(double x, double a, double b) noexcept {
  if (x <= a) return 1.0;
  if (x >= b) return 0.0;
  return (b - x) / (b - a);
}

double ramp_up(double x, double a, double b) noexcept { return 1.0 - ramp_down(x, a, b); }

double triangle(double x, double a, double peak, double b) noexcept {
  if (x <= a || x >= b) return 0.0;
  return x <= peak ? (x - a) / (peak - a) : (b - x) / (b - peak);
}

}  // namespace

const RuleTable kSpecComparisonTable{{
    {E, S, VS, VS, VS},
    {I, E, S, VS, VS},
    {VI, I, E, S, VS},
    {VI, VI, I, E, S},
    {VI, VI, VI, I, E},
}};

const RuleTable kFinalComparisonTable{{
    {I, I, I, I, E},
    {I, I, I, E, S},
    {I, I, E, S, S},
    {I, E, S, S, S},
    {E, S, S, S, S},
}};

double FuzzyVector::max() const noexcept { return *std::max_element(m.begin(), m.end()); }

double worst_mark(double lo, double hi, double value) noexcept {
  const double upper = hi == 0.0 ? -value : (hi - value) / std::abs(hi) * 100.0;
  double lower;
  if (lo == 0.0) {
    lower = value < 0.0 ? value : std::numeric_limits<double>::infinity();
  } else {
    lower = (value - lo) / std::abs(lo) * 100.0;
  }
  return std::min(upper, lower);
}

FuzzyVector quality_memberships(double w) noexcept {
  FuzzyVector v;
  v[grade(Quality::VB)] = ramp_down(w, 0.0, 5.0);
  v[grade(Quality::B)] = triangle(w, 0.0, 5.0, 15.0);
  v[grade(Quality::M)] = triangle(w, 5.0, 15.0, 30.0);
  v[grade(Quality::G)] = triangle(w, 15.0, 30.0, 45.0);
  v[grade(Quality::VG)] = ramp_up(w, 30.0, 45.0);
  return v;
}

FuzzyVector fuzzy_mark(double lo, double hi, double value) noexcept {
  return quality_memberships(worst_mark(lo, hi, value));
}

FuzzyVector aggregate_spec(std::span<const FuzzyVector> marks, std::span<const double> weights) {
  if (marks.size() != weights.size()) throw std::invalid_argument("one weight per fuzzy mark");
  FuzzyVector sum;
  double total = 0.0;
  for (std::size_t c = 0; c < marks.size(); ++c) {
    for (std::size_t g = 0; g < 5; ++g) sum[g] += weights[c] * marks[c][g];
    total += weights[c];
  }
  if (total <= 0.0) return FuzzyVector{};
  for (double& g : sum.m) g /= total;
  return sum;
}

FuzzyVector mamdani_combine(const FuzzyVector& row, const FuzzyVector& col, const RuleTable& table) noexcept {
  FuzzyVector out;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const double activation = std::min(row[i], col[j]);
      double& slot = out[grade(table[i][j])];
      slot = std::max(slot, activation);
    }
  }
  return out;
}

double obj_mark(double incumbent, double objective, Sense sense) {
  const double sum = incumbent + objective;
  if (sum <= 1e-12) throw DegenerateError("objective values sum to zero");
  const double mark = 200.0 * (incumbent - objective) / sum;
  return sense == Sense::minimize ? mark : -mark;
}

FuzzyVector fuzzify_objmark(double mark) noexcept {
  FuzzyVector v;
  v[grade(VI)] = ramp_up(mark, 50.0, 100.0);
  v[grade(I)] = triangle(mark, 0.0, 50.0, 100.0);
  v[grade(E)] = triangle(mark, -25.0, 0.0, 25.0);
  v[grade(S)] = triangle(mark, -100.0, -50.0, 0.0);
  v[grade(VS)] = ramp_down(mark, -100.0, -50.0);
  return v;
}

Verdict defuzzify(const FuzzyVector& c) noexcept {
  return {std::max(c[grade(VI)], c[grade(I)]), c[grade(E)], std::max(c[grade(S)], c[grade(VS)])};
}

}  // namespace springsel
