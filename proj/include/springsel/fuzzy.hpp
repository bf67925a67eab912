#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "springsel/spec.hpp"

namespace springsel {

/// Five membership grades. Quality vectors read (VB, B, M, G, VG); comparison
/// vectors read (VI, I, E, S, VS) and describe the incumbent against the
/// tested spring.
struct FuzzyVector {
  std::array<double, 5> m{};

  double& operator[](std::size_t i) noexcept { return m[i]; }
  double operator[](std::size_t i) const noexcept { return m[i]; }
  double max() const noexcept;

  friend bool operator==(const FuzzyVector&, const FuzzyVector&) = default;
};

enum class Quality : std::uint8_t { VB, B, M, G, VG };
enum class Comparison : std::uint8_t { VI, I, E, S, VS };

inline constexpr std::size_t grade(Quality q) noexcept { return static_cast<std::size_t>(q); }
inline constexpr std::size_t grade(Comparison c) noexcept { return static_cast<std::size_t>(c); }

/// Consequent label for every (row grade, column grade) pair.
using RuleTable = std::array<std::array<Comparison, 5>, 5>;

/// Rows: tested spring quality. Columns: incumbent quality.
extern const RuleTable kSpecComparisonTable;
/// Rows: objective comparison. Columns: specification comparison.
/// The (VS, E) cell reads S; VI there would break the table's symmetry.
extern const RuleTable kFinalComparisonTable;

class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Smaller percentage margin of `value` to the two bounds. Negative when a
/// bound is violated; +inf when neither side constrains.
double worst_mark(double lo, double hi, double value) noexcept;

/// Quality memberships of a WorstMark: VB saturates at or below zero margin,
/// VG at 45 % and beyond, triangles in between.
FuzzyVector quality_memberships(double worst) noexcept;

FuzzyVector fuzzy_mark(double lo, double hi, double value) noexcept;

/// Weighted componentwise mean. Zero vector when the weights sum to zero.
FuzzyVector aggregate_spec(std::span<const FuzzyVector> marks, std::span<const double> weights);

/// Mamdani inference: min for each rule's activation, max per output label.
FuzzyVector mamdani_combine(const FuzzyVector& row, const FuzzyVector& col, const RuleTable& table) noexcept;

/// Relative objective gap in percent; positive when `objective` improves on `incumbent`.
double obj_mark(double incumbent, double objective, Sense sense);

FuzzyVector fuzzify_objmark(double mark) noexcept;

struct Verdict {
  double inferior = 0.0;
  double equal = 0.0;
  double superior = 0.0;
};

Verdict defuzzify(const FuzzyVector& comparison) noexcept;

}  // namespace springsel
