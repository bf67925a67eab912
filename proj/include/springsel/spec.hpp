#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "springsel/mechanics.hpp"

namespace springsel {

/// Every quantity a spring is judged on. Order is the report order.
enum class Criterion : std::uint8_t {
  Do,
  Di,
  D,
  d,
  L0,
  R,
  n,
  p,
  Ls,
  mass,
  surgeFrequency,
  volAtL0,
  volAtL2,
  price,
  P1,
  P2,
  L1,
  L2,
  sh,
  energy,
  fatigueFactor,
  bucklingMargin,
  solidReserve,
};

inline constexpr std::size_t kCriterionCount = 23;

inline constexpr std::size_t index(Criterion c) noexcept { return static_cast<std::size_t>(c); }

inline constexpr std::array<Criterion, kCriterionCount> kAllCriteria = [] {
  std::array<Criterion, kCriterionCount> all{};
  for (std::size_t i = 0; i < kCriterionCount; ++i) all[i] = static_cast<Criterion>(i);
  return all;
}();

std::string_view to_string(Criterion c) noexcept;
std::string_view unit_of(Criterion c) noexcept;
std::optional<Criterion> parse_criterion(std::string_view name) noexcept;

/// Criteria that may legitimately go negative (margins). Their default
/// bounds only apply once the designer asks for them.
bool is_signed(Criterion c) noexcept;

/// Criteria the designer may ask to optimise.
bool is_objective_criterion(Criterion c) noexcept;

inline constexpr double kDefaultLower = 0.0;
inline constexpr double kDefaultUpper = 1e7;

struct Interval {
  double lo = kDefaultLower;
  double hi = kDefaultUpper;
  bool lo_given = false;
  bool hi_given = false;

  bool given() const noexcept { return lo_given || hi_given; }
  bool contains(double v) const noexcept { return v >= lo && v <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Sense : std::uint8_t { minimize, maximize };

std::string_view to_string(Sense s) noexcept;

struct Objective {
  Criterion criterion = Criterion::L2;
  Sense sense = Sense::minimize;

  friend bool operator==(const Objective&, const Objective&) = default;
};

/// Field name (and offending key) attached to every sheet error.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

inline constexpr double kDefaultNcycles = 1e7;

/// The designer's requirement sheet after defaults have been applied.
struct SpecificationSheet {
  std::string title;
  std::array<Interval, kCriterionCount> bounds{};
  std::array<double, kCriterionCount> weights = [] {
    std::array<double, kCriterionCount> w{};
    w.fill(1.0);
    return w;
  }();
  std::optional<MaterialId> material;
  std::optional<EndType> ends;
  double ncycles = kDefaultNcycles;
  bool ncycles_given = false;
  double nu = 1.0;
  bool no_buckling = false;
  Objective objective;

  const Interval& bound(Criterion c) const noexcept { return bounds[index(c)]; }
  Interval& bound(Criterion c) noexcept { return bounds[index(c)]; }
  double weight(Criterion c) const noexcept { return weights[index(c)]; }

  /// Carries at least one designer-supplied limit.
  bool constrained(Criterion c) const noexcept;
  /// Enters crisp marks and the violation count.
  bool participates(Criterion c) const noexcept;
  /// Material and end-type pick lists.
  bool admits(const CatalogueEntry& entry) const noexcept;

  friend bool operator==(const SpecificationSheet&, const SpecificationSheet&) = default;
};

/// Builds a sheet from the flat JSON document. Absent limits become 0 and 1e7.
SpecificationSheet normalize(const nlohmann::json& raw);

/// Inverse of normalize: emits only designer-given fields.
nlohmann::json to_spec_json(const SpecificationSheet& sheet);

/// Every criterion with its applied bounds, for display.
nlohmann::json to_normalized_json(const SpecificationSheet& sheet);

struct OperatingLengths {
  double L1 = 0.0;
  double L2 = 0.0;
};

using CriterionValues = std::array<double, kCriterionCount>;

/// Physical values of all criteria for one spring at one operating point.
CriterionValues criterion_values(const CatalogueEntry& entry, const DerivedGeometry& geom,
                                 const Material& mat, OperatingLengths op,
                                 const SpecificationSheet& sheet);

double criterion_value(Criterion c, const CatalogueEntry& entry, const DerivedGeometry& geom,
                       const Material& mat, OperatingLengths op, const SpecificationSheet& sheet);

}  // namespace springsel
