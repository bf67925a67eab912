#include "springsel/spec.hpp"

#include <algorithm>
#include <cmath>

namespace springsel {

namespace {

struct CriterionInfo {
  std::string_view name;
  std::string_view unit;
};

constexpr std::array<CriterionInfo, kCriterionCount> kInfo{{
    {"Do", "mm"},
    {"Di", "mm"},
    {"D", "mm"},
    {"d", "mm"},
    {"L0", "mm"},
    {"R", "N/mm"},
    {"n", ""},
    {"p", "mm"},
    {"Ls", "mm"},
    {"mass", "g"},
    {"surgeFrequency", "Hz"},
    {"volAtL0", "cm3"},
    {"volAtL2", "cm3"},
    {"price", ""},
    {"P1", "N"},
    {"P2", "N"},
    {"L1", "mm"},
    {"L2", "mm"},
    {"sh", "mm"},
    {"energy", "N*mm"},
    {"fatigueFactor", ""},
    {"bucklingMargin", "mm"},
    {"solidReserve", "mm"},
}};

double require_number(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number()) throw SpecError(key, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw SpecError(key, "value must be finite");
  return v;
}

Objective parse_objective(const nlohmann::json& value) {
  if (!value.is_object()) throw SpecError("objective", "expected {criterion, sense}");
  Objective obj;
  for (const auto& [key, item] : value.items()) {
    if (key == "criterion") {
      if (!item.is_string()) throw SpecError("objective.criterion", "expected a string");
      const auto c = parse_criterion(item.get<std::string>());
      if (!c) throw SpecError("objective.criterion", "unknown criterion '" + item.get<std::string>() + "'");
      if (!is_objective_criterion(*c)) {
        throw SpecError("objective.criterion", "'" + item.get<std::string>() + "' cannot be optimised");
      }
      obj.criterion = *c;
    } else if (key == "sense") {
      const std::string s = item.is_string() ? item.get<std::string>() : std::string{};
      if (s == "minimize") {
        obj.sense = Sense::minimize;
      } else if (s == "maximize") {
        obj.sense = Sense::maximize;
      } else {
        throw SpecError("objective.sense", "expected 'minimize' or 'maximize'");
      }
    } else {
      throw SpecError("objective." + key, "unknown key");
    }
  }
  return obj;
}

// Which sides of each criterion the document set, and through which key.
struct Assigned {
  bool fixed = false;
  bool lo = false;
  bool hi = false;
};

}  // namespace

std::string_view to_string(Criterion c) noexcept { return kInfo[index(c)].name; }
std::string_view unit_of(Criterion c) noexcept { return kInfo[index(c)].unit; }

std::optional<Criterion> parse_criterion(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kCriterionCount; ++i) {
    if (kInfo[i].name == name) return static_cast<Criterion>(i);
  }
  return std::nullopt;
}

bool is_signed(Criterion c) noexcept {
  return c == Criterion::bucklingMargin || c == Criterion::solidReserve;
}

bool is_objective_criterion(Criterion c) noexcept {
  switch (c) {
    case Criterion::L2:
    case Criterion::P2:
    case Criterion::mass:
    case Criterion::energy:
    case Criterion::fatigueFactor:
    case Criterion::price:
    case Criterion::L0:
    case Criterion::R:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(Sense s) noexcept {
  return s == Sense::minimize ? "minimize" : "maximize";
}

bool SpecificationSheet::constrained(Criterion c) const noexcept {
  if (bound(c).given()) return true;
  if (c == Criterion::bucklingMargin) return no_buckling;
  if (c == Criterion::fatigueFactor) return ncycles_given;
  return false;
}

bool SpecificationSheet::participates(Criterion c) const noexcept {
  return !is_signed(c) || constrained(c);
}

bool SpecificationSheet::admits(const CatalogueEntry& entry) const noexcept {
  if (material && *material != entry.material) return false;
  if (ends && *ends != entry.ends) return false;
  return true;
}

SpecificationSheet normalize(const nlohmann::json& raw) {
  if (!raw.is_object()) throw SpecError("<document>", "specification must be a JSON object");

  SpecificationSheet sheet;
  std::array<Assigned, kCriterionCount> assigned{};

  for (const auto& [key, value] : raw.items()) {
    if (key == "title") {
      if (!value.is_string()) throw SpecError(key, "expected a string");
      sheet.title = value.get<std::string>();
    } else if (key == "Ncycles") {
      sheet.ncycles = require_number(value, key);
      if (sheet.ncycles < 1.0) throw SpecError(key, "must be at least 1");
      sheet.ncycles_given = true;
    } else if (key == "nu") {
      sheet.nu = require_number(value, key);
      if (!(sheet.nu > 0.0)) throw SpecError(key, "end fixation factor must be positive");
    } else if (key == "no_buckling") {
      if (!value.is_boolean()) throw SpecError(key, "expected true or false");
      sheet.no_buckling = value.get<bool>();
    } else if (key == "material") {
      const std::string s = value.is_string() ? value.get<std::string>() : std::string{"?"};
      if (value.is_null() || s == "dont_care") {
        sheet.material.reset();
      } else if (auto m = parse_material(s)) {
        sheet.material = *m;
      } else {
        throw SpecError(key, "unknown material '" + s + "'");
      }
    } else if (key == "ends") {
      const std::string s = value.is_string() ? value.get<std::string>() : std::string{"?"};
      if (value.is_null() || s == "dont_care") {
        sheet.ends.reset();
      } else if (auto e = parse_end_type(s)) {
        sheet.ends = *e;
      } else {
        throw SpecError(key, "unknown end type '" + s + "'");
      }
    } else if (key == "objective") {
      sheet.objective = parse_objective(value);
    } else if (key == "weights") {
      if (!value.is_object()) throw SpecError(key, "expected an object of criterion weights");
      for (const auto& [name, w] : value.items()) {
        const auto c = parse_criterion(name);
        if (!c) throw SpecError("weights." + name, "unknown criterion");
        const double k = require_number(w, "weights." + name);
        if (k < 0.0) throw SpecError("weights." + name, "weight must be non-negative");
        sheet.weights[index(*c)] = k;
      }
    } else {
      std::string_view base = key;
      int side = 0;  // 0 fixed, -1 min, +1 max
      if (base.ends_with("_min")) {
        base.remove_suffix(4);
        side = -1;
      } else if (base.ends_with("_max")) {
        base.remove_suffix(4);
        side = 1;
      }
      const auto c = parse_criterion(base);
      if (!c) throw SpecError(key, "unknown key");
      const double v = require_number(value, key);
      if (v < 0.0 && !is_signed(*c)) throw SpecError(key, "bound must be non-negative");
      Interval& iv = sheet.bound(*c);
      Assigned& a = assigned[index(*c)];
      if (side == 0) {
        if (a.lo || a.hi) throw SpecError(key, "fixed value conflicts with min/max");
        a.fixed = true;
        iv.lo = iv.hi = v;
        iv.lo_given = iv.hi_given = true;
      } else if (side < 0) {
        if (a.fixed) throw SpecError(key, "min conflicts with fixed value");
        a.lo = true;
        iv.lo = v;
        iv.lo_given = true;
      } else {
        if (a.fixed) throw SpecError(key, "max conflicts with fixed value");
        a.hi = true;
        iv.hi = v;
        iv.hi_given = true;
      }
    }
  }

  // Implied limits: a cycle count asks for a fatigue factor of at least one,
  // "no buckling" asks for L2 to stay above the buckling length.
  Interval& fatigue = sheet.bound(Criterion::fatigueFactor);
  if (sheet.ncycles_given && !fatigue.lo_given) fatigue.lo = 1.0;

  for (Criterion c : kAllCriteria) {
    const Interval& iv = sheet.bound(c);
    if (iv.lo > iv.hi) {
      throw SpecError(std::string(to_string(c)), "lower bound " + std::to_string(iv.lo) +
                                                     " exceeds upper bound " + std::to_string(iv.hi));
    }
  }
  return sheet;
}

nlohmann::json to_spec_json(const SpecificationSheet& sheet) {
  nlohmann::json out = nlohmann::json::object();
  if (!sheet.title.empty()) out["title"] = sheet.title;
  for (Criterion c : kAllCriteria) {
    const Interval& iv = sheet.bound(c);
    const std::string name(to_string(c));
    if (iv.lo_given && iv.hi_given && iv.lo == iv.hi) {
      out[name] = iv.lo;
      continue;
    }
    if (iv.lo_given) out[name + "_min"] = iv.lo;
    if (iv.hi_given) out[name + "_max"] = iv.hi;
  }
  nlohmann::json weights = nlohmann::json::object();
  for (Criterion c : kAllCriteria) {
    if (sheet.weight(c) != 1.0) weights[std::string(to_string(c))] = sheet.weight(c);
  }
  if (!weights.empty()) out["weights"] = weights;
  if (sheet.material) out["material"] = std::string(to_string(*sheet.material));
  if (sheet.ends) out["ends"] = std::string(to_string(*sheet.ends));
  if (sheet.ncycles_given) out["Ncycles"] = sheet.ncycles;
  if (sheet.nu != 1.0) out["nu"] = sheet.nu;
  if (sheet.no_buckling) out["no_buckling"] = true;
  out["objective"] = {{"criterion", std::string(to_string(sheet.objective.criterion))},
                      {"sense", std::string(to_string(sheet.objective.sense))}};
  return out;
}

nlohmann::json to_normalized_json(const SpecificationSheet& sheet) {
  nlohmann::json bounds = nlohmann::json::object();
  for (Criterion c : kAllCriteria) {
    const Interval& iv = sheet.bound(c);
    bounds[std::string(to_string(c))] = {
        {"min", iv.lo},          {"max", iv.hi},
        {"min_given", iv.lo_given}, {"max_given", iv.hi_given},
        {"unit", std::string(unit_of(c))}, {"constrained", sheet.constrained(c)},
        {"weight", sheet.weight(c)},
    };
  }
  return {
      {"title", sheet.title},
      {"bounds", bounds},
      {"material", sheet.material ? std::string(to_string(*sheet.material)) : "dont_care"},
      {"ends", sheet.ends ? std::string(to_string(*sheet.ends)) : "dont_care"},
      {"Ncycles", sheet.ncycles},
      {"Ncycles_given", sheet.ncycles_given},
      {"nu", sheet.nu},
      {"no_buckling", sheet.no_buckling},
      {"objective",
       {{"criterion", std::string(to_string(sheet.objective.criterion))},
        {"sense", std::string(to_string(sheet.objective.sense))}}},
  };
}

CriterionValues criterion_values(const CatalogueEntry& entry, const DerivedGeometry& geom,
                                 const Material& mat, OperatingLengths op,
                                 const SpecificationSheet& sheet) {
  CriterionValues v{};
  const double s1 = entry.L0 - op.L1;
  const double s2 = entry.L0 - op.L2;
  const double P1 = std::max(0.0, entry.R * s1);
  const double P2 = std::max(P1, entry.R * s2);

  v[index(Criterion::Do)] = entry.Do;
  v[index(Criterion::Di)] = geom.Di;
  v[index(Criterion::D)] = geom.D;
  v[index(Criterion::d)] = entry.d;
  v[index(Criterion::L0)] = entry.L0;
  v[index(Criterion::R)] = entry.R;
  v[index(Criterion::n)] = geom.n;
  v[index(Criterion::p)] = geom.p;
  v[index(Criterion::Ls)] = geom.Ls;
  v[index(Criterion::mass)] = spring_mass_g(geom, entry, mat);
  v[index(Criterion::surgeFrequency)] = surge_frequency(entry, geom, mat);
  v[index(Criterion::volAtL0)] = envelope_volume_cm3(entry, entry.L0);
  v[index(Criterion::volAtL2)] = envelope_volume_cm3(entry, op.L2);
  v[index(Criterion::price)] = entry.price;
  v[index(Criterion::P1)] = P1;
  v[index(Criterion::P2)] = P2;
  v[index(Criterion::L1)] = op.L1;
  v[index(Criterion::L2)] = op.L2;
  v[index(Criterion::sh)] = op.L1 - op.L2;
  v[index(Criterion::energy)] = 0.5 * entry.R * (s2 * s2 - s1 * s1);
  v[index(Criterion::fatigueFactor)] = fatigue_life_factor(entry, geom, mat, P1, P2, sheet.ncycles);
  v[index(Criterion::bucklingMargin)] = op.L2 - buckling_length(entry, geom, mat, sheet.nu);
  v[index(Criterion::solidReserve)] = op.L2 - min_operating_length(entry, geom);
  return v;
}

double criterion_value(Criterion c, const CatalogueEntry& entry, const DerivedGeometry& geom,
                       const Material& mat, OperatingLengths op, const SpecificationSheet& sheet) {
  return criterion_values(entry, geom, mat, op, sheet)[index(c)];
}

}  // namespace springsel
