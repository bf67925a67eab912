#include "springsel/engine.hpp"

#include <algorithm>
#include <numeric>

namespace springsel {

std::string_view to_string(Method m) noexcept {
  return m == Method::multicriteria ? "multicriteria" : "fuzzy";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  if (text == "multicriteria") return Method::multicriteria;
  if (text == "fuzzy") return Method::fuzzy;
  return std::nullopt;
}

SpringEvaluation evaluate_spring(const CatalogueEntry& entry, const SpecificationSheet& sheet) {
  const Material& mat = material(entry.material);
  SpringEvaluation ev;
  ev.entry = entry;
  ev.geometry = derive_geometry(entry, mat);
  ev.point = choose_operating_point(entry, ev.geometry, mat, sheet);
  const CriterionValues values =
      criterion_values(entry, ev.geometry, mat, {ev.point.L1, ev.point.L2}, sheet);
  ev.reports = build_reports(values, sheet);
  ev.objective = values[index(sheet.objective.criterion)];
  ev.violation = violation(ev.reports);
  ev.ncv = count_violations(ev.reports);
  ev.score = evaluation_score(ev.objective, ev.violation, sheet.objective.sense);
  ev.quality = spec_quality(ev.reports);
  return ev;
}

FuzzyComparison final_comparison(const FuzzyVector& spec, const FuzzyVector& objective) {
  FuzzyComparison out;
  out.spec = spec;
  out.objective = objective;
  out.final = mamdani_combine(objective, spec, kFinalComparisonTable);
  out.verdict = defuzzify(out.final);
  return out;
}

FuzzyComparison compare_fuzzy(const SpringEvaluation& incumbent, const SpringEvaluation& tested,
                              const SpecificationSheet& sheet) {
  FuzzyVector spec;
  const bool any_constraint = std::any_of(tested.reports.begin(), tested.reports.end(),
                                          [](const CriterionReport& r) { return r.constrained && r.weight > 0.0; });
  if (any_constraint) {
    spec = mamdani_combine(tested.quality, incumbent.quality, kSpecComparisonTable);
  } else {
    // Nothing to judge the sheet on: the two springs match it equally.
    spec[grade(Comparison::E)] = 1.0;
  }
  const double mark = obj_mark(std::max(incumbent.objective, kMinObjective),
                               std::max(tested.objective, kMinObjective), sheet.objective.sense);
  FuzzyComparison out = final_comparison(spec, fuzzify_objmark(mark));
  out.obj_mark = mark;
  return out;
}

Decision tournament_step(const SpringEvaluation& incumbent, const SpringEvaluation& tested,
                         const SpecificationSheet& sheet) {
  if (tested.ncv != incumbent.ncv) return tested.ncv < incumbent.ncv ? Decision::replace : Decision::keep;
  const Verdict v = compare_fuzzy(incumbent, tested, sheet).verdict;
  return v.inferior > v.superior ? Decision::replace : Decision::keep;
}

bool better_score(const SpringEvaluation& a, const SpringEvaluation& b, Sense sense) noexcept {
  if (a.score != b.score) return sense == Sense::minimize ? a.score < b.score : a.score > b.score;
  return a.entry.id < b.entry.id;
}

SearchResult search(const Catalogue& catalogue, const SpecificationSheet& sheet, Method method,
                    std::size_t top_k) {
  std::vector<const CatalogueEntry*> admitted;
  for (const CatalogueEntry& e : catalogue.entries) {
    if (sheet.admits(e)) admitted.push_back(&e);
  }
  if (admitted.empty()) throw EmptyCatalogue("no catalogue entry passes the material/ends filters");
  std::stable_sort(admitted.begin(), admitted.end(),
                   [](const CatalogueEntry* a, const CatalogueEntry* b) { return a->id < b->id; });

  SearchResult result;
  result.method = method;
  result.evaluated = admitted.size();
  result.evaluations.reserve(admitted.size());
  for (const CatalogueEntry* e : admitted) result.evaluations.push_back(evaluate_spring(*e, sheet));
  const auto& evals = result.evaluations;
  result.feasible_count = static_cast<std::size_t>(
      std::count_if(evals.begin(), evals.end(), [](const SpringEvaluation& ev) { return ev.ncv == 0; }));

  const Sense sense = sheet.objective.sense;
  if (method == Method::multicriteria) {
    std::vector<std::size_t> order(evals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t k = std::min(std::max<std::size_t>(top_k, 1), order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) { return better_score(evals[a], evals[b], sense); });
    result.selected = evals[order.front()];
    for (std::size_t i = 0; i < std::min(top_k, order.size()); ++i) result.ranked.push_back(evals[order[i]]);
    return result;
  }

  std::vector<std::size_t> trail{0};
  for (std::size_t i = 1; i < evals.size(); ++i) {
    if (tournament_step(evals[trail.back()], evals[i], sheet) == Decision::replace) trail.push_back(i);
  }
  result.selected = evals[trail.back()];
  for (auto it = trail.rbegin(); it != trail.rend() && result.ranked.size() < top_k; ++it) {
    result.ranked.push_back(evals[*it]);
  }
  return result;
}

}  // namespace springsel
