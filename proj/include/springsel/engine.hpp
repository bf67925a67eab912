#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "springsel/catalogue.hpp"
#include "springsel/fuzzy.hpp"
#include "springsel/marks.hpp"
#include "springsel/solver.hpp"
#include "springsel/spec.hpp"

namespace springsel {

enum class Method { multicriteria, fuzzy };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view text) noexcept;

/// Raised when the hard filters leave nothing to search.
class EmptyCatalogue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything computed for one spring against one sheet.
struct SpringEvaluation {
  CatalogueEntry entry;
  DerivedGeometry geometry;
  OperatingPoint point;
  CriterionReports reports;
  double objective = 0.0;
  double violation = 0.0;
  int ncv = 0;
  double score = 0.0;
  FuzzyVector quality;
};

SpringEvaluation evaluate_spring(const CatalogueEntry& entry, const SpecificationSheet& sheet);

/// Intermediate vectors of one fuzzy comparison.
struct FuzzyComparison {
  FuzzyVector spec;       // specification comparison
  FuzzyVector objective;  // Step 3 output
  FuzzyVector final;      // final comparison
  Verdict verdict;
  double obj_mark = 0.0;
};

/// Steps 2-4 of the fuzzy comparison for springs with equal ncv.
FuzzyComparison compare_fuzzy(const SpringEvaluation& incumbent, const SpringEvaluation& tested,
                              const SpecificationSheet& sheet);

/// Combines a specification comparison with an objective comparison and
/// collapses the result to (I, E, S).
FuzzyComparison final_comparison(const FuzzyVector& spec, const FuzzyVector& objective);

enum class Decision { keep, replace };

Decision tournament_step(const SpringEvaluation& incumbent, const SpringEvaluation& tested,
                         const SpecificationSheet& sheet);

struct SearchResult {
  Method method = Method::multicriteria;
  SpringEvaluation selected;
  std::size_t feasible_count = 0;
  std::size_t evaluated = 0;
  /// Multicriteria: best scores first. Fuzzy: incumbents, most recent first.
  std::vector<SpringEvaluation> ranked;
  /// Every admitted spring in catalogue order.
  std::vector<SpringEvaluation> evaluations;
};

inline constexpr std::size_t kDefaultTopK = 10;

SearchResult search(const Catalogue& catalogue, const SpecificationSheet& sheet, Method method,
                    std::size_t top_k = kDefaultTopK);

/// True when `a` should be preferred to `b` under the multicriteria score.
bool better_score(const SpringEvaluation& a, const SpringEvaluation& b, Sense sense) noexcept;

}  // namespace springsel
