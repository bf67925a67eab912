#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string_view>

#include "springsel/engine.hpp"
#include "springsel/fuzzy.hpp"
#include "springsel/marks.hpp"
#include "support.hpp"

using namespace springsel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Reference rule labels, row by row.
constexpr std::array<std::array<std::string_view, 5>, 5> kReferenceSpecTable = {{
    {"E", "S", "VS", "VS", "VS"},
    {"I", "E", "S", "VS", "VS"},
    {"VI", "I", "E", "S", "VS"},
    {"VI", "VI", "I", "E", "S"},
    {"VI", "VI", "VI", "I", "E"},
}};
// Final-comparison labels with the (VS, E) cell read as S instead of VI.
constexpr std::array<std::array<std::string_view, 5>, 5> kCorrectedFinalTable = {{
    {"I", "I", "I", "I", "E"},
    {"I", "I", "I", "E", "S"},
    {"I", "I", "E", "S", "S"},
    {"I", "E", "S", "S", "S"},
    {"E", "S", "S", "S", "S"},
}};

std::size_t label_index(std::string_view s) {
  constexpr std::array<std::string_view, 5> names = {"VI", "I", "E", "S", "VS"};
  for (std::size_t i = 0; i < 5; ++i) {
    if (names[i] == s) return i;
  }
  return 99;
}

FuzzyVector one_hot(std::size_t i) {
  FuzzyVector v;
  v[i] = 1.0;
  return v;
}

FuzzyVector vec(double a, double b, double c, double d, double e) { return FuzzyVector{{a, b, c, d, e}}; }

void check_vector(const FuzzyVector& got, const FuzzyVector& want, double tol = 1e-12) {
  for (std::size_t i = 0; i < 5; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol).scale(1.0));
}

}  // namespace

TEST_CASE("crisp mark") {
  CHECK(crisp_mark(0.0, 5.5, 5.78) == doctest::Approx(0.0509).epsilon(0.0005 / 0.0509));
  CHECK(crisp_mark(0.0, 5.5, 5.78) == doctest::Approx(0.28 / 5.5).epsilon(1e-12));
  CHECK(crisp_mark(5.0, 15.0, 10.0) == 0.0);
  CHECK(crisp_mark(0.0, 0.0, 3.0) == 3.0);
  CHECK(crisp_mark(10.0, 1e7, 5.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(crisp_mark(5.0, 15.0, 5.0) == 0.0);
  CHECK(crisp_mark(5.0, 15.0, 15.0) == 0.0);
}

TEST_CASE("violation and ncv") {
  CriterionReports reports{};
  for (Criterion c : kAllCriteria) reports[index(c)].criterion = c;
  CHECK(violation(reports) == 0.0);
  CHECK(count_violations(reports) == 0);

  reports[index(Criterion::R)].crisp = 0.0509;
  CHECK(violation(reports) == doctest::Approx(0.0509).epsilon(1e-12));
  CHECK(count_violations(reports) == 1);

  reports[index(Criterion::R)].crisp = 0.2;
  reports[index(Criterion::P1)].crisp = 0.4;
  CHECK(violation(reports) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(count_violations(reports) == 2);

  reports[index(Criterion::P1)].weight = 3.0;
  CHECK(violation(reports) == doctest::Approx((0.2 + 3.0 * 0.4) / 4.0).epsilon(1e-12));

  // Margins that are not asked for are not counted.
  reports[index(Criterion::solidReserve)].crisp = 1.0;
  reports[index(Criterion::solidReserve)].active = false;
  CHECK(count_violations(reports) == 2);
}

TEST_CASE("evaluation score") {
  CHECK(evaluation_score(17.54, 0.0, Sense::minimize) == doctest::Approx(std::log(17.54)).epsilon(1e-12));
  CHECK(evaluation_score(11.4, 0.051, Sense::minimize) == doctest::Approx(std::log(11.4) + 5.1).epsilon(1e-12));
  CHECK(evaluation_score(11.4, 0.051, Sense::minimize) == doctest::Approx(7.53).epsilon(0.01 / 7.53));
  CHECK(evaluation_score(11.4, 0.051, Sense::minimize) > evaluation_score(17.54, 0.0, Sense::minimize));
  CHECK(evaluation_score(50.0, 0.01, Sense::maximize) == doctest::Approx(2.912).epsilon(0.001 / 2.912));
  CHECK(evaluation_score(0.0, 0.0, Sense::minimize) == doctest::Approx(std::log(1e-12)));
  // Large violations stay finite.
  CHECK(std::isfinite(evaluation_score(1.0, 50.0, Sense::minimize)));
}

TEST_CASE("worst mark and fuzzy mark") {
  CHECK(worst_mark(0.0, 1e7, 5.0) == doctest::Approx(100.0 * (1e7 - 5.0) / 1e7));
  CHECK(worst_mark(0.0, 0.0, 3.0) == -3.0);
  CHECK(worst_mark(10.0, 20.0, 12.0) == doctest::Approx(20.0).epsilon(1e-12));
  CHECK(worst_mark(10.0, 20.0, 18.0) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(worst_mark(0.0, 20.0, -1.0) == -1.0);

  check_vector(fuzzy_mark(0.0, 5.5, 5.78), vec(1, 0, 0, 0, 0));
  check_vector(fuzzy_mark(10.0, 1e7, 5.0), vec(1, 0, 0, 0, 0));
  check_vector(quality_memberships(-3.0), vec(1, 0, 0, 0, 0));
  check_vector(quality_memberships(0.0), vec(1, 0, 0, 0, 0));
  check_vector(quality_memberships(45.0), vec(0, 0, 0, 0, 1));
  check_vector(quality_memberships(80.0), vec(0, 0, 0, 0, 1));
  check_vector(quality_memberships(kInf), vec(0, 0, 0, 0, 1));
  check_vector(quality_memberships(10.0), vec(0, 0.5, 0.5, 0, 0));
  check_vector(quality_memberships(2.5), vec(0.5, 0.5, 0, 0, 0));
  check_vector(quality_memberships(22.5), vec(0, 0, 0.5, 0.5, 0));
  check_vector(quality_memberships(37.5), vec(0, 0, 0, 0.5, 0.5));
  // WorstMark 10 from an upper bound: (100 - 90)/100.
  check_vector(fuzzy_mark(0.0, 100.0, 90.0), vec(0, 0.5, 0.5, 0, 0));
}

TEST_CASE("aggregate") {
  const FuzzyVector a = vec(0, 0, 0, 0, 1), b = vec(1, 0, 0, 0, 0), c = vec(0, 0.5, 0.5, 0, 0);
  {
    const std::array<FuzzyVector, 1> marks = {c};
    const std::array<double, 1> w = {1.0};
    check_vector(aggregate_spec(marks, w), c);
  }
  {
    const std::array<FuzzyVector, 2> marks = {a, b};
    const std::array<double, 2> w = {1.0, 1.0};
    check_vector(aggregate_spec(marks, w), vec(0.5, 0, 0, 0, 0.5));
  }
  {
    const std::array<FuzzyVector, 3> marks = {a, b, c};
    const std::array<double, 3> w = {2.0, 1.0, 1.0};
    check_vector(aggregate_spec(marks, w), vec(0.25, 0.125, 0.125, 0, 0.5));
  }
  {
    const std::array<FuzzyVector, 1> marks = {c};
    const std::array<double, 1> w = {0.0};
    check_vector(aggregate_spec(marks, w), vec(0, 0, 0, 0, 0));
  }
}

TEST_CASE("specification comparison") {
  const FuzzyVector tested = vec(0, 0, 0.70, 0.30, 0);
  const FuzzyVector incumbent = vec(0, 0.50, 0.50, 0, 0);
  check_vector(mamdani_combine(tested, incumbent, kSpecComparisonTable), vec(0.3, 0.5, 0.5, 0, 0));

  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      check_vector(mamdani_combine(one_hot(i), one_hot(j), kSpecComparisonTable),
                   one_hot(label_index(kReferenceSpecTable[i][j])));
    }
  }
  check_vector(mamdani_combine(one_hot(0), one_hot(4), kSpecComparisonTable), one_hot(4));
}

TEST_CASE("final comparison") {
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      check_vector(mamdani_combine(one_hot(i), one_hot(j), kFinalComparisonTable),
                   one_hot(label_index(kCorrectedFinalTable[i][j])));
    }
  }
  // The reference example gives S = 0.43, but min/max over its own activations
  // yields 0.50: the (S, E) cell fires at min(0.57, 0.50). The (VS, E)
  // cell is read as S to keep the table antisymmetric.
  const FuzzyComparison fc = final_comparison(vec(0.3, 0.5, 0.5, 0, 0), vec(0, 0, 0, 0.57, 0.43));
  CHECK(fc.verdict.inferior == doctest::Approx(0.30).epsilon(1e-12));
  CHECK(fc.verdict.equal == doctest::Approx(0.50).epsilon(1e-12));
  CHECK(fc.verdict.superior == doctest::Approx(0.50).epsilon(1e-12));
  CHECK(fc.verdict.superior > fc.verdict.inferior);
}

TEST_CASE("objective mark") {
  CHECK(obj_mark(10.0, 10.0, Sense::minimize) == 0.0);
  CHECK(obj_mark(30.0, 10.0, Sense::minimize) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(obj_mark(10.0, 30.0, Sense::minimize) == doctest::Approx(-100.0).epsilon(1e-12));
  CHECK(obj_mark(10.0, 30.0, Sense::maximize) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK_THROWS_AS(obj_mark(0.0, 0.0, Sense::minimize), DegenerateError);

  check_vector(fuzzify_objmark(0.0), vec(0, 0, 1, 0, 0));
  check_vector(fuzzify_objmark(-75.0), vec(0, 0, 0, 0.5, 0.5));
  check_vector(fuzzify_objmark(150.0), vec(1, 0, 0, 0, 0));
  check_vector(fuzzify_objmark(75.0), vec(0.5, 0.5, 0, 0, 0));
  check_vector(fuzzify_objmark(-150.0), vec(0, 0, 0, 0, 1));
  check_vector(fuzzify_objmark(12.5), vec(0, 0.25, 0.5, 0, 0));
}

TEST_CASE("defuzzify") {
  const Verdict v = defuzzify(vec(0.1, 0.4, 0.2, 0.3, 0.6));
  CHECK(v.inferior == 0.4);
  CHECK(v.equal == 0.2);
  CHECK(v.superior == 0.6);
}

TEST_CASE("mamdani min-rule bound") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    FuzzyVector row, col;
    for (std::size_t i = 0; i < 5; ++i) {
      row[i] = springsel::testing::uniform(rng, 0.0, 1.0);
      col[i] = springsel::testing::uniform(rng, 0.0, 1.0);
    }
    for (const RuleTable* table : {&kSpecComparisonTable, &kFinalComparisonTable}) {
      const FuzzyVector out = mamdani_combine(row, col, *table);
      for (std::size_t i = 0; i < 5; ++i) {
        CHECK(out[i] <= row.max());
        CHECK(out[i] <= col.max());
        CHECK(out[i] >= 0.0);
      }
    }
  }
}
