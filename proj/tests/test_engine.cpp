#include <doctest.h>

#include <algorithm>
#include <random>

#include "springsel/engine.hpp"
#include "support.hpp"

using namespace springsel;
using nlohmann::json;
using springsel::testing::make_entry;

namespace {

const json kPinSheet = {{"Do_max", 38}, {"Di_min", 27}, {"sh", 11},      {"L1_max", 50}, {"R_max", 5.5},
                        {"P1_min", 5},  {"P1_max", 15}, {"P2_min", 50}, {"P2_max", 100}};
const json kSensorSheet = {{"Do_max", 13},
                           {"Di_min", 5},
                           {"sh", 60},
                           {"P1_min", 3},
                           {"L2_min", 30},
                           {"L2_max", 45},
                           {"objective", {{"criterion", "P2"}, {"sense", "minimize"}}}};

Catalogue catalogue_of(std::vector<CatalogueEntry> entries) {
  Catalogue c;
  c.entries = std::move(entries);
  return c;
}

}  // namespace

TEST_CASE("evaluating the violating clamping-pin spring") {
  const auto sheet = normalize(kPinSheet);
  const auto ev = evaluate_spring(make_entry(32.0, 2.2, 25.0, 5.78), sheet);
  CHECK(ev.point.feasible);
  CHECK(ev.ncv == 1);
  CHECK(ev.reports[index(Criterion::R)].violated());
  CHECK(ev.violation == doctest::Approx(0.28 / 5.5).epsilon(1e-9));
  CHECK(ev.objective == doctest::Approx(11.4).epsilon(0.01 / 11.4));
  CHECK(ev.score == doctest::Approx(std::log(ev.objective) + 100.0 * ev.violation).epsilon(1e-12));
}

TEST_CASE("tournament step") {
  const auto sheet = normalize(kPinSheet);
  const auto feasible = evaluate_spring(make_entry(32.0, 2.2, 32.0, 4.34, MaterialId::steel,
                                                   EndType::closed_ground, 1.0, 1), sheet);
  const auto violating = evaluate_spring(make_entry(32.0, 2.2, 25.0, 5.78, MaterialId::steel,
                                                    EndType::closed_ground, 1.0, 2), sheet);
  REQUIRE(feasible.ncv == 0);
  REQUIRE(violating.ncv == 1);
  CHECK(tournament_step(violating, feasible, sheet) == Decision::replace);
  CHECK(tournament_step(feasible, violating, sheet) == Decision::keep);
  CHECK(tournament_step(feasible, feasible, sheet) == Decision::keep);

  const auto fc = compare_fuzzy(feasible, feasible, sheet);
  CHECK(fc.obj_mark == 0.0);
  CHECK(fc.verdict.inferior == fc.verdict.superior);
}

TEST_CASE("sensor case study") {
  std::vector<CatalogueEntry> springs = reference_springs();
  const auto sheet = normalize(kSensorSheet);
  const auto cat = catalogue_of(springs);
  const auto mc = search(cat, sheet, Method::multicriteria);
  CHECK(mc.selected.entry.Do == 11.0);
  CHECK(mc.selected.entry.d == 0.9);
  CHECK(mc.selected.entry.R == 0.3);
  CHECK(mc.selected.ncv == 0);
  CHECK(mc.selected.violation == 0.0);
  CHECK(mc.selected.point.L1 == doctest::Approx(90.0).epsilon(1e-12));
  CHECK(mc.selected.point.L2 == doctest::Approx(30.0).epsilon(1e-12));
  CHECK(mc.selected.objective == doctest::Approx(21.0).epsilon(1e-12));
  CHECK(mc.evaluated == springs.size());
  CHECK(mc.feasible_count <= mc.evaluated);

  // The stainless sibling cannot reach L2 = 32 above the solid reserve, so
  // it violates P1 and cannot displace a spring without violations.
  const auto stainless = evaluate_spring(springs[5], sheet);
  CHECK(stainless.ncv >= 1);
  CHECK(springsel::load_at_length(springs[5], stainless.geometry, 32.0) == doctest::Approx(25.43).epsilon(0.05 / 25.43));
}

TEST_CASE("single-entry catalogue") {
  const auto cat = catalogue_of({make_entry(11.0, 0.9, 100.0, 0.3)});
  const auto sheet = normalize(kSensorSheet);
  for (Method m : {Method::multicriteria, Method::fuzzy}) {
    const auto r = search(cat, sheet, m);
    CHECK(r.selected.entry.id == 1);
    CHECK(r.evaluated == 1);
    CHECK(r.feasible_count == 1);
    CHECK(r.ranked.size() == 1);
  }
}

TEST_CASE("filters that empty the catalogue") {
  const auto cat = catalogue_of({make_entry(11.0, 0.9, 100.0, 0.3)});
  const auto sheet = normalize(json{{"material", "stainless"}});
  CHECK_THROWS_AS(search(cat, sheet, Method::multicriteria), EmptyCatalogue);
  CHECK_THROWS_AS(search(cat, sheet, Method::fuzzy), EmptyCatalogue);
  CHECK_THROWS_AS(search(Catalogue{}, normalize(json::object()), Method::fuzzy), EmptyCatalogue);
}

TEST_CASE("ranking") {
  const auto& cat = springsel::testing::seeded_catalogue();
  const auto sheet = normalize(kPinSheet);
  const auto mc = search(cat, sheet, Method::multicriteria, 5);
  REQUIRE(mc.ranked.size() == 5);
  CHECK(mc.ranked.front().entry.id == mc.selected.entry.id);
  for (std::size_t i = 1; i < mc.ranked.size(); ++i) {
    CHECK_FALSE(better_score(mc.ranked[i], mc.ranked[i - 1], Sense::minimize));
  }
  const auto fz = search(cat, sheet, Method::fuzzy, 5);
  REQUIRE_FALSE(fz.ranked.empty());
  CHECK(fz.ranked.front().entry.id == fz.selected.entry.id);
  CHECK(fz.evaluations.size() == cat.entries.size());
}

TEST_CASE("price scaling leaves the price pick unchanged") {
  std::mt19937_64 rng(31);
  Catalogue cat = springsel::testing::seeded_catalogue();
  for (auto s : {Sense::minimize, Sense::maximize}) {
    auto sheet = normalize(json{{"Do_max", 20},
                                {"objective", {{"criterion", "price"}, {"sense", std::string(to_string(s))}}}});
    const auto before = search(cat, sheet, Method::multicriteria).selected.entry.id;
    Catalogue scaled = cat;
    const double k = springsel::testing::uniform(rng, 0.1, 10.0);
    for (auto& e : scaled.entries) e.price *= k;
    CHECK(search(scaled, sheet, Method::multicriteria).selected.entry.id == before);
  }
}

TEST_CASE("searches are deterministic") {
  const auto& cat = springsel::testing::seeded_catalogue();
  const auto sheet = normalize(kPinSheet);
  for (Method m : {Method::multicriteria, Method::fuzzy}) {
    const auto a = search(cat, sheet, m);
    const auto b = search(cat, sheet, m);
    CHECK(a.selected.entry == b.selected.entry);
    CHECK(a.selected.score == b.selected.score);
    CHECK(a.feasible_count == b.feasible_count);
  }
}
