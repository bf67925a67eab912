#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "springsel/catalogue.hpp"
#include "springsel/engine.hpp"
#include "springsel/spec.hpp"

namespace springsel {

/// One search as the CLI and the service receive it.
struct SearchRequest {
  SpecificationSheet sheet;
  std::vector<Method> methods;
  std::size_t top = kDefaultTopK;
  bool trace = false;
};

/// "multicriteria", "fuzzy" or "both".
std::vector<Method> parse_methods(std::string_view text);

/// Body of POST /api/search: {spec, method, top, trace}. Throws SpecError.
SearchRequest parse_search_request(const nlohmann::json& body);

std::vector<SearchResult> run_searches(const Catalogue& catalogue, const SearchRequest& request);

nlohmann::json to_json(const CatalogueEntry& entry);
nlohmann::json to_json(const SpringEvaluation& ev, bool with_criteria);
nlohmann::json to_json(const SearchResult& result, bool trace);

/// Echoes the applied sheet next to each method's result.
nlohmann::json search_response(const SearchRequest& request, std::span<const SearchResult> results);

nlohmann::json catalogue_summary(const Catalogue& catalogue);

void print_text_report(std::ostream& out, const SearchRequest& request, std::span<const SearchResult> results);

/// Entry point of the `springsel` tool. Returns 0 when a spring was selected,
/// 2 when the filters leave no entry, 1 on input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace springsel
