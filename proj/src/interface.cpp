#include "springsel/interface.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "springsel/service.hpp"

namespace springsel {

namespace {

nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

nlohmann::json vector_json(const FuzzyVector& v) { return nlohmann::json(v.m); }

nlohmann::json criterion_json(const CriterionReport& r) {
  return {
      {"criterion", std::string(to_string(r.criterion))},
      {"unit", std::string(unit_of(r.criterion))},
      {"value", finite_or_null(r.value)},
      {"min", r.bounds.lo},
      {"max", r.bounds.hi},
      {"constrained", r.constrained},
      {"active", r.active},
      {"weight", r.weight},
      {"crisp_mark", r.crisp},
      {"worst_mark", finite_or_null(r.worst)},
      {"fuzzy_mark", vector_json(r.fuzzy)},
      {"violated", r.violated()},
  };
}

double report_value(const SpringEvaluation& ev, Criterion c) { return ev.reports[index(c)].value; }

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

}  // namespace

std::vector<Method> parse_methods(std::string_view text) {
  if (text == "both") return {Method::multicriteria, Method::fuzzy};
  if (auto m = parse_method(text)) return {*m};
  throw SpecError("method", "expected multicriteria, fuzzy or both");
}

SearchRequest parse_search_request(const nlohmann::json& body) {
  if (!body.is_object()) throw SpecError("<document>", "request must be a JSON object");
  SearchRequest req;
  req.sheet = normalize(nlohmann::json::object());
  req.methods = {Method::multicriteria};
  for (const auto& [key, value] : body.items()) {
    if (key == "spec") {
      req.sheet = normalize(value);
    } else if (key == "method") {
      if (!value.is_string()) throw SpecError(key, "expected a string");
      req.methods = parse_methods(value.get<std::string>());
    } else if (key == "top") {
      if (!value.is_number_integer() || value.get<long long>() < 0) throw SpecError(key, "expected a non-negative integer");
      req.top = value.get<std::size_t>();
    } else if (key == "trace") {
      if (!value.is_boolean()) throw SpecError(key, "expected true or false");
      req.trace = value.get<bool>();
    } else if (key == "catalogue") {
      if (value != "default") throw SpecError(key, "only the 'default' catalogue is served");
    } else {
      throw SpecError(key, "unknown key");
    }
  }
  return req;
}

std::vector<SearchResult> run_searches(const Catalogue& catalogue, const SearchRequest& request) {
  std::vector<SearchResult> results;
  for (Method m : request.methods) results.push_back(search(catalogue, request.sheet, m, request.top));
  return results;
}

nlohmann::json to_json(const CatalogueEntry& e) {
  return {{"id", e.id},
          {"Do", e.Do},
          {"d", e.d},
          {"L0", e.L0},
          {"R", e.R},
          {"material", std::string(to_string(e.material))},
          {"ends", std::string(to_string(e.ends))},
          {"price", e.price}};
}

nlohmann::json to_json(const SpringEvaluation& ev, bool with_criteria) {
  nlohmann::json j = {
      {"entry", to_json(ev.entry)},
      {"L1", ev.point.L1},
      {"L2", ev.point.L2},
      {"P1", report_value(ev, Criterion::P1)},
      {"P2", report_value(ev, Criterion::P2)},
      {"operating_feasible", ev.point.feasible},
      {"objective", ev.objective},
      {"violation", ev.violation},
      {"ncv", ev.ncv},
      {"score", ev.score},
      {"quality", vector_json(ev.quality)},
  };
  if (with_criteria) {
    nlohmann::json criteria = nlohmann::json::array();
    for (const CriterionReport& r : ev.reports) criteria.push_back(criterion_json(r));
    j["criteria"] = std::move(criteria);
  }
  return j;
}

nlohmann::json to_json(const SearchResult& result, bool trace) {
  nlohmann::json ranked = nlohmann::json::array();
  for (const SpringEvaluation& ev : result.ranked) ranked.push_back(to_json(ev, false));
  nlohmann::json j = {
      {"method", std::string(to_string(result.method))},
      {"selected", to_json(result.selected, true)},
      {"feasible_count", result.feasible_count},
      {"evaluated", result.evaluated},
      {"ranked", std::move(ranked)},
  };
  if (trace) {
    nlohmann::json all = nlohmann::json::array();
    for (const SpringEvaluation& ev : result.evaluations) all.push_back(to_json(ev, false));
    j["trace"] = std::move(all);
  }
  return j;
}

nlohmann::json search_response(const SearchRequest& request, std::span<const SearchResult> results) {
  nlohmann::json list = nlohmann::json::array();
  for (const SearchResult& r : results) list.push_back(to_json(r, request.trace));
  return {{"spec", to_normalized_json(request.sheet)}, {"results", std::move(list)}};
}

nlohmann::json catalogue_summary(const Catalogue& catalogue) {
  struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  Range Do, d, L0, R, price;
  std::size_t steel = 0, stainless = 0, closed = 0, ground = 0;
  for (const CatalogueEntry& e : catalogue.entries) {
    Do.add(e.Do);
    d.add(e.d);
    L0.add(e.L0);
    R.add(e.R);
    price.add(e.price);
    (e.material == MaterialId::steel ? steel : stainless) += 1;
    (e.ends == EndType::closed ? closed : ground) += 1;
  }
  auto range = [&](const Range& r) {
    if (catalogue.entries.empty()) return nlohmann::json(nullptr);
    return nlohmann::json{{"min", r.lo}, {"max", r.hi}};
  };
  return {
      {"origin", catalogue.meta.origin},
      {"entries", catalogue.entries.size()},
      {"rejected", catalogue.meta.rejections.size()},
      {"ranges", {{"Do", range(Do)}, {"d", range(d)}, {"L0", range(L0)}, {"R", range(R)}, {"price", range(price)}}},
      {"materials", {{"steel", steel}, {"stainless", stainless}}},
      {"ends", {{"closed", closed}, {"closed_ground", ground}}},
  };
}

void print_text_report(std::ostream& out, const SearchRequest& request, std::span<const SearchResult> results) {
  const SpecificationSheet& sheet = request.sheet;
  if (!sheet.title.empty()) out << sheet.title << "\n";
  out << "Objective: " << to_string(sheet.objective.sense) << ' ' << to_string(sheet.objective.criterion) << "\n";
  if (results.empty()) return;
  out << "Springs evaluated: " << results.front().evaluated
      << ", fitting the specification: " << results.front().feasible_count << "\n\n";

  // Selections side by side, one column per method.
  constexpr int kLabel = 16;
  constexpr int kColumn = 18;
  out << std::left << std::setw(kLabel) << "";
  for (const SearchResult& r : results) out << std::right << std::setw(kColumn) << to_string(r.method);
  out << "\n";
  auto row = [&](std::string_view label, auto&& cell) {
    out << std::left << std::setw(kLabel) << label;
    for (const SearchResult& r : results) out << std::right << std::setw(kColumn) << cell(r.selected);
    out << "\n";
  };
  row("entry id", [](const SpringEvaluation& ev) { return std::to_string(ev.entry.id); });
  row("Do (mm)", [](const SpringEvaluation& ev) { return fixed(ev.entry.Do, 2); });
  row("d (mm)", [](const SpringEvaluation& ev) { return fixed(ev.entry.d, 2); });
  row("L0 (mm)", [](const SpringEvaluation& ev) { return fixed(ev.entry.L0, 2); });
  row("R (N/mm)", [](const SpringEvaluation& ev) { return fixed(ev.entry.R, 3); });
  row("material", [](const SpringEvaluation& ev) { return std::string(to_string(ev.entry.material)); });
  row("ends", [](const SpringEvaluation& ev) { return std::string(to_string(ev.entry.ends)); });
  row("L1 (mm)", [](const SpringEvaluation& ev) { return fixed(ev.point.L1, 2); });
  row("L2 (mm)", [](const SpringEvaluation& ev) { return fixed(ev.point.L2, 2); });
  row("P1 (N)", [](const SpringEvaluation& ev) { return fixed(report_value(ev, Criterion::P1), 2); });
  row("P2 (N)", [](const SpringEvaluation& ev) { return fixed(report_value(ev, Criterion::P2), 2); });
  row("objective", [](const SpringEvaluation& ev) { return fixed(ev.objective, 4); });
  row("violation", [](const SpringEvaluation& ev) { return fixed(ev.violation, 4); });
  row("ncv", [](const SpringEvaluation& ev) { return std::to_string(ev.ncv); });

  for (const SearchResult& r : results) {
    out << "\n[" << to_string(r.method) << "] criteria of spring " << r.selected.entry.id << "\n";
    out << std::left << std::setw(kLabel) << "criterion" << std::right << std::setw(14) << "value"
        << std::setw(14) << "min" << std::setw(14) << "max" << std::setw(12) << "mark" << "\n";
    for (const CriterionReport& c : r.selected.reports) {
      if (!c.active) continue;
      out << std::left << std::setw(kLabel) << to_string(c.criterion) << std::right << std::setw(14)
          << fixed(c.value, 4) << std::setw(14) << fixed(c.bounds.lo, 3) << std::setw(14)
          << (c.bounds.hi >= kDefaultUpper ? std::string("-") : fixed(c.bounds.hi, 3)) << std::setw(12)
          << fixed(c.crisp, 4) << (c.violated() ? "  *" : "") << "\n";
    }
    out << "Ranked (" << (r.method == Method::multicriteria ? "by evaluation" : "incumbent trail") << "):\n";
    for (const SpringEvaluation& ev : r.ranked) {
      out << "  #" << ev.entry.id << "  L2 " << fixed(ev.point.L2, 2) << "  objective " << fixed(ev.objective, 4)
          << "  violation " << fixed(ev.violation, 4) << "  ncv " << ev.ncv << "\n";
    }
    if (request.trace) {
      out << "Trace:\n";
      for (const SpringEvaluation& ev : r.evaluations) {
        out << "  #" << ev.entry.id << "  L1 " << fixed(ev.point.L1, 3) << "  L2 " << fixed(ev.point.L2, 3)
            << "  objective " << fixed(ev.objective, 4) << "  violation " << fixed(ev.violation, 4) << "  ncv "
            << ev.ncv << "  score " << fixed(ev.score, 4) << (ev.point.feasible ? "" : "  (clamped)") << "\n";
      }
    }
  }
}

namespace {

SearchService* g_running_service = nullptr;

void handle_signal(int) {
  if (g_running_service != nullptr) g_running_service->stop();
}

struct CatalogueSource {
  std::string path;
  std::size_t synthetic = 0;
  std::uint64_t seed = 1;

  Catalogue load() const {
    if (!path.empty()) return load_catalogue(path);
    if (synthetic > 0) return generate_synthetic(seed, synthetic);
    throw FormatError("give --catalogue <file> or --synthetic <count>");
  }
};

void add_catalogue_options(CLI::App& app, CatalogueSource& src) {
  auto* file = app.add_option("--catalogue", src.path, "Catalogue CSV file");
  auto* synth = app.add_option("--synthetic", src.synthetic, "Generate a synthetic catalogue of this many springs");
  app.add_option("--seed", src.seed, "Seed for --synthetic");
  file->excludes(synth);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stock helical compression spring selection"};
  app.require_subcommand(0, 1);

  CatalogueSource source;
  std::string spec_path;
  std::string method = "multicriteria";
  std::size_t top = kDefaultTopK;
  std::string format = "text";
  bool trace = false;
  add_catalogue_options(app, source);
  app.add_option("--spec", spec_path, "Specification sheet (JSON)");
  app.add_option("--method", method, "multicriteria, fuzzy or both")
      ->check(CLI::IsMember({"multicriteria", "fuzzy", "both"}));
  app.add_option("--top", top, "Length of the ranked list");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", trace, "Dump every spring's evaluation");

  auto* serve = app.add_subcommand("serve", "Run the HTTP JSON service");
  CatalogueSource serve_source;
  std::string host = "127.0.0.1";
  int port = 8080;
  add_catalogue_options(*serve, serve_source);
  serve->add_option("--bind", host, "Address to bind");
  serve->add_option("--port", port, "Port (0 picks a free one)");

  auto* export_cmd = app.add_subcommand("export", "Write a catalogue as CSV");
  CatalogueSource export_source;
  std::string export_path;
  add_catalogue_options(*export_cmd, export_source);
  export_cmd->add_option("--out", export_path, "Output CSV (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*serve) {
      SearchService service(serve_source.load());
      const int bound = service.bind(host, port);
      if (bound < 0) {
        err << "cannot bind " << host << ':' << port << "\n";
        return 1;
      }
      out << "serving on http://" << host << ':' << bound << "\n" << std::flush;
      g_running_service = &service;
      std::signal(SIGINT, handle_signal);
      std::signal(SIGTERM, handle_signal);
      service.run();
      g_running_service = nullptr;
      return 0;
    }
    if (*export_cmd) {
      const Catalogue cat = export_source.load();
      if (export_path.empty()) {
        write_catalogue(out, cat.entries);
      } else {
        std::ofstream file(export_path);
        if (!file) throw FormatError("cannot write '" + export_path + "'");
        write_catalogue(file, cat.entries);
      }
      return 0;
    }

    if (spec_path.empty()) {
      err << "error: --spec is required\n";
      return 1;
    }
    std::ifstream spec_file(spec_path);
    if (!spec_file) {
      err << "error: cannot open spec file '" << spec_path << "'\n";
      return 1;
    }
    const nlohmann::json raw = nlohmann::json::parse(spec_file, nullptr, false);
    if (raw.is_discarded()) {
      err << "error: spec file '" << spec_path << "' is not valid JSON\n";
      return 1;
    }
    SearchRequest request;
    request.sheet = normalize(raw);
    request.methods = parse_methods(method);
    request.top = top;
    request.trace = trace;

    const Catalogue catalogue = source.load();
    for (const Rejection& r : catalogue.meta.rejections) {
      err << "warning: " << catalogue.meta.origin << ':' << r.line << ": " << r.reason << "\n";
    }
    const std::vector<SearchResult> results = run_searches(catalogue, request);
    if (format == "json") {
      out << search_response(request, results).dump(2) << "\n";
    } else {
      print_text_report(out, request, results);
    }
    return 0;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const EmptyCatalogue& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace springsel
