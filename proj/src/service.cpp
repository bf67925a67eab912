#include "springsel/service.hpp"

#include <httplib.h>

#include "springsel/engine.hpp"
#include "springsel/interface.hpp"

namespace springsel {

namespace {

nlohmann::json error_body(std::string_view field, std::string_view message) {
  return {{"error", std::string(message)}, {"field", std::string(field)}};
}

void send(httplib::Response& res, const SearchService::Reply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

}  // namespace

SearchService::SearchService(Catalogue catalogue)
    : catalogue_(std::make_shared<const Catalogue>(std::move(catalogue))),
      server_(std::make_unique<httplib::Server>()) {
  server_->Post("/api/search", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, search(req.body));
  });
  server_->Get("/api/catalogue/summary",
               [this](const httplib::Request&, httplib::Response& res) { send(res, catalogue_summary()); });
  server_->Get("/api/defaults", [this](const httplib::Request&, httplib::Response& res) { send(res, defaults()); });
  server_->Get("/api/health", [this](const httplib::Request&, httplib::Response& res) { send(res, health()); });
}

SearchService::~SearchService() { stop(); }

SearchService::Reply SearchService::search(std::string_view body) const {
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded()) return {400, error_body("<document>", "request body is not valid JSON")};
  try {
    const SearchRequest request = parse_search_request(doc);
    const auto results = run_searches(*catalogue_, request);
    return {200, search_response(request, results)};
  } catch (const SpecError& e) {
    return {400, error_body(e.field(), e.what())};
  } catch (const EmptyCatalogue& e) {
    return {422, error_body("material/ends", e.what())};
  }
}

SearchService::Reply SearchService::catalogue_summary() const {
  return {200, springsel::catalogue_summary(*catalogue_)};
}

SearchService::Reply SearchService::defaults() const {
  return {200, to_normalized_json(normalize(nlohmann::json::object()))};
}

SearchService::Reply SearchService::health() const {
  return {200, {{"status", "ok"}, {"entries", catalogue_->entries.size()}}};
}

int SearchService::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool SearchService::run() { return server_->listen_after_bind(); }

void SearchService::stop() {
  if (server_) server_->stop();
}

}  // namespace springsel
