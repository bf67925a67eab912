#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "springsel/catalogue.hpp"

namespace httplib {
class Server;
}

namespace springsel {

/// HTTP front end over one immutable catalogue. Handlers are stateless, so
/// concurrent requests never interact.
class SearchService {
 public:
  struct Reply {
    int status = 200;
    nlohmann::json body;
  };

  explicit SearchService(Catalogue catalogue);
  ~SearchService();
  SearchService(const SearchService&) = delete;
  SearchService& operator=(const SearchService&) = delete;

  Reply search(std::string_view body) const;
  Reply catalogue_summary() const;
  Reply defaults() const;
  Reply health() const;

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  bool run();
  void stop();

 private:
  std::shared_ptr<const Catalogue> catalogue_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace springsel
