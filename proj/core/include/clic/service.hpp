#pragma once

// Request dispatcher behind the HTTP API. Transport-free so the CLI, tests
// and the socket server all drive the same code path.
//
//   POST    /api/v1/evaluate             portfolio (bare or {"portfolio": ...})
//   POST    /api/v1/whatif               {"portfolio", "moves"}
//   GET|PUT /api/v1/registries/delta
//   GET|PUT /api/v1/registries/provider
//   GET     /api/v1/catalog/options
//   GET     /api/v1/health

#include "clic/registry_store.hpp"

#include <string>

namespace clic {

struct HttpRequest {
    std::string method;
    std::string path;
    std::string body;
};

struct HttpResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

class Service {
public:
    explicit Service(RegistryStore& store) : store_(store) {}

    HttpResponse handle(const HttpRequest& request) const;

private:
    RegistryStore& store_;
};

} // namespace clic
