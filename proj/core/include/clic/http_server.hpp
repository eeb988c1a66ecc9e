#pragma once

#include "clic/service.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace clic {

struct ServerConfig {
    std::string host = "127.0.0.1";
    int port = 8080; // 0 picks a free port
    std::optional<std::filesystem::path> ui_dir;
};

/// Socket front end for Service. Requests are served on a thread pool;
/// each evaluation is stateless.
class HttpServer {
public:
    HttpServer(const Service& service, ServerConfig config);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds the listening socket and returns the bound port. Throws
    /// ErrorKind::io on bind failure or a missing UI directory.
    int bind();
    /// Blocks serving requests until stop().
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace clic
