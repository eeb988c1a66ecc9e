#include "clic/http_server.hpp"

#include "httplib.h"

namespace clic {

struct HttpServer::Impl {
    Impl(const Service& s, ServerConfig c) : service(s), config(std::move(c)) {}
    const Service& service;
    ServerConfig config;
    httplib::Server server;
};

namespace {

void forward(const Service& service, const std::string& method, const httplib::Request& req,
             httplib::Response& res) {
    const HttpResponse out = service.handle({method, req.path, req.body});
    res.status = out.status;
    res.set_content(out.body, out.content_type);
}

} // namespace

HttpServer::HttpServer(const Service& service, ServerConfig config)
    : impl_(std::make_unique<Impl>(service, std::move(config))) {
    auto& svr = impl_->server;
    const Service& s = impl_->service;
    const std::string api = R"(/api/.*)";
    svr.Get(api, [&s](const httplib::Request& req, httplib::Response& res) { forward(s, "GET", req, res); });
    svr.Post(api, [&s](const httplib::Request& req, httplib::Response& res) { forward(s, "POST", req, res); });
    svr.Put(api, [&s](const httplib::Request& req, httplib::Response& res) { forward(s, "PUT", req, res); });
    svr.Delete(api, [&s](const httplib::Request& req, httplib::Response& res) { forward(s, "DELETE", req, res); });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
    auto& cfg = impl_->config;
    if (cfg.ui_dir) {
        if (!impl_->server.set_mount_point("/", cfg.ui_dir->string()))
            throw Error(ErrorKind::io, "UI directory not found: " + cfg.ui_dir->string());
    }
    int port = cfg.port;
    if (port == 0) {
        port = impl_->server.bind_to_any_port(cfg.host);
        if (port < 0) throw Error(ErrorKind::io, "cannot bind " + cfg.host);
    } else if (!impl_->server.bind_to_port(cfg.host, port)) {
        throw Error(ErrorKind::io, "cannot bind " + cfg.host + ":" + std::to_string(port));
    }
    cfg.port = port;
    return port;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

} // namespace clic
