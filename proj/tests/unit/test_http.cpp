#include "doctest.h"

#include "fixtures.hpp"

#include "clic/http_server.hpp"

#include "httplib.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <thread>

using namespace clic;
using nlohmann::json;

namespace {

struct Running {
    RegistryStore store;
    Service service{store};
    HttpServer server;
    int port = 0;
    std::thread thread;

    explicit Running(ServerConfig cfg = {}) : server(service, with_any_port(std::move(cfg))) {
        port = server.bind();
        thread = std::thread([this] { server.run(); });
    }
    ~Running() {
        server.stop();
        thread.join();
    }
    httplib::Client client() const {
        httplib::Client c("127.0.0.1", port);
        c.set_read_timeout(10, 0);
        return c;
    }

    static ServerConfig with_any_port(ServerConfig cfg) {
        cfg.port = 0;
        return cfg;
    }
};

} // namespace

TEST_CASE("serves the API over a socket") {
    Running srv;
    auto c = srv.client();
    auto health = c.Get("/api/v1/health");
    REQUIRE(health);
    CHECK(health->status == 200);

    auto eval = c.Post("/api/v1/evaluate", fixtures::read("retail_portfolio.json"), "application/json");
    REQUIRE(eval);
    CHECK(eval->status == 200);
    CHECK(json::parse(eval->body)["groups"][0]["windows"][0]["h_presented"] == 0.29);

    auto missing = c.Get("/api/v1/missing");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto bad = c.Post("/api/v1/evaluate", "{", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 422);
}

TEST_CASE("socket responses match the in-process service") {
    Running srv;
    auto c = srv.client();
    const std::string body = fixtures::read("ecommerce_mixed_portfolio.json");
    auto r = c.Post("/api/v1/evaluate", body, "application/json");
    REQUIRE(r);
    CHECK(r->body == srv.service.handle({"POST", "/api/v1/evaluate", body}).body);
}

TEST_CASE("concurrent evaluations") {
    Running srv;
    const std::string body = fixtures::read("retail_portfolio.json");
    const std::string expected = srv.service.handle({"POST", "/api/v1/evaluate", body}).body;
    std::vector<std::thread> threads;
    std::atomic<int> ok{0};
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&] {
            auto c = srv.client();
            for (int j = 0; j < 5; ++j) {
                auto r = c.Post("/api/v1/evaluate", body, "application/json");
                if (r && r->status == 200 && r->body == expected) ++ok;
            }
        });
    for (auto& t : threads) t.join();
    CHECK(ok == 40);
}

TEST_CASE("serves static UI assets") {
    const auto dir = std::filesystem::temp_directory_path() / "clic_ui_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "index.html") << "<html>board</html>";
    {
        ServerConfig cfg;
        cfg.ui_dir = dir;
        Running srv(cfg);
        auto c = srv.client();
        auto r = c.Get("/index.html");
        REQUIRE(r);
        CHECK(r->status == 200);
        CHECK(r->body == "<html>board</html>");
        auto api = c.Get("/api/v1/health");
        REQUIRE(api);
        CHECK(api->status == 200);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("missing UI directory fails to bind") {
    RegistryStore store;
    Service service(store);
    ServerConfig cfg;
    cfg.port = 0;
    cfg.ui_dir = "/nonexistent/ui";
    HttpServer server(service, cfg);
    try {
        server.bind();
        FAIL("expected io error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::io);
    }
}
