#include "doctest.h"

#include "clic/io.hpp"
#include "clic/registry_store.hpp"

#include <atomic>
#include <filesystem>
#include <thread>

using namespace clic;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "clic_store_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal;
}

} // namespace

TEST_CASE("defaults") {
    RegistryStore s;
    CHECK(*s.delta().value == IndustryRegistry::defaults());
    CHECK(*s.provider().value == ProviderProfile::defaults());
    CHECK(s.delta().revision == 1);
}

TEST_CASE("put bumps the revision and keeps old snapshots alive") {
    RegistryStore s;
    const auto before = s.delta();
    auto next = IndustryRegistry::defaults();
    next.set("mining", 7);
    const auto rev = s.put_delta(next);
    CHECK(rev == before.revision + 1);
    CHECK(s.delta().value->delta_w("mining") == 7);
    CHECK_FALSE(before.value->find("mining"));
}

TEST_CASE("failed writes leave the prior value intact") {
    RegistryStore s;
    const auto before = s.delta();
    CHECK(kind_of([&] { s.put_delta(IndustryRegistry({{"retail", -1.0}})); }) == ErrorKind::validation);
    CHECK(kind_of([&] { s.put_delta(IndustryRegistry{}); }) == ErrorKind::validation);
    CHECK(*s.delta().value == *before.value);
    CHECK(s.delta().revision == before.revision);

    ProviderProfile bad = ProviderProfile::defaults();
    bad.k = 0;
    CHECK(kind_of([&] { s.put_provider(bad); }) == ErrorKind::validation);
    CHECK(*s.provider().value == ProviderProfile::defaults());
}

TEST_CASE("stale revision is a conflict") {
    RegistryStore s;
    const auto rev = s.delta().revision;
    s.put_delta(IndustryRegistry::defaults(), rev);
    CHECK(kind_of([&] { s.put_delta(IndustryRegistry::defaults(), rev); }) == ErrorKind::conflict);
    CHECK(s.delta().revision == rev + 1);
}

TEST_CASE("file-backed store persists accepted writes only") {
    const auto file = scratch("delta.json");
    write_file_atomic(file, save_registry(IndustryRegistry::defaults()));
    RegistryStore s(IndustryRegistry::defaults(), ProviderProfile::defaults(), {file, std::nullopt});
    auto next = IndustryRegistry::defaults();
    next.set("retail", 11);
    s.put_delta(next);
    CHECK(load_registry(read_file(file)).delta_w("retail") == 11);
    CHECK_THROWS_AS(s.put_delta(IndustryRegistry({{"retail", 0.0}})), Error);
    CHECK(load_registry(read_file(file)).delta_w("retail") == 11);
    std::filesystem::remove_all(file.parent_path());
}

TEST_CASE("unwritable persistence path is an io error and keeps the old value") {
    RegistryStore s(IndustryRegistry::defaults(), ProviderProfile::defaults(),
                    {std::filesystem::path("/nonexistent/dir/delta.json"), std::nullopt});
    auto next = IndustryRegistry::defaults();
    next.set("retail", 11);
    CHECK(kind_of([&] { s.put_delta(next); }) == ErrorKind::io);
    CHECK(s.delta().value->delta_w("retail") == 10);
}

TEST_CASE("concurrent readers see whole snapshots") {
    RegistryStore s;
    std::atomic<bool> stop{false};
    std::atomic<int> torn{0};
    std::vector<std::thread> readers;
    for (int i = 0; i < 4; ++i)
        readers.emplace_back([&] {
            while (!stop) {
                const auto snap = s.delta();
                const auto r = snap.value->delta_w("retail");
                const auto f = snap.value->delta_w("finance");
                if (r - 4 != f) ++torn;
            }
        });
    for (int v = 0; v < 200; ++v) {
        auto next = IndustryRegistry::defaults();
        next.set("retail", 10 + v);
        next.set("finance", 6 + v);
        s.put_delta(next);
    }
    stop = true;
    for (auto& t : readers) t.join();
    CHECK(torn == 0);
    CHECK(s.delta().revision == 201);
}
