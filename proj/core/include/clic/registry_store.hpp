#pragma once

#include "clic/model.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace clic {

template <class T>
struct Snapshot {
    std::shared_ptr<const T> value;
    std::uint64_t revision = 0;
};

/// Holds the live industry registry and provider profile for the service.
/// Single writer, many readers: reads return immutable snapshots, writes are
/// validated (and persisted when file-backed) before the swap, so a failed
/// write leaves the prior value untouched.
class RegistryStore {
public:
    struct Paths {
        std::optional<std::filesystem::path> delta;
        std::optional<std::filesystem::path> provider;
    };

    RegistryStore();
    RegistryStore(IndustryRegistry registry, ProviderProfile provider, Paths paths = {});

    Snapshot<IndustryRegistry> delta() const;
    Snapshot<ProviderProfile> provider() const;

    /// Throws validation for an invalid registry, conflict when
    /// `expected_revision` is given and stale, io when persisting fails.
    std::uint64_t put_delta(IndustryRegistry registry, std::optional<std::uint64_t> expected_revision = {});
    std::uint64_t put_provider(ProviderProfile provider, std::optional<std::uint64_t> expected_revision = {});

private:
    mutable std::shared_mutex mutex_;
    std::mutex write_mutex_;
    Snapshot<IndustryRegistry> delta_;
    Snapshot<ProviderProfile> provider_;
    Paths paths_;
};

} // namespace clic
