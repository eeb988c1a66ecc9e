#include "clic/registry_store.hpp"

#include "clic/io.hpp"

#include <mutex>

namespace clic {

namespace {

void check_revision(std::optional<std::uint64_t> expected, std::uint64_t current, const char* what) {
    if (expected && *expected != current)
        throw Error(ErrorKind::conflict, std::string(what) + " revision " + std::to_string(*expected) +
                                             " is stale (current " + std::to_string(current) + ")");
}

} // namespace

RegistryStore::RegistryStore() : RegistryStore(IndustryRegistry::defaults(), ProviderProfile::defaults()) {}

RegistryStore::RegistryStore(IndustryRegistry registry, ProviderProfile provider, Paths paths)
    : paths_(std::move(paths)) {
    throw_if_errors(validate_registry(registry), "industry registry");
    throw_if_errors(validate_provider(provider), "provider profile");
    delta_ = {std::make_shared<const IndustryRegistry>(std::move(registry)), 1};
    provider_ = {std::make_shared<const ProviderProfile>(std::move(provider)), 1};
}

Snapshot<IndustryRegistry> RegistryStore::delta() const {
    std::shared_lock lock(mutex_);
    return delta_;
}

Snapshot<ProviderProfile> RegistryStore::provider() const {
    std::shared_lock lock(mutex_);
    return provider_;
}

std::uint64_t RegistryStore::put_delta(IndustryRegistry registry, std::optional<std::uint64_t> expected_revision) {
    std::lock_guard writer(write_mutex_);
    throw_if_errors(validate_registry(registry), "industry registry");
    if (registry.empty())
        throw Error(ErrorKind::validation, "industry registry must hold at least one entry", "/entries");
    check_revision(expected_revision, delta().revision, "delta registry");
    if (paths_.delta) write_file_atomic(*paths_.delta, save_registry(registry));

    std::unique_lock lock(mutex_);
    delta_ = {std::make_shared<const IndustryRegistry>(std::move(registry)), delta_.revision + 1};
    return delta_.revision;
}

std::uint64_t RegistryStore::put_provider(ProviderProfile provider, std::optional<std::uint64_t> expected_revision) {
    std::lock_guard writer(write_mutex_);
    throw_if_errors(validate_provider(provider), "provider profile");
    check_revision(expected_revision, this->provider().revision, "provider profile");
    if (paths_.provider) write_file_atomic(*paths_.provider, save_provider(provider));

    std::unique_lock lock(mutex_);
    provider_ = {std::make_shared<const ProviderProfile>(std::move(provider)), provider_.revision + 1};
    return provider_.revision;
}

} // namespace clic
