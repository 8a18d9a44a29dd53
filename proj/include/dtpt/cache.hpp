#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

namespace dtpt {

// Disk cache for expensive enumeration results. One JSON file per record,
// named by a hash of the canonical key. A record is only served when its
// stored key and code_version match exactly; unreadable or stale files are
// treated as misses and rewritten.
//
// Directory resolution: DTPT_CACHE_DIR env var if set (empty string
// disables caching), else $HOME/.cache/dtpt. Tests inject their own
// directory through the constructor.
class DiskCache {
public:
    DiskCache();
    explicit DiskCache(std::filesystem::path dir);

    static DiskCache disabled();

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<nlohmann::json> lookup(const nlohmann::json& key) const;
    void store(const nlohmann::json& key, const nlohmann::json& value) const;

    // lookup, else compute + store.
    nlohmann::json get_or_compute(const nlohmann::json& key,
                                  const std::function<nlohmann::json()>& compute) const;

private:
    std::filesystem::path record_path(const nlohmann::json& key) const;

    bool enabled_ = false;
    std::filesystem::path dir_;
};

} // namespace dtpt
