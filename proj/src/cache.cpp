#include "dtpt/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "dtpt/version.hpp"

namespace dtpt {

namespace fs = std::filesystem;

DiskCache::DiskCache() {
    const char* env = std::getenv("DTPT_CACHE_DIR");
    if (env != nullptr) {
        if (env[0] == '\0') return; // explicitly disabled
        dir_ = env;
        enabled_ = true;
        return;
    }
    const char* home = std::getenv("HOME");
    if (home == nullptr || home[0] == '\0') return;
    dir_ = fs::path(home) / ".cache" / "dtpt";
    enabled_ = true;
}

DiskCache::DiskCache(fs::path dir) : enabled_(true), dir_(std::move(dir)) {}

DiskCache DiskCache::disabled() {
    DiskCache c((fs::path()));
    c.enabled_ = false;
    return c;
}

fs::path DiskCache::record_path(const nlohmann::json& key) const {
    size_t h = std::hash<std::string>{}(key.dump());
    char name[32];
    std::snprintf(name, sizeof(name), "%016zx.json", h);
    return dir_ / name;
}

std::optional<nlohmann::json> DiskCache::lookup(const nlohmann::json& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(record_path(key));
    if (!in) return std::nullopt;
    nlohmann::json rec = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    // Any corruption, hash collision or version drift is just a miss.
    if (rec.is_discarded() || !rec.is_object()) return std::nullopt;
    if (rec.value("code_version", "") != kCodeVersion) return std::nullopt;
    if (!rec.contains("key") || rec["key"] != key) return std::nullopt;
    if (!rec.contains("value")) return std::nullopt;
    return rec["value"];
}

void DiskCache::store(const nlohmann::json& key, const nlohmann::json& value) const {
    if (!enabled_) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return; // caching is best-effort
    nlohmann::json rec{{"key", key}, {"value", value}, {"code_version", kCodeVersion}};
    fs::path tmp = record_path(key);
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << rec.dump();
    }
    fs::rename(tmp, record_path(key), ec);
}

nlohmann::json DiskCache::get_or_compute(const nlohmann::json& key,
                                         const std::function<nlohmann::json()>& compute) const {
    if (auto hit = lookup(key)) return *hit;
    nlohmann::json value = compute();
    store(key, value);
    return value;
}

} // namespace dtpt
