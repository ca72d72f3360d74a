#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <json.hpp>

namespace gramdet {

// Content-addressed on-disk result cache: one JSON file per key, named by a
// 64-bit FNV-1a hash of the key string. The stored record repeats the full
// key, so hash collisions and corrupt files are detected and simply miss.
// Writes go through a temp file and rename, so concurrent writers are safe.
class result_cache {
public:
    explicit result_cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::filesystem::path resolve_dir(const std::string& flag_value) {
        if (!flag_value.empty()) return flag_value;
        if (const char* env = std::getenv("GRAMDET_CACHE_DIR")) return env;
        return ".gramdet-cache";
    }

    std::filesystem::path path_for(const std::string& key) const {
        return dir_ / (hash_hex(key) + ".json");
    }

    std::optional<nlohmann::json> load(const std::string& key, std::string* warning = nullptr) const {
        auto file = path_for(key);
        std::error_code ec;
        if (!std::filesystem::exists(file, ec)) return std::nullopt;
        std::ifstream in(file);
        if (!in) return std::nullopt;
        nlohmann::json record = nlohmann::json::parse(in, nullptr, false);
        if (record.is_discarded() || !record.is_object() || record.value("key", "") != key) {
            if (warning) *warning = "cache file " + file.string() + " is corrupt or mismatched; recomputing";
            return std::nullopt;
        }
        if (!record.contains("value")) {
            if (warning) *warning = "cache file " + file.string() + " has no value; recomputing";
            return std::nullopt;
        }
        return record["value"];
    }

    void store(const std::string& key, const nlohmann::json& value) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        nlohmann::json record;
        record["key"] = key;
        record["value"] = value;
        auto file = path_for(key);
        auto tmp = file;
        tmp += ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << record.dump();
        }
        std::filesystem::rename(tmp, file, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;

    static std::string hash_hex(const std::string& key) {
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : key) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

}  // namespace gramdet
