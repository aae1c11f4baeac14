#include "bsmg/cache.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bsmg/errors.hpp"

namespace bsmg {

namespace fs = std::filesystem;

std::string cache_digest(const std::string& key) {
    // FNV-1a under two offsets; the full key is verified on read anyway.
    auto fnv = [&](std::uint64_t h) {
        for (unsigned char c : key) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    };
    std::ostringstream out;
    out << std::hex << fnv(14695981039346656037ull) << fnv(88172645463325252ull);
    return out.str();
}

ResultCache::ResultCache(std::string directory) : dir_(std::move(directory)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec)
        throw CacheError("cannot create cache directory " + dir_ + ": " + ec.message());
}

std::string ResultCache::path_for(const std::string& key) const {
    return (fs::path(dir_) / (cache_digest(key) + ".json")).string();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    if (header != key) return std::nullopt; // collision or version mismatch
    std::ostringstream body;
    body << in.rdbuf();
    std::string text = body.str();
    if (text.empty()) return std::nullopt;
    return text;
}

void ResultCache::put(const std::string& key, const std::string& json_text) const {
    static std::mt19937_64 rng(std::random_device{}());
    fs::path target = path_for(key);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp);
        if (!out)
            throw CacheError("cannot write cache entry " + tmp.string());
        out << key << "\n" << json_text;
        if (!out)
            throw CacheError("short write on cache entry " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw CacheError("cannot publish cache entry: " + ec.message());
    }
}

} // namespace bsmg
