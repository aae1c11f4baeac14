#pragma once

#include <optional>
#include <string>

namespace bsmg {

inline constexpr const char* kToolVersion = "bsmg-0.1.0";

// Content-addressed file cache. Entries are keyed by a digest of the
// semantic inputs plus the tool version; the key string is stored inside
// the entry and compared on read, so digest collisions and stale versions
// degrade to cache misses. Writes go through a temp file and an atomic
// rename, so concurrent writers are safe (identical content, last wins).
class ResultCache {
public:
    explicit ResultCache(std::string directory);

    const std::string& directory() const { return dir_; }

    // Returns the stored JSON text, or nullopt on miss/corruption.
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& json_text) const;

private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

std::string cache_digest(const std::string& key);

} // namespace bsmg
