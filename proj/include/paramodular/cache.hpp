#pragma once

// On-disk cache of serialized coefficient tables. One file per key, named by
// a hash of the key; entries are written to a temporary file and renamed into
// place, so readers see either a complete entry or none.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace paramodular {

inline constexpr int kCacheFormatVersion = 1;

struct CacheKey {
    std::string object;
    std::string route;
    std::int64_t tq = 0;
    std::int64_t ts = 0;
    std::string format;
    int format_version = kCacheFormatVersion;

    std::string canonical() const;
};

std::uint64_t fnv1a64(std::string_view bytes);

struct CacheStats {
    std::size_t entries = 0;  // valid entries of the current format version
    std::size_t stale = 0;    // other format versions
    std::size_t corrupt = 0;
    std::size_t temp_files = 0;
    std::uintmax_t bytes = 0;
};

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir, int format_version = kCacheFormatVersion);

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path path_for(const CacheKey& key) const;

    /// Cached payload, or nullopt on a miss. A damaged entry is reported on
    /// `warn` and treated as a miss.
    std::optional<std::string> lookup(const CacheKey& key, std::ostream& warn) const;

    /// Atomic write-temp-then-rename; concurrent writers of one key leave the
    /// last complete entry.
    void store(const CacheKey& key, std::string_view payload) const;

    CacheStats stats() const;

    /// Removes stale, corrupt and leftover temporary files; returns the count removed.
    std::size_t gc() const;

private:
    std::filesystem::path dir_;
    int version_;
};

}  // namespace paramodular
