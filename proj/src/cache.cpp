#include "paramodular/cache.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <unistd.h>

namespace paramodular {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "PMCACHE";
constexpr std::string_view kEntrySuffix = ".pmc";
constexpr std::string_view kTempPrefix = ".tmp-";

std::string hex64(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
}

struct ParsedEntry {
    int version = 0;
    std::string key;
    std::string payload;
};

// nullopt when the file is truncated, garbled or fails its checksum
std::optional<ParsedEntry> read_entry(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::istringstream h(header);
    std::string magic, version, key, checksum;
    std::size_t size = 0;
    if (!(h >> magic >> version >> key >> size >> checksum) || magic != kMagic || version.size() < 2 ||
        version[0] != 'v') {
        return std::nullopt;
    }
    ParsedEntry e;
    try {
        e.version = std::stoi(version.substr(1));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    e.key = key;
    e.payload.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (e.payload.size() != size || hex64(fnv1a64(e.payload)) != checksum) return std::nullopt;
    return e;
}

std::string temp_name(const fs::path& final_path) {
    static std::atomic<std::uint64_t> counter{0};
    const auto tid = std::hash<std::thread::id>{}(std::this_thread::get_id());
    return std::string(kTempPrefix) + final_path.filename().string() + "-" + std::to_string(::getpid()) + "-" +
           hex64(tid) + "-" + std::to_string(counter++);
}

}  // namespace

std::string CacheKey::canonical() const {
    return "object=" + object + ";route=" + route + ";tq=" + std::to_string(tq) + ";ts=" + std::to_string(ts) +
           ";format=" + format + ";v=" + std::to_string(format_version);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

TableCache::TableCache(fs::path dir, int format_version) : dir_(std::move(dir)), version_(format_version) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) {
        throw std::invalid_argument("cache directory unusable: " + dir_.string());
    }
}

fs::path TableCache::path_for(const CacheKey& key) const {
    CacheKey k = key;
    k.format_version = version_;
    return dir_ / (hex64(fnv1a64(k.canonical())) + std::string(kEntrySuffix));
}

std::optional<std::string> TableCache::lookup(const CacheKey& key, std::ostream& warn) const {
    CacheKey k = key;
    k.format_version = version_;
    const fs::path p = path_for(k);
    if (!fs::exists(p)) return std::nullopt;
    auto entry = read_entry(p);
    if (!entry) {
        warn << "warning: corrupt cache entry " << p.string() << ", recomputing\n";
        return std::nullopt;
    }
    if (entry->version != version_ || entry->key != k.canonical()) return std::nullopt;
    return std::move(entry->payload);
}

void TableCache::store(const CacheKey& key, std::string_view payload) const {
    CacheKey k = key;
    k.format_version = version_;
    const fs::path final_path = path_for(k);
    const fs::path tmp = dir_ / temp_name(final_path);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << kMagic << " v" << version_ << ' ' << k.canonical() << ' ' << payload.size() << ' '
            << hex64(fnv1a64(payload)) << '\n';
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("cache write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, final_path);
}

CacheStats TableCache::stats() const {
    CacheStats s;
    for (const auto& de : fs::directory_iterator(dir_)) {
        if (!de.is_regular_file()) continue;
        const std::string name = de.path().filename().string();
        if (name.starts_with(kTempPrefix)) {
            ++s.temp_files;
            continue;
        }
        if (!name.ends_with(kEntrySuffix)) continue;
        const auto entry = read_entry(de.path());
        if (!entry) {
            ++s.corrupt;
        } else if (entry->version != version_) {
            ++s.stale;
        } else {
            ++s.entries;
            s.bytes += de.file_size();
        }
    }
    return s;
}

std::size_t TableCache::gc() const {
    std::size_t removed = 0;
    std::vector<fs::path> doomed;
    for (const auto& de : fs::directory_iterator(dir_)) {
        if (!de.is_regular_file()) continue;
        const std::string name = de.path().filename().string();
        if (name.starts_with(kTempPrefix)) {
            doomed.push_back(de.path());
        } else if (name.ends_with(kEntrySuffix)) {
            const auto entry = read_entry(de.path());
            if (!entry || entry->version != version_) doomed.push_back(de.path());
        }
    }
    for (const auto& p : doomed) {
        std::error_code ec;
        if (fs::remove(p, ec)) ++removed;
    }
    return removed;
}

}  // namespace paramodular
