#include "qmac/cache.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qmac/jsonio.hpp"

namespace qmac {

namespace {

constexpr const char* kLibraryVersion = "0.1.0";

// FNV-1a, stable across runs and platforms
std::string content_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

nlohmann::ordered_json manifest_json(const std::vector<int>& betas, int t,
                                     const std::vector<int>& wcaps) {
    return {{"operation", "expand_F"},
            {"version", kLibraryVersion},
            {"betas", betas},
            {"t", t},
            {"wcaps", wcaps}};
}

bool read_file(const std::filesystem::path& p, std::string& out) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return false;
    std::ostringstream os;
    os << in.rdbuf();
    out = os.str();
    return static_cast<bool>(in);
}

bool write_file(const std::filesystem::path& p, const std::string& data) {
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return false;
        out << data;
        if (!out) return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, p, ec);
    return !ec;
}

}  // namespace

std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("QMAC_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "qmac";
    return std::filesystem::temp_directory_path() / "qmac-cache";
}

LaurentPoly expand_F_cached(const std::vector<int>& betas, int t,
                            const std::vector<int>& wcaps) {
    nlohmann::ordered_json manifest = manifest_json(betas, t, wcaps);
    std::string key = manifest.dump();
    std::filesystem::path dir = cache_dir();
    std::string hash = content_hash(key);
    std::filesystem::path result_path = dir / (hash + ".json");
    std::filesystem::path manifest_path = dir / (hash + ".manifest.json");

    std::string stored;
    if (read_file(manifest_path, stored) && stored == key) {
        std::string body;
        if (read_file(result_path, body)) {
            try {
                return laurent_from_json(body);
            } catch (const std::exception&) {
                // fall through to recompute on a corrupt entry
            }
        }
    }

    LaurentPoly result = expand_F(betas, t, wcaps);

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec && write_file(result_path, laurent_to_json(result)))
        write_file(manifest_path, key);
    return result;
}

}  // namespace qmac
