#include "pcert/mpoly/cache.hpp"

#include "pcert/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace fs = std::filesystem;

namespace pcert {

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskCache::default_dir()
{
    if (const char* env = std::getenv("PCERT_CACHE_DIR"); env && *env) {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return fs::path(xdg) / "pcert";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return fs::path(home) / ".cache" / "pcert";
    }
    return fs::temp_directory_path() / "pcert-cache";
}

fs::path DiskCache::path_for(std::string_view key) const
{
    std::string name;
    for (char c : key) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
        name += ok ? c : '_';
    }
    return dir_ / (name + ".txt");
}

std::optional<std::string> DiskCache::load(std::string_view key) const
{
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void DiskCache::store(std::string_view key, std::string_view content) const
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
        throw Error(Errc::CacheError, "cannot create cache directory " + dir_.string() + ": " + ec.message());
    }
    const fs::path target = path_for(key);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(Errc::CacheError, "cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw Error(Errc::CacheError, "short write to " + tmp.string());
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        throw Error(Errc::CacheError, "cannot publish " + target.string() + ": " + ec.message());
    }
}

std::vector<std::string> DiskCache::keys() const
{
    std::vector<std::string> out;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) {
        return out;
    }
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (entry.path().extension() == ".txt") {
            out.push_back(entry.path().stem().string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t DiskCache::clear() const
{
    std::size_t removed = 0;
    for (const auto& k : keys()) {
        std::error_code ec;
        if (fs::remove(path_for(k), ec)) {
            ++removed;
        }
    }
    return removed;
}

} // namespace pcert
