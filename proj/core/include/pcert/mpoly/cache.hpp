#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcert {

// Flat directory of text blobs keyed by name. Writes go through a temporary
// file and a rename, so readers never see partial entries.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    // $PCERT_CACHE_DIR, else $XDG_CACHE_HOME/pcert, else ~/.cache/pcert.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::optional<std::string> load(std::string_view key) const;
    // Throws Error(CacheError) when the directory is not writable.
    void store(std::string_view key, std::string_view content) const;
    std::vector<std::string> keys() const;
    std::size_t clear() const;

private:
    std::filesystem::path path_for(std::string_view key) const;
    std::filesystem::path dir_;
};

} // namespace pcert
