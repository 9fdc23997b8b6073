#pragma once

#include "nilorb/pipeline.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nilorb {

/// On-disk store of finished counting polynomials, one JSON file per
/// (engine version, kind, g, n). Entries from another engine version are
/// ignored; unreadable entries produce a warning and count as a miss.
class ResultCache {
public:
    ResultCache(std::filesystem::path dir, std::string engine_version, std::ostream& warnings);

    std::optional<CountingPolynomial> load(Kind kind, int g, int n);
    /// Write-temp-then-rename, so readers never see a partial file.
    void store(const CountingPolynomial& p);

    std::filesystem::path entry_path(Kind kind, int g, int n) const;
    std::vector<std::filesystem::path> entries() const;
    /// Removes every cache entry (all versions); returns how many were removed.
    std::size_t clear();

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::string version_;
    std::ostream* warnings_;
};

} // namespace nilorb
