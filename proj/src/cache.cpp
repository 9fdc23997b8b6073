#include "nilorb/cache.hpp"

#include "nilorb/envelope.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

namespace nilorb {

namespace fs = std::filesystem;

namespace {

constexpr const char* kExtension = ".json";
constexpr const char* kPrefix = "nilorb-";

} // namespace

ResultCache::ResultCache(fs::path dir, std::string engine_version, std::ostream& warnings)
    : dir_(std::move(dir)), version_(std::move(engine_version)), warnings_(&warnings)
{
}

fs::path ResultCache::entry_path(Kind kind, int g, int n) const
{
    std::ostringstream name;
    name << kPrefix << version_ << '-' << kind_letter(kind) << "-g" << g << "-n" << n << kExtension;
    return dir_ / name.str();
}

std::optional<CountingPolynomial> ResultCache::load(Kind kind, int g, int n)
{
    const fs::path path = entry_path(kind, g, n);
    std::error_code ec;
    if (!fs::exists(path, ec)) return std::nullopt;
    try {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open");
        const nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("engine_version").get<std::string>() != version_) return std::nullopt;
        CountingPolynomial p = counting_polynomial_from_json(j.at("result"));
        if (p.kind != kind || p.g != g || p.n != n) throw std::runtime_error("entry does not match its key");
        return p;
    } catch (const std::exception& e) {
        *warnings_ << "warning: ignoring unreadable cache entry " << path.string() << " (" << e.what()
                   << "); recomputing\n";
        return std::nullopt;
    }
}

void ResultCache::store(const CountingPolynomial& p)
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
        *warnings_ << "warning: cannot create cache directory " << dir_.string() << ": " << ec.message() << '\n';
        return;
    }
    const fs::path path = entry_path(p.kind, p.g, p.n);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        nlohmann::json j;
        j["engine_version"] = version_;
        j["result"] = to_json(p);
        out << canonical_dump(j) << '\n';
        if (!out) {
            *warnings_ << "warning: failed to write cache entry " << tmp.string() << '\n';
            return;
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) *warnings_ << "warning: failed to publish cache entry " << path.string() << ": " << ec.message() << '\n';
}

std::vector<fs::path> ResultCache::entries() const
{
    std::vector<fs::path> out;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return out;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind(kPrefix, 0) == 0 && entry.path().extension() == kExtension)
            out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ResultCache::clear()
{
    std::size_t removed = 0;
    for (const auto& p : entries()) {
        std::error_code ec;
        if (fs::remove(p, ec)) ++removed;
    }
    return removed;
}

} // namespace nilorb
