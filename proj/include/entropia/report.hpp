// report.hpp
// Named results of one experiment: scalars, (x, y) series and boolean checks.
// Keys are kept in sorted maps so serialisation is byte-stable.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace entropia {

struct ExperimentReport {
    using Series = std::vector<std::pair<double, double>>;

    std::string name;
    std::uint64_t n_limit = 0;
    std::map<std::string, double> scalars;
    std::map<std::string, Series> series;
    std::map<std::string, bool> checks;

    bool all_checks_pass() const;
    double scalar(const std::string& key) const;
    bool check(const std::string& key) const;

    /// Copies scalars/series/checks of `other` under "prefix." keys.
    void merge(const ExperimentReport& other, const std::string& prefix);
};

nlohmann::json to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

/// Two-space indented JSON with a trailing newline.
std::string to_json_string(const ExperimentReport& report);

std::string scalars_csv(const ExperimentReport& report);  // metric,value
std::string checks_csv(const ExperimentReport& report);   // check,passed
std::string series_csv(const ExperimentReport::Series& s); // x,y

/// Writes <dir>/<name>.json, or for CSV <dir>/<name>_scalars.csv,
/// <dir>/<name>_checks.csv and one <dir>/<name>_<series>.csv per series.
/// Returns the paths written.
enum class OutputFormat { csv, json };
std::vector<std::filesystem::path> write_report(const ExperimentReport& report, const std::filesystem::path& dir,
                                                OutputFormat format);

}  // namespace entropia
