#include "entropia/report.hpp"

#include <fstream>
#include <sstream>

#include "entropia/error.hpp"
#include "entropia/format.hpp"

namespace entropia {

bool ExperimentReport::all_checks_pass() const {
    for (const auto& [_, ok] : checks)
        if (!ok) return false;
    return true;
}

double ExperimentReport::scalar(const std::string& key) const {
    auto it = scalars.find(key);
    if (it == scalars.end()) throw DomainError("report '" + name + "' has no scalar '" + key + "'");
    return it->second;
}

bool ExperimentReport::check(const std::string& key) const {
    auto it = checks.find(key);
    if (it == checks.end()) throw DomainError("report '" + name + "' has no check '" + key + "'");
    return it->second;
}

void ExperimentReport::merge(const ExperimentReport& other, const std::string& prefix) {
    for (const auto& [k, v] : other.scalars) scalars[prefix + "." + k] = v;
    for (const auto& [k, v] : other.series) series[prefix + "." + k] = v;
    for (const auto& [k, v] : other.checks) checks[prefix + "." + k] = v;
}

nlohmann::json to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["name"] = report.name;
    j["n_limit"] = report.n_limit;
    j["scalars"] = nlohmann::json::object();
    for (const auto& [k, v] : report.scalars) j["scalars"][k] = v;
    j["series"] = nlohmann::json::object();
    for (const auto& [k, pts] : report.series) {
        auto arr = nlohmann::json::array();
        for (const auto& [x, y] : pts) arr.push_back({x, y});
        j["series"][k] = std::move(arr);
    }
    j["checks"] = nlohmann::json::object();
    for (const auto& [k, v] : report.checks) j["checks"][k] = v;
    return j;
}

ExperimentReport report_from_json(const nlohmann::json& j) {
    ExperimentReport r;
    r.name = j.at("name").get<std::string>();
    r.n_limit = j.at("n_limit").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("scalars").items()) r.scalars[k] = v.get<double>();
    for (const auto& [k, pts] : j.at("series").items()) {
        auto& s = r.series[k];
        for (const auto& p : pts) s.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    for (const auto& [k, v] : j.at("checks").items()) r.checks[k] = v.get<bool>();
    return r;
}

std::string to_json_string(const ExperimentReport& report) { return to_json(report).dump(2) + "\n"; }

std::string scalars_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "metric,value\n";
    for (const auto& [k, v] : report.scalars) out << k << ',' << format_double(v) << '\n';
    return out.str();
}

std::string checks_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "check,passed\n";
    for (const auto& [k, v] : report.checks) out << k << ',' << (v ? "true" : "false") << '\n';
    return out.str();
}

std::string series_csv(const ExperimentReport::Series& s) {
    std::ostringstream out;
    out << "x,y\n";
    for (const auto& [x, y] : s) out << format_double(x) << ',' << format_double(y) << '\n';
    return out.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace

std::vector<std::filesystem::path> write_report(const ExperimentReport& report, const std::filesystem::path& dir,
                                                OutputFormat format) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto emit = [&](const std::string& file, const std::string& text) {
        written.push_back(dir / file);
        write_file(written.back(), text);
    };
    if (format == OutputFormat::json) {
        emit(report.name + ".json", to_json_string(report));
        return written;
    }
    emit(report.name + "_scalars.csv", scalars_csv(report));
    emit(report.name + "_checks.csv", checks_csv(report));
    for (const auto& [k, s] : report.series) emit(report.name + "_" + k + ".csv", series_csv(s));
    return written;
}

}  // namespace entropia
