#include "entropia/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "entropia/compensated_sum.hpp"
#include "entropia/error.hpp"

namespace entropia {

Distribution::Distribution(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
    if (probs_.empty()) throw DomainError("distribution is empty");
    if (labels_.size() != probs_.size()) throw DomainError("distribution labels and probabilities differ in length");
    std::unordered_set<std::string> seen;
    CompensatedSum total;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (!(probs_[i] >= 0.0) || !std::isfinite(probs_[i]))
            throw DomainError("probability of '" + labels_[i] + "' is negative or not finite");
        if (!seen.insert(labels_[i]).second) throw DomainError("duplicate label '" + labels_[i] + "'");
        total += probs_[i];
    }
    if (std::fabs(total.value() - 1.0) > kNormalizationTolerance)
        throw DomainError("probabilities sum to " + std::to_string(total.value()) + ", not 1");
}

Distribution Distribution::from_weights(std::vector<std::string> labels, const std::vector<double>& weights) {
    CompensatedSum total;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("weights must be finite and non-negative");
        total += w;
    }
    if (!(total.value() > 0.0)) throw DomainError("weights must have a positive total");
    std::vector<double> probs;
    probs.reserve(weights.size());
    for (double w : weights) probs.push_back(w / total.value());
    return Distribution(std::move(labels), std::move(probs));
}

Distribution Distribution::from_weights(const std::vector<double>& weights) {
    std::vector<std::string> labels;
    labels.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) labels.push_back(std::to_string(i));
    return from_weights(std::move(labels), weights);
}

std::size_t Distribution::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw DomainError("unknown label '" + label + "'");
}

double entropy(const Distribution& dist, double base) {
    if (!(base > 1.0)) throw DomainError("entropy base must be > 1");
    CompensatedSum sum;
    for (double p : dist.probs())
        if (p > 0.0) sum += -p * std::log(p);
    return sum.value() / std::log(base);
}

double binary_entropy(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double kl_divergence(const Distribution& p, const Distribution& q, double base) {
    if (!(base > 1.0)) throw DomainError("divergence base must be > 1");
    if (p.size() != q.size()) throw DomainError("KL divergence needs identical label sets");
    std::unordered_map<std::string, double> qmap;
    for (std::size_t i = 0; i < q.size(); ++i) qmap.emplace(q.label(i), q.prob(i));
    CompensatedSum sum;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto it = qmap.find(p.label(i));
        if (it == qmap.end()) throw DomainError("label '" + p.label(i) + "' missing from q");
        const double pi = p.prob(i);
        if (pi == 0.0) continue;
        if (it->second == 0.0) throw DomainError("q has zero mass where p does not ('" + p.label(i) + "')");
        sum += pi * std::log(pi / it->second);
    }
    return std::max(0.0, sum.value() / std::log(base));
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Distribution read_distribution_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("distribution CSV is empty");
    const auto header = trim(line);
    if (header != "symbol,weight" && header != "label,weight")
        throw DomainError("distribution CSV must start with header 'symbol,weight'");
    std::vector<std::string> labels;
    std::vector<double> weights;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto comma = line.rfind(',');
        if (comma == std::string::npos) throw DomainError("line " + std::to_string(lineno) + ": expected 'symbol,weight'");
        labels.push_back(trim(line.substr(0, comma)));
        const auto field = trim(line.substr(comma + 1));
        std::size_t used = 0;
        double w = 0.0;
        try {
            w = std::stod(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != field.size())
            throw DomainError("line " + std::to_string(lineno) + ": bad weight '" + field + "'");
        weights.push_back(w);
    }
    if (labels.empty()) throw DomainError("distribution CSV has no rows");
    return Distribution::from_weights(std::move(labels), weights);
}

Distribution read_distribution_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open distribution file " + path.string());
    return read_distribution_csv(in);
}

}  // namespace entropia
