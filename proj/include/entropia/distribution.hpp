// distribution.hpp
// Finite probability vectors over labelled symbols and the information
// measures defined on them.
#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace entropia {

inline constexpr double kNormalizationTolerance = 1e-9;
inline constexpr double kEntropyTolerance = 1e-6;

class Distribution {
public:
    /// Probabilities must be >= 0 and sum to 1 within 1e-9; labels unique.
    Distribution(std::vector<std::string> labels, std::vector<double> probs);

    /// Normalises non-negative weights with a positive total.
    static Distribution from_weights(std::vector<std::string> labels, const std::vector<double>& weights);

    /// Labels "0", "1", ... for anonymous alphabets.
    static Distribution from_weights(const std::vector<double>& weights);

    std::size_t size() const { return probs_.size(); }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<std::string>& labels() const { return labels_; }
    double prob(std::size_t i) const { return probs_[i]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    /// Index of a label; DomainError if absent.
    std::size_t index_of(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<double> probs_;
};

/// -sum p log_base p, with 0 log 0 = 0.
double entropy(const Distribution& dist, double base = 2.0);

/// Entropy in bits of a two-outcome split.
double binary_entropy(double p);

/// D(p || q) in the given base; labels are matched by name.
/// DomainError if the label sets differ or q_i = 0 where p_i > 0.
double kl_divergence(const Distribution& p, const Distribution& q, double base = 2.0);

/// CSV with header `symbol,weight` (`label,weight` also accepted). Weights are normalised.
Distribution read_distribution_csv(std::istream& in);
Distribution read_distribution_csv(const std::filesystem::path& path);

}  // namespace entropia
