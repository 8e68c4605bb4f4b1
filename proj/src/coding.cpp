#include "entropia/coding.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "entropia/compensated_sum.hpp"
#include "entropia/error.hpp"
#include "entropia/huffman.hpp"
#include "entropia/rng.hpp"

namespace entropia {

ExperimentReport source_coding_trial(const Distribution& dist, std::uint64_t n, std::uint64_t seed) {
    if (n < 1) throw DomainError("source coding trial needs n >= 1");
    const auto code = huffman_build(dist);

    std::vector<double> cumulative(dist.size());
    CompensatedSum acc;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist.prob(i);
        cumulative[i] = acc.value();
    }
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist.prob(i) > 0.0) last_positive = i;
    Rng rng(seed);
    std::vector<std::uint32_t> symbols(n);
    for (auto& s : symbols) {
        const double u = rng.uniform();
        auto idx = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        if (idx == dist.size()) idx = last_positive;  // u above the rounded total
        s = static_cast<std::uint32_t>(idx);
    }

    const auto stream = encode(code.book, symbols);
    const bool roundtrip = decode(code.tree, stream) == symbols;

    const double bps = static_cast<double>(stream.size()) / static_cast<double>(n);
    const auto expected = expected_code_length(code.book);

    ExperimentReport r;
    r.name = "source_coding";
    r.n_limit = n;
    r.scalars["bits_per_symbol"] = bps;
    r.scalars["entropy_bits"] = expected.entropy;
    r.scalars["expected_code_length"] = expected.length;
    r.scalars["total_bits"] = static_cast<double>(stream.size());
    r.scalars["symbols"] = static_cast<double>(n);
    r.checks["entropy_bound"] = expected.within_bound;
    r.checks["rate_consistent"] =
        std::abs(bps - expected.length) <= kRateSigmas * expected.stddev / std::sqrt(static_cast<double>(n));
    r.checks["roundtrip"] = roundtrip;
    return r;
}

namespace {

void check_length(unsigned n) {
    if (n < 1 || n > 20) throw DomainError("census string length must be in [1, 20]");
}

void check_census_args(std::size_t entries, unsigned n, unsigned c) {
    check_length(n);
    if (c >= n) throw DomainError("census constant c must be < n");
    if (entries != (std::size_t{1} << n)) throw DomainError("code must cover all 2^n strings of length n");
}

std::string bits_of(std::uint64_t value, unsigned n) {
    std::string s(n, '0');
    for (unsigned i = 0; i < n; ++i)
        if ((value >> (n - 1 - i)) & 1) s[i] = '1';
    return s;
}

double log2_probability(const std::string& s, double p_one) {
    double lp = 0.0;
    for (char ch : s) lp += ch == '1' ? std::log2(p_one) : std::log2(1.0 - p_one);
    return lp;
}

}  // namespace

double incompressibility_census(const std::map<std::string, std::string>& codes, unsigned n, unsigned c) {
    check_census_args(codes.size(), n, c);
    std::unordered_set<std::string> seen;
    std::size_t short_count = 0;
    for (const auto& [x, code] : codes) {
        if (x.size() != n || x.find_first_not_of("01") != std::string::npos)
            throw DomainError("census key '" + x + "' is not a length-n binary string");
        if (code.find_first_not_of("01") != std::string::npos) throw DomainError("codeword is not binary");
        if (!seen.insert(code).second) throw DomainError("code is not injective: '" + code + "' is reused");
        if (code.size() < n - c) ++short_count;
    }
    return static_cast<double>(short_count) / static_cast<double>(codes.size());
}

double incompressibility_census(const std::map<std::string, unsigned>& code_lengths, unsigned n, unsigned c) {
    check_census_args(code_lengths.size(), n, c);
    std::map<unsigned, std::uint64_t> by_length;
    std::size_t short_count = 0;
    for (const auto& [x, len] : code_lengths) {
        if (x.size() != n || x.find_first_not_of("01") != std::string::npos)
            throw DomainError("census key '" + x + "' is not a length-n binary string");
        ++by_length[len];
        if (len < n - c) ++short_count;
    }
    std::uint64_t cumulative = 0;
    for (const auto& [len, count] : by_length) {
        cumulative += count;
        if (len < 63 && cumulative > (std::uint64_t{2} << len) - 1)
            throw DomainError("code lengths cannot belong to an injective code");
    }
    return static_cast<double>(short_count) / static_cast<double>(code_lengths.size());
}

std::map<std::string, std::string> identity_code(unsigned n) {
    check_length(n);
    std::map<std::string, std::string> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        auto s = bits_of(v, n);
        out.emplace(s, s);
    }
    return out;
}

std::map<std::string, std::string> shannon_fano_elias_code(unsigned n, double p_one) {
    check_length(n);
    if (!(p_one > 0.0 && p_one < 1.0)) throw DomainError("Bernoulli parameter must be in (0, 1)");
    std::map<std::string, std::string> out;
    // lexicographic order of strings = numeric order of their bit values
    long double cumulative = 0.0L;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const auto x = bits_of(v, n);
        const long double px = std::exp2(static_cast<long double>(log2_probability(x, p_one)));
        const long double mid = cumulative + px / 2.0L;
        const auto len = static_cast<unsigned>(std::ceil(-std::log2(static_cast<double>(px)))) + 1;
        std::string code;
        long double frac = mid;
        for (unsigned i = 0; i < len; ++i) {
            frac *= 2.0L;
            const bool bit = frac >= 1.0L;
            code.push_back(bit ? '1' : '0');
            if (bit) frac -= 1.0L;
        }
        out.emplace(x, std::move(code));
        cumulative += px;
    }
    return out;
}

std::map<std::string, std::string> enumeration_code(unsigned n, double p_one) {
    check_length(n);
    if (!(p_one > 0.0 && p_one < 1.0)) throw DomainError("Bernoulli parameter must be in (0, 1)");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> order(count);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    // more probable first; popcount decides under i.i.d. Bernoulli, ties by value
    const bool ones_likely = p_one > 0.5;
    std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return ones_likely ? pa > pb : pa < pb;
    });
    std::map<std::string, std::string> out;
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        // rank r <-> binary expansion of r + 1 without its leading 1
        const std::uint64_t r1 = rank + 1;
        const unsigned len = static_cast<unsigned>(std::bit_width(r1)) - 1;
        out.emplace(bits_of(order[rank], n), len ? bits_of(r1, len) : std::string{});
    }
    return out;
}

PhraseComplexity lz78_phrase_complexity(const BitVector& bits) {
    if (bits.empty()) throw DomainError("LZ78 parse needs a non-empty string");
    std::vector<std::array<std::uint32_t, 2>> trie{{0, 0}};  // 0 = no child (root is never a child)
    std::uint32_t node = 0;
    std::uint64_t phrases = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const int b = bits[i] ? 1 : 0;
        const std::uint32_t next = trie[node][b];
        if (next == 0) {
            trie[node][b] = static_cast<std::uint32_t>(trie.size());
            trie.push_back({0, 0});
            ++phrases;
            node = 0;
        } else {
            node = next;
        }
    }
    if (node != 0) ++phrases;
    PhraseComplexity out;
    out.phrase_count = phrases;
    const auto c = static_cast<double>(phrases);
    out.normalized = phrases > 1 ? c * std::log2(c) / static_cast<double>(bits.size()) : 0.0;
    return out;
}

BitVector fair_coin_bits(std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    BitVector out(length);
    for (std::size_t i = 0; i < length; i += 64) {
        const auto word = rng.next();
        for (std::size_t j = 0; j < 64 && i + j < length; ++j)
            if ((word >> j) & 1) out.set(i + j);
    }
    return out;
}

}  // namespace entropia
