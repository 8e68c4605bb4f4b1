// coding.hpp
// Computable stand-ins for description length: empirical source-coding
// trials, the incompressibility census over all strings of a given length,
// and LZ78 phrase complexity.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "entropia/bit_vector.hpp"
#include "entropia/distribution.hpp"
#include "entropia/report.hpp"

namespace entropia {

/// Draws n i.i.d. symbols from `dist` (seeded), Huffman-encodes and decodes
/// them. Report "source_coding":
///   scalars bits_per_symbol, entropy_bits, expected_code_length, total_bits, symbols
///   checks  entropy_bound (H <= bits/symbol < H+1), roundtrip
ExperimentReport source_coding_trial(const Distribution& dist, std::uint64_t n, std::uint64_t seed);

/// Fraction of the 2^n strings of length n whose description is shorter
/// than n - c. `codes` maps every length-n string to its codeword; the map
/// must be injective. Requires n <= 20, 0 <= c < n.
double incompressibility_census(const std::map<std::string, std::string>& codes, unsigned n, unsigned c);

/// Same census from code lengths alone. Injectivity is checked by counting:
/// an injective binary code with these lengths exists iff for every L at
/// most 2^(L+1) - 1 strings have length <= L.
double incompressibility_census(const std::map<std::string, unsigned>& code_lengths, unsigned n, unsigned c);

/// All 2^n strings of length n mapped to themselves.
std::map<std::string, std::string> identity_code(unsigned n);

/// Shannon-Fano-Elias (arithmetic-coder) codewords for every length-n string
/// under an i.i.d. Bernoulli(p_one) model: ceil(-log2 P(x)) + 1 bits of the
/// midpoint of x's cumulative interval. Prefix-free.
std::map<std::string, std::string> shannon_fano_elias_code(unsigned n, double p_one);

/// Ranks all length-n strings by probability under Bernoulli(p_one) and
/// gives the k-th most probable string the k-th shortest binary string
/// ("", "0", "1", "00", ...). The most compressive injective code there is.
std::map<std::string, std::string> enumeration_code(unsigned n, double p_one);

struct PhraseComplexity {
    std::uint64_t phrase_count = 0;
    double normalized = 0.0;  // phrase_count * log2(phrase_count) / length
};

/// Incremental LZ78 parse; a trailing incomplete phrase counts as a phrase.
PhraseComplexity lz78_phrase_complexity(const BitVector& bits);

/// Seeded fair-coin bit string.
BitVector fair_coin_bits(std::size_t length, std::uint64_t seed);

}  // namespace entropia
