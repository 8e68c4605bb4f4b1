// huffman.hpp
// Huffman trees, prefix-free codebooks and the Kraft machinery.
//
// Tie-breaking: the queue is ordered by (probability, creation index); a
// merged node takes the smaller index of its two children, the first node
// popped becomes the left (bit 0) child. This makes codebooks identical
// across runs and platforms.
//
// A one-symbol alphabet gets the codeword "0": the tree is a root with a
// single left leaf, so every stream and every game uses at least one bit.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "entropia/bit_vector.hpp"
#include "entropia/distribution.hpp"

namespace entropia {

class HuffmanTree {
public:
    static constexpr std::int32_t kNone = -1;

    struct Node {
        double prob = 0.0;
        std::int32_t left = kNone;
        std::int32_t right = kNone;
        std::int32_t symbol = kNone;  // leaf: index into the distribution
        bool is_leaf() const { return symbol != kNone; }
    };

    HuffmanTree(std::vector<Node> nodes, std::int32_t root) : nodes_(std::move(nodes)), root_(root) {}

    std::int32_t root() const { return root_; }
    const Node& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
    std::size_t size() const { return nodes_.size(); }

    /// Symbols of all leaves below `i`, in left-to-right order.
    std::vector<std::int32_t> leaves_under(std::int32_t i) const;

private:
    std::vector<Node> nodes_;
    std::int32_t root_;
};

class CodeBook {
public:
    /// codes[i] is the codeword of source.label(i). Throws DomainError if
    /// the code is not prefix-free or a codeword is empty or not binary.
    CodeBook(Distribution source, std::vector<std::string> codes);

    const Distribution& source() const { return source_; }
    const std::vector<std::string>& codes() const { return codes_; }
    const std::string& code(std::size_t i) const { return codes_[i]; }
    const std::string& code_for(const std::string& label) const { return codes_[source_.index_of(label)]; }
    std::vector<unsigned> lengths() const;
    std::size_t size() const { return codes_.size(); }

private:
    Distribution source_;
    std::vector<std::string> codes_;
};

struct HuffmanCode {
    HuffmanTree tree;
    CodeBook book;
};

HuffmanCode huffman_build(const Distribution& dist);

/// Sampled code rates are accepted within this many standard errors of the
/// expected length.
inline constexpr double kRateSigmas = 6.0;

struct ExpectedLength {
    double length = 0.0;       // sum p_i |c_i| in bits
    double entropy = 0.0;      // H in bits
    double stddev = 0.0;       // standard deviation of |c_X| for X drawn from the source
    bool within_bound = false; // H <= L < H + 1 (entropy tolerance 1e-6)
};

ExpectedLength expected_code_length(const CodeBook& book);

bool is_prefix_free(std::span<const std::string> codes);

/// sum s^{-k_i}. Lengths >= 1, alphabet_size >= 2.
double kraft_sum(std::span<const unsigned> lengths, unsigned alphabet_size = 2);

/// Canonical binary codewords with the given lengths, assigned in order of
/// (length, position). Returned in input order. InfeasibleError if the
/// lengths violate Kraft.
std::vector<std::string> canonical_codewords(std::span<const unsigned> lengths);

CodeBook canonical_code_from_lengths(std::span<const unsigned> lengths, const Distribution& source);

/// Concatenates codewords for a symbol stream.
BitVector encode(const CodeBook& book, std::span<const std::uint32_t> symbols);

/// Walks the tree bit by bit. DomainError on a dangling or truncated stream.
std::vector<std::uint32_t> decode(const HuffmanTree& tree, const BitVector& bits);

/// CSV `symbol,code,probability`.
void write_codebook_csv(std::ostream& out, const CodeBook& book);

}  // namespace entropia
