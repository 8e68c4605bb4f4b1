#include "entropia/huffman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <queue>
#include <tuple>

#include "entropia/compensated_sum.hpp"
#include "entropia/error.hpp"
#include "entropia/format.hpp"

namespace entropia {

std::vector<std::int32_t> HuffmanTree::leaves_under(std::int32_t i) const {
    std::vector<std::int32_t> out;
    std::vector<std::int32_t> stack{i};
    while (!stack.empty()) {
        const auto cur = stack.back();
        stack.pop_back();
        const auto& n = node(cur);
        if (n.is_leaf()) {
            out.push_back(n.symbol);
            continue;
        }
        if (n.right != kNone) stack.push_back(n.right);
        if (n.left != kNone) stack.push_back(n.left);
    }
    return out;
}

bool is_prefix_free(std::span<const std::string> codes) {
    std::vector<std::string> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].compare(0, sorted[i - 1].size(), sorted[i - 1]) == 0) return false;
    return true;
}

CodeBook::CodeBook(Distribution source, std::vector<std::string> codes)
    : source_(std::move(source)), codes_(std::move(codes)) {
    if (codes_.size() != source_.size()) throw DomainError("codebook size differs from its source alphabet");
    for (const auto& c : codes_) {
        if (c.empty()) throw DomainError("codebook contains an empty codeword");
        if (c.find_first_not_of("01") != std::string::npos) throw DomainError("codeword '" + c + "' is not binary");
    }
    if (!is_prefix_free(codes_)) throw DomainError("codebook is not prefix-free");
}

std::vector<unsigned> CodeBook::lengths() const {
    std::vector<unsigned> out;
    out.reserve(codes_.size());
    for (const auto& c : codes_) out.push_back(static_cast<unsigned>(c.size()));
    return out;
}

HuffmanCode huffman_build(const Distribution& dist) {
    const std::size_t n = dist.size();
    if (n == 0) throw DomainError("cannot build a Huffman code for an empty alphabet");

    std::vector<HuffmanTree::Node> nodes;
    nodes.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        nodes.push_back({dist.prob(i), HuffmanTree::kNone, HuffmanTree::kNone, static_cast<std::int32_t>(i)});

    if (n == 1) {
        nodes.push_back({nodes[0].prob, 0, HuffmanTree::kNone, HuffmanTree::kNone});
        HuffmanTree tree(std::move(nodes), 1);
        return {std::move(tree), CodeBook(dist, {"0"})};
    }

    // (probability, creation index, node id); smallest first.
    using Entry = std::tuple<double, std::size_t, std::int32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (std::size_t i = 0; i < n; ++i) queue.emplace(dist.prob(i), i, static_cast<std::int32_t>(i));

    while (queue.size() > 1) {
        const auto [p0, idx0, left] = queue.top();
        queue.pop();
        const auto [p1, idx1, right] = queue.top();
        queue.pop();
        const auto id = static_cast<std::int32_t>(nodes.size());
        nodes.push_back({p0 + p1, left, right, HuffmanTree::kNone});
        queue.emplace(p0 + p1, std::min(idx0, idx1), id);
    }
    const auto root = std::get<2>(queue.top());
    HuffmanTree tree(std::move(nodes), root);

    std::vector<std::string> codes(n);
    std::vector<std::pair<std::int32_t, std::string>> stack{{root, ""}};
    while (!stack.empty()) {
        auto [id, prefix] = std::move(stack.back());
        stack.pop_back();
        const auto& node = tree.node(id);
        if (node.is_leaf()) {
            codes[static_cast<std::size_t>(node.symbol)] = prefix;
            continue;
        }
        stack.emplace_back(node.right, prefix + '1');
        stack.emplace_back(node.left, prefix + '0');
    }
    return {std::move(tree), CodeBook(dist, std::move(codes))};
}

ExpectedLength expected_code_length(const CodeBook& book) {
    CompensatedSum sum, sum_sq;
    for (std::size_t i = 0; i < book.size(); ++i) {
        const auto len = static_cast<double>(book.code(i).size());
        sum += book.source().prob(i) * len;
        sum_sq += book.source().prob(i) * len * len;
    }
    ExpectedLength out;
    out.length = sum.value();
    out.stddev = std::sqrt(std::max(0.0, sum_sq.value() - out.length * out.length));
    out.entropy = entropy(book.source(), 2.0);
    out.within_bound = out.entropy <= out.length + kEntropyTolerance && out.length < out.entropy + 1.0;
    return out;
}

double kraft_sum(std::span<const unsigned> lengths, unsigned alphabet_size) {
    if (alphabet_size < 2) throw DomainError("alphabet size must be >= 2");
    CompensatedSum sum;
    for (unsigned k : lengths) {
        if (k < 1) throw DomainError("codeword lengths must be >= 1");
        sum += std::pow(static_cast<double>(alphabet_size), -static_cast<double>(k));
    }
    return sum.value();
}

std::vector<std::string> canonical_codewords(std::span<const unsigned> lengths) {
    std::vector<std::size_t> order(lengths.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

    std::vector<std::string> out(lengths.size());
    std::string code;  // next free codeword, as a binary counter
    bool exhausted = false;
    for (std::size_t idx : order) {
        const unsigned len = lengths[idx];
        if (len < 1) throw DomainError("codeword lengths must be >= 1");
        if (exhausted) throw InfeasibleError("codeword lengths violate the Kraft inequality");
        code.append(len - code.size(), '0');
        out[idx] = code;
        // increment; carrying out of the top bit means the code space is full
        std::size_t pos = code.size();
        while (pos > 0 && code[pos - 1] == '1') code[--pos] = '0';
        if (pos == 0)
            exhausted = true;
        else
            code[pos - 1] = '1';
    }
    return out;
}

CodeBook canonical_code_from_lengths(std::span<const unsigned> lengths, const Distribution& source) {
    return CodeBook(source, canonical_codewords(lengths));
}

BitVector encode(const CodeBook& book, std::span<const std::uint32_t> symbols) {
    BitVector out;
    for (auto s : symbols)
        for (char c : book.code(s)) out.push_back(c == '1');
    return out;
}

std::vector<std::uint32_t> decode(const HuffmanTree& tree, const BitVector& bits) {
    std::vector<std::uint32_t> out;
    auto cur = tree.root();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const auto& node = tree.node(cur);
        cur = bits[i] ? node.right : node.left;
        if (cur == HuffmanTree::kNone) throw DomainError("bit stream leaves the code tree");
        if (tree.node(cur).is_leaf()) {
            out.push_back(static_cast<std::uint32_t>(tree.node(cur).symbol));
            cur = tree.root();
        }
    }
    if (cur != tree.root()) throw DomainError("bit stream ends inside a codeword");
    return out;
}

void write_codebook_csv(std::ostream& out, const CodeBook& book) {
    out << "symbol,code,probability\n";
    for (std::size_t i = 0; i < book.size(); ++i)
        out << book.source().label(i) << ',' << book.code(i) << ',' << format_double(book.source().prob(i)) << '\n';
}

}  // namespace entropia
