// bit_vector.hpp
// Dense, word-backed bit sequence used for prime encodings and coded streams.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace entropia {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size, bool value = false)
        : size_(size), words_((size + 63) / 64, value ? ~0ULL : 0ULL) {
        trim();
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = 1ULL << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void push_back(bool value) {
        if ((size_ & 63) == 0) words_.push_back(0);
        ++size_;
        set(size_ - 1, value);
    }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    /// '0'/'1' characters, position 0 first.
    std::string to_string() const {
        std::string out(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if ((*this)[i]) out[i] = '1';
        return out;
    }

    static BitVector from_string(const std::string& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] == '1') v.set(i);
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    void trim() {
        if (size_ & 63) words_.back() &= (1ULL << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace entropia
