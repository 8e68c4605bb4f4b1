// prime_table.hpp
// Bit-packed primality oracle over [1, N] plus the queries built on it:
// prime counting, prime encodings, factor signatures, Moebius values and
// the reciprocal prime sums used by the experiments.
//
// Layout: one bit per odd integer, bit i <-> n = 2i + 1. The integer 2 is
// implicit. Bits are stored in little-endian 64-bit words; bits past the
// limit are always zero.
//
// Memory: ~N/16 bytes for the bitmap, plus one 8-byte checkpoint per 2^16
// integers.
#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "entropia/bit_vector.hpp"

namespace entropia {

class PrimeTable {
public:
    static constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 40;
    static constexpr unsigned kCheckpointShift = 16;  // pi checkpoint every 2^16 integers
    static constexpr std::size_t kWordsPerCheckpoint = (std::size_t{1} << (kCheckpointShift - 1)) / 64;

    /// Adopts an odd-only bitmap (from the sieve or a cache file) and
    /// derives the pi checkpoints. Throws DomainError on an inconsistent bitmap.
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> words);

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const {
        if (n < 3) return n == 2;
        if ((n & 1) == 0 || n > limit_) return false;
        const std::uint64_t i = n >> 1;
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }

    /// pi(m) for 1 <= m <= limit; DomainError otherwise.
    std::uint64_t count(std::uint64_t m) const;

    /// Calls f(p) for every prime p <= hi in ascending order.
    template <class F>
    void for_each_prime(std::uint64_t hi, F&& f) const {
        if (hi > limit_) hi = limit_;
        if (hi < 2) return;
        f(std::uint64_t{2});
        const std::uint64_t last_bit = (hi - 1) >> 1;
        const std::size_t last_word = last_bit >> 6;
        for (std::size_t w = 0; w <= last_word; ++w) {
            std::uint64_t bits = words_[w];
            if (w == last_word && (last_bit & 63) != 63) bits &= (2ULL << (last_bit & 63)) - 1;
            while (bits) {
                const int b = std::countr_zero(bits);
                f(((static_cast<std::uint64_t>(w) << 6) + static_cast<std::uint64_t>(b)) * 2 + 1);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<const std::uint64_t> checkpoints() const { return checkpoints_; }

    /// Number of odd-only bits for a given limit: odd n in [1, limit].
    static std::uint64_t bit_count(std::uint64_t limit) { return (limit + 1) / 2; }
    static std::size_t word_count(std::uint64_t limit) { return static_cast<std::size_t>((bit_count(limit) + 63) / 64); }

    friend bool operator==(const PrimeTable& a, const PrimeTable& b) {
        return a.limit_ == b.limit_ && a.words_ == b.words_;
    }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> checkpoints_;  // odd primes below k * 2^16
};

/// Segmented odd-only sieve of Eratosthenes. 2 <= N <= 2^40.
/// `workers` = 0 picks std::thread::hardware_concurrency().
PrimeTable build_table(std::uint64_t limit, unsigned workers = 0);

std::uint64_t prime_count(const PrimeTable& table, std::uint64_t m);

/// Bit k-1 holds 1 iff k is prime, for k in [1, N].
struct PrimeEncoding {
    std::uint64_t limit = 0;
    BitVector bits;
};

PrimeEncoding prime_encoding(const PrimeTable& table, std::uint64_t n);

/// n = prod p^e, split as n = squarefree_part * square_root_part^2.
struct FactorSignature {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> exponents;  // ascending primes
    unsigned omega = 0;
    unsigned big_omega = 0;
    std::uint64_t squarefree_part = 1;
    std::uint64_t square_root_part = 1;
};

/// Builds the signature from a list of (prime, exponent) pairs.
FactorSignature make_signature(std::uint64_t n, std::vector<std::pair<std::uint64_t, unsigned>> exponents);

/// Trial division by the table's primes. 1 <= n <= table.limit().
FactorSignature factor_signature(const PrimeTable& table, std::uint64_t n);

// Smallest-prime-factor table for batch factorisation over [1, N]
// (linear sieve, O(N) construction, O(log n) per query).
class FactorSieve {
public:
    explicit FactorSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
    FactorSignature signature(std::uint32_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// omega(n) for n in [0, N] (omega(0) := 0, omega(1) = 0).
std::vector<std::uint8_t> omega_table(const PrimeTable& table, std::uint64_t n);

/// mu(n) for n in [0, N]; index 0 holds 0 and is not a Moebius value.
std::vector<std::int8_t> mobius_table(std::uint64_t n);

/// Sum over p <= N of 1/p, ascending, compensated.
double mertens_sum(const PrimeTable& table, std::uint64_t n);

/// Sum over p <= N of ln(p)/p, ascending, compensated.
double chebyshev_sum(const PrimeTable& table, std::uint64_t n);

/// floor(sqrt(n)) exactly.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace entropia
