#include "entropia/prime_table.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "entropia/compensated_sum.hpp"
#include "entropia/error.hpp"

namespace entropia {

namespace {

// 4096 words = 32 KiB of bitmap = 2^19 integers per segment.
constexpr std::size_t kSegmentWords = 4096;

std::vector<std::uint32_t> small_odd_primes(std::uint64_t hi) {
    std::vector<std::uint8_t> composite(hi + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 3; i <= hi; i += 2) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= hi; j += 2 * i) composite[j] = 1;
    }
    return primes;
}

void sieve_segment(std::vector<std::uint64_t>& words, std::size_t first_word, std::size_t end_word,
                   std::uint64_t nbits, const std::vector<std::uint32_t>& base) {
    const std::uint64_t lo_bit = static_cast<std::uint64_t>(first_word) * 64;
    const std::uint64_t hi_bit = std::min<std::uint64_t>(static_cast<std::uint64_t>(end_word) * 64, nbits);
    const std::uint64_t lo_n = 2 * lo_bit + 1;
    const std::uint64_t hi_n = 2 * (hi_bit - 1) + 1;
    for (std::uint32_t p32 : base) {
        const std::uint64_t p = p32;
        const std::uint64_t sq = p * p;
        if (sq > hi_n) break;
        std::uint64_t start = sq;
        if (start < lo_n) {
            start = (lo_n + p - 1) / p * p;
            if ((start & 1) == 0) start += p;
        }
        for (std::uint64_t i = start >> 1; i < hi_bit; i += p) words[i >> 6] &= ~(1ULL << (i & 63));
    }
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    // the double estimate is off by at most one; compare via division to avoid overflow
    auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))), 0xFFFFFFFFULL);
    while (r > 0 && r > n / r) --r;
    while (r < 0xFFFFFFFFULL && r + 1 <= n / (r + 1)) ++r;
    return r;
}

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> words)
    : limit_(limit), words_(std::move(words)) {
    if (limit_ < 2) throw DomainError("prime table limit must be >= 2");
    if (words_.size() != word_count(limit_)) throw DomainError("prime table bitmap has wrong size");
    const std::uint64_t nbits = bit_count(limit_);
    if ((nbits & 63) && (words_.back() >> (nbits & 63)) != 0)
        throw DomainError("prime table bitmap has bits past the limit");
    if (words_[0] & 1ULL) throw DomainError("prime table marks 1 as prime");

    const std::size_t blocks = words_.size() / kWordsPerCheckpoint + 1;
    checkpoints_.resize(blocks + 1, 0);
    std::uint64_t running = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (w % kWordsPerCheckpoint == 0) checkpoints_[w / kWordsPerCheckpoint] = running;
        running += static_cast<std::uint64_t>(std::popcount(words_[w]));
    }
    for (std::size_t k = (words_.size() + kWordsPerCheckpoint - 1) / kWordsPerCheckpoint; k < checkpoints_.size(); ++k)
        checkpoints_[k] = running;
}

std::uint64_t PrimeTable::count(std::uint64_t m) const {
    if (m < 1 || m > limit_)
        throw DomainError("prime count argument " + std::to_string(m) + " outside [1, " + std::to_string(limit_) + "]");
    if (m < 2) return 0;
    const std::uint64_t last_bit = (m - 1) >> 1;
    const std::size_t last_word = last_bit >> 6;
    const std::size_t block = last_word / kWordsPerCheckpoint;
    std::uint64_t total = checkpoints_[block];
    for (std::size_t w = block * kWordsPerCheckpoint; w < last_word; ++w)
        total += static_cast<std::uint64_t>(std::popcount(words_[w]));
    std::uint64_t tail = words_[last_word];
    if ((last_bit & 63) != 63) tail &= (2ULL << (last_bit & 63)) - 1;
    total += static_cast<std::uint64_t>(std::popcount(tail));
    return total + 1;  // the prime 2
}

std::vector<std::uint64_t> PrimeTable::primes_up_to(std::uint64_t hi) const {
    std::vector<std::uint64_t> out;
    for_each_prime(hi, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

PrimeTable build_table(std::uint64_t limit, unsigned workers) {
    if (limit < 2) throw DomainError("sieve limit must be >= 2");
    if (limit > PrimeTable::kMaxLimit) throw CapacityError("sieve limit exceeds 2^40");

    const std::uint64_t nbits = PrimeTable::bit_count(limit);
    std::vector<std::uint64_t> words(PrimeTable::word_count(limit), ~0ULL);
    if (nbits & 63) words.back() = (1ULL << (nbits & 63)) - 1;
    words[0] &= ~1ULL;  // 1 is not prime

    const auto base = small_odd_primes(isqrt(limit));
    const std::size_t segments = (words.size() + kSegmentWords - 1) / kSegmentWords;

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, segments));

    // Segments are word-aligned, so workers write disjoint words.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t s = next++; s < segments; s = next++) {
            const std::size_t first = s * kSegmentWords;
            sieve_segment(words, first, std::min(first + kSegmentWords, words.size()), nbits, base);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    }
    return PrimeTable(limit, std::move(words));
}

std::uint64_t prime_count(const PrimeTable& table, std::uint64_t m) { return table.count(m); }

PrimeEncoding prime_encoding(const PrimeTable& table, std::uint64_t n) {
    if (n < 1 || n > table.limit())
        throw DomainError("prime encoding length " + std::to_string(n) + " outside [1, " + std::to_string(table.limit()) + "]");
    PrimeEncoding enc{n, BitVector(static_cast<std::size_t>(n))};
    table.for_each_prime(n, [&](std::uint64_t p) { enc.bits.set(static_cast<std::size_t>(p - 1)); });
    return enc;
}

FactorSignature make_signature(std::uint64_t n, std::vector<std::pair<std::uint64_t, unsigned>> exponents) {
    FactorSignature sig;
    sig.n = n;
    sig.exponents = std::move(exponents);
    sig.omega = static_cast<unsigned>(sig.exponents.size());
    for (const auto& [p, e] : sig.exponents) {
        sig.big_omega += e;
        for (unsigned k = 0; k < e / 2; ++k) sig.square_root_part *= p;
        if (e & 1) sig.squarefree_part *= p;
    }
    return sig;
}

FactorSignature factor_signature(const PrimeTable& table, std::uint64_t n) {
    if (n < 1 || n > table.limit())
        throw DomainError("factor signature argument " + std::to_string(n) + " outside [1, " + std::to_string(table.limit()) + "]");
    std::vector<std::pair<std::uint64_t, unsigned>> exps;
    std::uint64_t rest = n;
    auto divide_out = [&](std::uint64_t p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) exps.emplace_back(p, e);
    };
    divide_out(2);
    for (std::uint64_t p = 3; p * p <= rest; p += 2)
        if (table.is_prime(p)) divide_out(p);
    if (rest > 1) exps.emplace_back(rest, 1);
    return make_signature(n, std::move(exps));
}

FactorSieve::FactorSieve(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
    if (limit < 1) throw DomainError("factor sieve limit must be >= 1");
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = i * p;
            if (p > spf_[i] || m > limit) break;
            spf_[m] = p;
        }
    }
}

FactorSignature FactorSieve::signature(std::uint32_t n) const {
    if (n < 1 || n > limit_) throw DomainError("factor sieve argument " + std::to_string(n) + " out of range");
    std::vector<std::pair<std::uint64_t, unsigned>> exps;
    std::uint32_t rest = n;
    while (rest > 1) {
        const std::uint32_t p = spf_[rest];
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        exps.emplace_back(p, e);
    }
    return make_signature(n, std::move(exps));
}

std::vector<std::uint8_t> omega_table(const PrimeTable& table, std::uint64_t n) {
    if (n > table.limit()) throw DomainError("omega table exceeds prime table limit");
    std::vector<std::uint8_t> omega(static_cast<std::size_t>(n) + 1, 0);
    table.for_each_prime(n, [&](std::uint64_t p) {
        for (std::uint64_t k = p; k <= n; k += p) ++omega[k];
    });
    return omega;
}

std::vector<std::int8_t> mobius_table(std::uint64_t n) {
    if (n < 1) throw DomainError("mobius table needs N >= 1");
    std::vector<std::int8_t> mu(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::uint64_t> primes;
    mu[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::uint64_t p : primes) {
            const std::uint64_t m = i * p;
            if (m > n) break;
            composite[m] = true;
            if (i % p == 0) {
                mu[m] = 0;
                break;
            }
            mu[m] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

double mertens_sum(const PrimeTable& table, std::uint64_t n) {
    if (n < 2 || n > table.limit()) throw DomainError("mertens sum needs 2 <= N <= limit");
    CompensatedSum sum;
    table.for_each_prime(n, [&](std::uint64_t p) { sum += 1.0 / static_cast<double>(p); });
    return sum.value();
}

double chebyshev_sum(const PrimeTable& table, std::uint64_t n) {
    if (n < 2 || n > table.limit()) throw DomainError("chebyshev sum needs 2 <= N <= limit");
    CompensatedSum sum;
    table.for_each_prime(n, [&](std::uint64_t p) {
        const auto x = static_cast<double>(p);
        sum += std::log(x) / x;
    });
    return sum.value();
}

}  // namespace entropia
