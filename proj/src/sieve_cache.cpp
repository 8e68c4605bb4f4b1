#include "entropia/sieve_cache.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "entropia/error.hpp"

namespace entropia {

namespace {

constexpr std::size_t kHeaderSize = 5 + 1 + 8;

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

}  // namespace

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void save_table(const std::filesystem::path& path, const PrimeTable& table) {
    std::vector<std::uint8_t> buf;
    const auto words = table.words();
    buf.reserve(kHeaderSize + words.size() * 8 + 8);
    buf.insert(buf.end(), std::begin(kCacheMagic), std::end(kCacheMagic));
    buf.push_back(kCacheVersion);
    put_u64(buf, table.limit());
    for (auto w : words) put_u64(buf, w);
    const auto checksum = fnv1a64(std::span(buf).subspan(kHeaderSize));
    put_u64(buf, checksum);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("failed writing cache file: " + path.string());
}

PrimeTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open cache file: " + path.string());
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (buf.size() < kHeaderSize + 8) throw CorruptCacheError("cache file truncated");
    if (!std::equal(std::begin(kCacheMagic), std::end(kCacheMagic), buf.begin()))
        throw CorruptCacheError("cache file has bad magic");
    if (buf[5] != kCacheVersion) throw CorruptCacheError("unsupported cache version " + std::to_string(buf[5]));
    const std::uint64_t limit = get_u64(buf.data() + 6);
    if (limit < 2 || limit > PrimeTable::kMaxLimit) throw CorruptCacheError("cache file has invalid limit");

    const std::size_t nwords = PrimeTable::word_count(limit);
    if (buf.size() != kHeaderSize + nwords * 8 + 8)
        throw CorruptCacheError("cache file size does not match its limit");
    const auto bitmap = std::span<const std::uint8_t>(buf).subspan(kHeaderSize, nwords * 8);
    if (fnv1a64(bitmap) != get_u64(buf.data() + kHeaderSize + nwords * 8))
        throw CorruptCacheError("cache file checksum mismatch");

    std::vector<std::uint64_t> words(nwords);
    for (std::size_t i = 0; i < nwords; ++i) words[i] = get_u64(bitmap.data() + 8 * i);
    try {
        return PrimeTable(limit, std::move(words));
    } catch (const DomainError& e) {
        throw CorruptCacheError(std::string("cache bitmap rejected: ") + e.what());
    }
}

PrimeTable cache_roundtrip(const std::filesystem::path& path, const PrimeTable& table) {
    save_table(path, table);
    return load_table(path);
}

}  // namespace entropia
