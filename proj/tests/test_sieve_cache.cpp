#include <doctest.h>

#include <chrono>
#include <cstring>
#include <fstream>
#include <iterator>

#include "entropia/error.hpp"
#include "entropia/sieve_cache.hpp"

using namespace entropia;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "entropia_cache_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::vector<unsigned char> slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::vector<unsigned char>& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::uint64_t read_le(const std::vector<unsigned char>& b, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[at + static_cast<std::size_t>(i)];
    return v;
}

std::span<const std::uint8_t> as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

TEST_CASE("fnv1a64 reference vectors") {
    CHECK(fnv1a64(as_bytes("")) == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64(as_bytes("a")) == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64(as_bytes("foobar")) == 0x85944171f73967e8ULL);
}

TEST_CASE("roundtrip at 10^4 is bit-identical and the layout is as documented") {
    const auto table = build_table(10'000);
    const auto path = scratch("t1e4.pbit");
    const auto back = cache_roundtrip(path, table);
    CHECK(back == table);
    CHECK(back.count(10'000) == 1229);

    const auto bytes = slurp(path);
    const std::size_t words = PrimeTable::word_count(10'000);
    REQUIRE(bytes.size() == 5 + 1 + 8 + 8 * words + 8);
    CHECK(std::memcmp(bytes.data(), "PBIT1", 5) == 0);
    CHECK(bytes[5] == 0x01);
    CHECK(read_le(bytes, 6) == 10'000);
    for (std::size_t w = 0; w < words; ++w) CHECK(read_le(bytes, 14 + 8 * w) == table.words()[w]);
    const std::span<const std::uint8_t> bitmap(bytes.data() + 14, 8 * words);
    CHECK(read_le(bytes, 14 + 8 * words) == fnv1a64(bitmap));
}

TEST_CASE("fault injection") {
    const auto table = build_table(10'000);
    const auto path = scratch("fault.pbit");
    save_table(path, table);
    const auto good = slurp(path);

    SUBCASE("truncated file") {
        auto bad = good;
        bad.resize(bad.size() - 3);
        spit(path, bad);
        CHECK_THROWS_AS(load_table(path), CorruptCacheError);
    }
    SUBCASE("truncated header") {
        spit(path, std::vector<unsigned char>(good.begin(), good.begin() + 9));
        CHECK_THROWS_AS(load_table(path), CorruptCacheError);
    }
    SUBCASE("flipped bitmap bit") {
        auto bad = good;
        bad[20] ^= 0x10;
        spit(path, bad);
        CHECK_THROWS_AS(load_table(path), CorruptCacheError);
    }
    SUBCASE("wrong magic") {
        auto bad = good;
        bad[0] = 'X';
        spit(path, bad);
        CHECK_THROWS_AS(load_table(path), CorruptCacheError);
    }
    SUBCASE("unknown version") {
        auto bad = good;
        bad[5] = 0x02;
        spit(path, bad);
        CHECK_THROWS_AS(load_table(path), CorruptCacheError);
    }
    SUBCASE("trailing garbage") {
        auto bad = good;
        bad.push_back(0);
        spit(path, bad);
        CHECK_THROWS_AS(load_table(path), CorruptCacheError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_table(scratch("does-not-exist.pbit")), std::runtime_error);
    }
}

TEST_CASE("load time versus sieve time at 10^7 (recorded only)") {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const auto table = build_table(10'000'000);
    const auto t1 = clock::now();
    const auto path = scratch("t1e7.pbit");
    save_table(path, table);
    const auto t2 = clock::now();
    const auto back = load_table(path);
    const auto t3 = clock::now();
    CHECK(back == table);
    using ms = std::chrono::duration<double, std::milli>;
    MESSAGE("sieve " << ms(t1 - t0).count() << " ms, load " << ms(t3 - t2).count() << " ms");
}
