// sieve_cache.hpp
// On-disk sieve cache.
//
//   offset  size  field
//   0       5     magic "PBIT1"
//   5       1     version 0x01
//   6       8     limit, little-endian u64
//   14      8*W   odd-only bitmap, W little-endian u64 words
//   14+8W   8     FNV-1a 64 of the bitmap bytes, little-endian
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

#include "entropia/prime_table.hpp"

namespace entropia {

inline constexpr char kCacheMagic[5] = {'P', 'B', 'I', 'T', '1'};
inline constexpr std::uint8_t kCacheVersion = 0x01;

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

void save_table(const std::filesystem::path& path, const PrimeTable& table);

/// Throws CorruptCacheError on any structural or checksum mismatch and
/// std::runtime_error if the file cannot be opened.
PrimeTable load_table(const std::filesystem::path& path);

/// Save then load; the result is bit-identical to `table`.
PrimeTable cache_roundtrip(const std::filesystem::path& path, const PrimeTable& table);

}  // namespace entropia
