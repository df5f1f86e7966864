#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egap {

// SHA-256 of arbitrary bytes, lowercase hex.
std::string sha256_hex(std::string_view data);

// Length-prefixed digest over several fields; order matters, field
// boundaries cannot be confused ("ab","c" differs from "a","bc").
std::string digest_fields(const std::vector<std::string_view>& fields);

// First 128 bits of SHA-256, for compact in-memory indexes.
struct Key128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  bool operator==(const Key128&) const = default;
};
struct Key128Hash {
  std::size_t operator()(const Key128& k) const noexcept { return static_cast<std::size_t>(k.hi ^ (k.lo * 0x9e3779b97f4a7c15ULL)); }
};
Key128 key128(std::string_view data);

// 64-bit FNV-1a followed by a splitmix finalizer. Not cryptographic.
std::uint64_t hash64(std::string_view data, std::uint64_t seed = 0);
std::uint64_t splitmix64(std::uint64_t x);

// Counter-based uniform in [0,1) and standard normal, pure functions of (key, stream).
double counter_uniform(std::uint64_t key, std::uint64_t stream);
double counter_normal(std::uint64_t key, std::uint64_t stream);

// Fixed-point decimal rendering independent of locale.
std::string format_fixed(double value, int decimals);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool istarts_with(std::string_view s, std::string_view prefix);
bool icontains(std::string_view haystack, std::string_view needle);

std::string read_file(const std::string& path);
// Writes atomically via a temporary sibling file and rename.
void write_file(const std::string& path, std::string_view contents);

}  // namespace egap
