#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace cograg {

/// Hex-encoded SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Digest of several parts joined with an unambiguous separator, truncated
/// to 16 hex chars. Used for content-addressed ids (hyperedges, cache keys
/// derive from the full digest instead).
std::string short_digest(std::initializer_list<std::string_view> parts);

/// FNV-1a 64-bit; the deterministic workhorse for the mock embedder and
/// mock model. Stable across platforms.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 14695981039346656037ull);

}  // namespace cograg
