#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcsl {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> bytes);
Digest sha256(std::string_view text);

// HMAC-SHA256; the simulator's stand-in for real signatures.
Digest hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> msg);

std::string to_hex(const Digest& d);
Digest digest_from_hex(const std::string& hex);  // throws std::invalid_argument

inline std::span<const uint8_t> as_bytes(std::string_view s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

}  // namespace mcsl
