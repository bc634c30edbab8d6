#include "mcsl/common/hash.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace mcsl {

Digest sha256(std::span<const uint8_t> bytes) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("sha256 failed");
    }
    return out;
}

Digest sha256(std::string_view text) { return sha256(as_bytes(text)); }

Digest hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> msg) {
    // RFC 2104 construction over the EVP digest; block size of SHA-256 is 64.
    constexpr size_t kBlock = 64;
    std::array<uint8_t, kBlock> k{};
    if (key.size() > kBlock) {
        Digest kd = sha256(key);
        std::memcpy(k.data(), kd.data(), kd.size());
    } else {
        std::memcpy(k.data(), key.data(), key.size());
    }
    std::vector<uint8_t> inner(kBlock + msg.size());
    for (size_t i = 0; i < kBlock; ++i) inner[i] = k[i] ^ 0x36;
    std::memcpy(inner.data() + kBlock, msg.data(), msg.size());
    Digest ih = sha256(std::span<const uint8_t>(inner));

    std::array<uint8_t, kBlock + 32> outer{};
    for (size_t i = 0; i < kBlock; ++i) outer[i] = k[i] ^ 0x5c;
    std::memcpy(outer.data() + kBlock, ih.data(), ih.size());
    return sha256(std::span<const uint8_t>(outer.data(), outer.size()));
}

std::string to_hex(const Digest& d) {
    static const char* kHex = "0123456789abcdef";
    std::string s;
    s.reserve(64);
    for (uint8_t b : d) {
        s.push_back(kHex[b >> 4]);
        s.push_back(kHex[b & 0xf]);
    }
    return s;
}

static int nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Digest digest_from_hex(const std::string& hex) {
    if (hex.size() != 64) throw std::invalid_argument("digest hex must be 64 chars");
    Digest d{};
    for (size_t i = 0; i < 32; ++i) {
        int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit in digest");
        d[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return d;
}

}  // namespace mcsl
