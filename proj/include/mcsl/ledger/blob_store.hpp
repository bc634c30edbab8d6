#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mcsl/ledger/types.hpp"

namespace mcsl::ledger {

// In-process content-addressed blob store. Model payloads live here; the
// chain carries only their addresses.
class BlobStore {
public:
    ContentAddress store(std::span<const uint8_t> bytes) {
        if (bytes.empty()) throw std::invalid_argument("blob must be non-empty");
        ContentAddress addr{sha256(bytes)};
        blobs_.try_emplace(addr.digest, bytes.begin(), bytes.end());
        return addr;
    }

    ContentAddress store(const std::string& text) { return store(as_bytes(text)); }

    const std::vector<uint8_t>& load(const ContentAddress& addr) const {
        auto it = blobs_.find(addr.digest);
        if (it == blobs_.end()) throw std::out_of_range("unknown content address");
        return it->second;
    }

    bool contains(const ContentAddress& addr) const { return blobs_.count(addr.digest) > 0; }

    size_t size() const { return blobs_.size(); }

private:
    std::map<Digest, std::vector<uint8_t>> blobs_;
};

}  // namespace mcsl::ledger
