#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "mcsl/common/hash.hpp"
#include "mcsl/ledger/types.hpp"

namespace mcsl::ledger {

// Keyed-hash authenticity tags over (payload, task_id, submitter). Signing and
// verification may use different registered keys for the same identity, which
// is how tests forge signatures.
class KeyStore {
public:
    void register_participant(const std::string& id, uint64_t key_seed) {
        Digest key = sha256("key:" + id + ":" + std::to_string(key_seed));
        signing_keys_[id] = key;
        verify_keys_[id] = key;
    }

    bool known(const std::string& id) const { return verify_keys_.count(id) > 0; }

    // Test hook: make `id` sign with a key that will not verify.
    void corrupt_signing_key(const std::string& id) {
        signing_keys_.at(id) = sha256("forged:" + id);
    }

    void sign(Transaction& tx) const {
        auto it = signing_keys_.find(tx.submitter);
        if (it == signing_keys_.end())
            throw std::invalid_argument("unknown submitter: " + tx.submitter);
        tx.signature = tag(it->second, tx);
    }

    bool verify(const Transaction& tx) const {
        auto it = verify_keys_.find(tx.submitter);
        if (it == verify_keys_.end()) return false;
        return tag(it->second, tx) == tx.signature;
    }

private:
    static Digest tag(const Digest& key, const Transaction& tx) {
        std::string msg = tx.signing_bytes();
        return hmac_sha256(std::span<const uint8_t>(key.data(), key.size()), as_bytes(msg));
    }

    std::map<std::string, Digest> signing_keys_;
    std::map<std::string, Digest> verify_keys_;
};

}  // namespace mcsl::ledger
