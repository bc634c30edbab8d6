#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcsl/ledger/blob_store.hpp"
#include "mcsl/ledger/keystore.hpp"
#include "mcsl/ledger/recruitment.hpp"
#include "mcsl/ledger/types.hpp"

namespace mcsl::ledger {

struct ValidationResult {
    enum class Reason { Ok, BadHeight, BadPrevHash, BadBlockHash, BadSignature };
    bool ok = true;
    Reason reason = Reason::Ok;
    std::string detail;

    static ValidationResult accept() { return {}; }
    static ValidationResult reject(Reason r, std::string d) { return {false, r, std::move(d)}; }
};

const char* to_string(ValidationResult::Reason r);

// Validate `block` as the next block of `chain`: hash link, height, block
// hash, and every transaction signature.
ValidationResult validate_block(const Chain& chain, const Block& block, const KeyStore& keys);

ValidationResult validate_chain(const Chain& chain, const KeyStore& keys);

// Single-writer data plane: pending pool, block commitment, task-indexed
// queries and the recruitment smart contract triggered by committed
// TaskRequest transactions.
class Ledger {
public:
    explicit Ledger(KeyStore& keys);

    KeyStore& keys() { return keys_; }
    const KeyStore& keys() const { return keys_; }
    BlobStore& blobs() { return blobs_; }
    const BlobStore& blobs() const { return blobs_; }
    const Chain& chain() const { return chain_; }
    const std::vector<Transaction>& pending() const { return pending_; }

    void install_recruitment_contract(RecruitmentPolicy policy,
                                      std::vector<WorkerDescriptor> candidates);

    // Queue a TaskRequest signed by its requestor; the recruitment contract
    // runs once the request is committed. Throws std::invalid_argument when
    // the performance requirement lies outside (0,1).
    uint64_t publish_task(const TaskRequest& req);

    // Sign as `submitter` and queue.
    Transaction& submit(TxKind kind, uint64_t task_id, TxPayload payload,
                        const std::string& submitter);

    // Queue an externally signed transaction (tests use this to inject forgeries).
    Transaction& submit_signed(Transaction tx);

    // Verify pending transactions, discard invalid ones, form the next block and
    // append it. Returns the committed block; `discarded` (if given) receives
    // the dropped transactions.
    const Block& commit_pending(const std::string& proposer,
                                std::vector<Transaction>* discarded = nullptr);

    bool has_pending() const { return !pending_.empty(); }

    // Order-preserving filter of all committed transactions by task id.
    std::vector<Transaction> query_task_records(uint64_t task_id) const;

    // Most recent final global model whose originating task bears the same
    // description; used when a request carries no initial model.
    std::optional<ContentAddress> find_historical_model(const std::string& task_description) const;

    std::string export_chain() const;
    // Replaces the current chain; throws on any structural violation.
    void import_chain(const std::string& text);

private:
    KeyStore& keys_;
    BlobStore blobs_;
    Chain chain_;
    std::vector<Transaction> pending_;
    uint64_t next_task_id_ = 1;

    struct Contract {
        RecruitmentPolicy policy;
        std::vector<WorkerDescriptor> candidates;
    };
    std::optional<Contract> recruitment_;

    void run_contracts(const Block& committed);
};

}  // namespace mcsl::ledger
