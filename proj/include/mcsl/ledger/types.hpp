#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcsl/common/hash.hpp"

namespace mcsl::ledger {

// Address of a blob in the content-addressed store.
struct ContentAddress {
    Digest digest{};
    bool operator==(const ContentAddress&) const = default;
};

enum class TxKind {
    TaskRequest,
    RecruitmentResult,
    SensingPaymentReport,
    LocalUpdateRef,
    GlobalModelRecord,
    SettlementRecord,
    RewardAllocation,
};

const char* to_string(TxKind k);
TxKind tx_kind_from_string(const std::string& s);

struct TaskRequest {
    std::string requestor_id;
    std::string task_description;
    double performance_requirement = 0.0;  // target accuracy, must lie in (0,1)
    std::optional<ContentAddress> initial_model;
};

struct RecruitmentResult {
    bool success = false;
    std::vector<std::string> workers;
    std::string policy;
};

// Payment v+s for one device, integer minor units.
struct SensingPaymentReport {
    std::string device_id;
    std::string server_id;
    int64_t valuation = 0;
    int64_t profit = 0;
};

struct LocalUpdateRef {
    uint32_t round = 0;
    ContentAddress update;
    uint64_t sample_count = 0;
};

struct GlobalModelRecord {
    uint32_t round = 0;
    ContentAddress model;
    double test_accuracy = 0.0;
    bool converged = false;
    bool final = false;
};

struct SettlementRecord {
    int64_t amount_paid = 0;
    int64_t invoice_total = 0;
};

struct RewardAllocation {
    std::string recipient;
    int64_t amount = 0;
    std::string reason;
};

using TxPayload = std::variant<TaskRequest, RecruitmentResult, SensingPaymentReport,
                               LocalUpdateRef, GlobalModelRecord, SettlementRecord,
                               RewardAllocation>;

struct Transaction {
    TxKind kind = TxKind::TaskRequest;
    uint64_t task_id = 0;
    TxPayload payload;
    std::string submitter;
    Digest signature{};

    // Canonical bytes covered by the signature: (kind, task_id, payload, submitter).
    std::string signing_bytes() const;
};

struct Block {
    uint64_t height = 0;
    Digest prev_hash{};
    std::string proposer;
    std::vector<Transaction> txs;
    Digest block_hash{};

    Digest compute_hash() const;
    size_t byte_size() const;  // serialized size, used as consensus payload size
};

std::string serialize_tx(const Transaction& tx);
Transaction parse_tx(const std::string& json_text);

// One block per line; stable text round-trip.
std::string serialize_block(const Block& b);
Block parse_block(const std::string& line);

struct Chain {
    std::vector<Block> blocks;

    const Block* tip() const { return blocks.empty() ? nullptr : &blocks.back(); }
    uint64_t next_height() const { return blocks.empty() ? 0 : blocks.back().height + 1; }
};

Block make_genesis();

}  // namespace mcsl::ledger
