#include "mcsl/ledger/types.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace mcsl::ledger {

using nlohmann::json;

const char* to_string(TxKind k) {
    switch (k) {
        case TxKind::TaskRequest: return "task_request";
        case TxKind::RecruitmentResult: return "recruitment_result";
        case TxKind::SensingPaymentReport: return "sensing_payment_report";
        case TxKind::LocalUpdateRef: return "local_update_ref";
        case TxKind::GlobalModelRecord: return "global_model_record";
        case TxKind::SettlementRecord: return "settlement_record";
        case TxKind::RewardAllocation: return "reward_allocation";
    }
    throw std::logic_error("unknown TxKind");
}

TxKind tx_kind_from_string(const std::string& s) {
    if (s == "task_request") return TxKind::TaskRequest;
    if (s == "recruitment_result") return TxKind::RecruitmentResult;
    if (s == "sensing_payment_report") return TxKind::SensingPaymentReport;
    if (s == "local_update_ref") return TxKind::LocalUpdateRef;
    if (s == "global_model_record") return TxKind::GlobalModelRecord;
    if (s == "settlement_record") return TxKind::SettlementRecord;
    if (s == "reward_allocation") return TxKind::RewardAllocation;
    throw std::invalid_argument("unknown transaction kind: " + s);
}

namespace {

json payload_to_json(const TxPayload& p) {
    json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TaskRequest>) {
                j["requestor_id"] = v.requestor_id;
                j["task_description"] = v.task_description;
                j["performance_requirement"] = v.performance_requirement;
                if (v.initial_model) j["initial_model"] = to_hex(v.initial_model->digest);
            } else if constexpr (std::is_same_v<T, RecruitmentResult>) {
                j["success"] = v.success;
                j["workers"] = v.workers;
                j["policy"] = v.policy;
            } else if constexpr (std::is_same_v<T, SensingPaymentReport>) {
                j["device_id"] = v.device_id;
                j["server_id"] = v.server_id;
                j["valuation"] = v.valuation;
                j["profit"] = v.profit;
            } else if constexpr (std::is_same_v<T, LocalUpdateRef>) {
                j["round"] = v.round;
                j["update"] = to_hex(v.update.digest);
                j["sample_count"] = v.sample_count;
            } else if constexpr (std::is_same_v<T, GlobalModelRecord>) {
                j["round"] = v.round;
                j["model"] = to_hex(v.model.digest);
                j["test_accuracy"] = v.test_accuracy;
                j["converged"] = v.converged;
                j["final"] = v.final;
            } else if constexpr (std::is_same_v<T, SettlementRecord>) {
                j["amount_paid"] = v.amount_paid;
                j["invoice_total"] = v.invoice_total;
            } else if constexpr (std::is_same_v<T, RewardAllocation>) {
                j["recipient"] = v.recipient;
                j["amount"] = v.amount;
                j["reason"] = v.reason;
            }
        },
        p);
    return j;
}

TxPayload payload_from_json(TxKind kind, const json& j) {
    switch (kind) {
        case TxKind::TaskRequest: {
            TaskRequest v;
            v.requestor_id = j.at("requestor_id");
            v.task_description = j.at("task_description");
            v.performance_requirement = j.at("performance_requirement");
            if (j.contains("initial_model"))
                v.initial_model = ContentAddress{digest_from_hex(j.at("initial_model"))};
            return v;
        }
        case TxKind::RecruitmentResult: {
            RecruitmentResult v;
            v.success = j.at("success");
            v.workers = j.at("workers").get<std::vector<std::string>>();
            v.policy = j.at("policy");
            return v;
        }
        case TxKind::SensingPaymentReport: {
            SensingPaymentReport v;
            v.device_id = j.at("device_id");
            v.server_id = j.at("server_id");
            v.valuation = j.at("valuation");
            v.profit = j.at("profit");
            return v;
        }
        case TxKind::LocalUpdateRef: {
            LocalUpdateRef v;
            v.round = j.at("round");
            v.update = ContentAddress{digest_from_hex(j.at("update"))};
            v.sample_count = j.at("sample_count");
            return v;
        }
        case TxKind::GlobalModelRecord: {
            GlobalModelRecord v;
            v.round = j.at("round");
            v.model = ContentAddress{digest_from_hex(j.at("model"))};
            v.test_accuracy = j.at("test_accuracy");
            v.converged = j.at("converged");
            v.final = j.at("final");
            return v;
        }
        case TxKind::SettlementRecord: {
            SettlementRecord v;
            v.amount_paid = j.at("amount_paid");
            v.invoice_total = j.at("invoice_total");
            return v;
        }
        case TxKind::RewardAllocation: {
            RewardAllocation v;
            v.recipient = j.at("recipient");
            v.amount = j.at("amount");
            v.reason = j.at("reason");
            return v;
        }
    }
    throw std::logic_error("unknown TxKind");
}

json tx_to_json(const Transaction& tx, bool with_signature) {
    json j;
    j["kind"] = to_string(tx.kind);
    j["task_id"] = tx.task_id;
    j["payload"] = payload_to_json(tx.payload);
    j["submitter"] = tx.submitter;
    if (with_signature) j["signature"] = to_hex(tx.signature);
    return j;
}

Transaction tx_from_json(const json& j) {
    Transaction tx;
    tx.kind = tx_kind_from_string(j.at("kind"));
    tx.task_id = j.at("task_id");
    tx.payload = payload_from_json(tx.kind, j.at("payload"));
    tx.submitter = j.at("submitter");
    tx.signature = digest_from_hex(j.at("signature"));
    return tx;
}

}  // namespace

std::string Transaction::signing_bytes() const { return tx_to_json(*this, false).dump(); }

std::string serialize_tx(const Transaction& tx) { return tx_to_json(tx, true).dump(); }

Transaction parse_tx(const std::string& text) { return tx_from_json(json::parse(text)); }

Digest Block::compute_hash() const {
    json j;
    j["height"] = height;
    j["prev_hash"] = to_hex(prev_hash);
    j["proposer"] = proposer;
    json txs_j = json::array();
    for (const auto& tx : txs) txs_j.push_back(json::parse(serialize_tx(tx)));
    j["txs"] = txs_j;
    return sha256(j.dump());
}

size_t Block::byte_size() const { return serialize_block(*this).size(); }

std::string serialize_block(const Block& b) {
    json j;
    j["height"] = b.height;
    j["prev_hash"] = to_hex(b.prev_hash);
    j["proposer"] = b.proposer;
    j["block_hash"] = to_hex(b.block_hash);
    json txs_j = json::array();
    for (const auto& tx : b.txs) txs_j.push_back(json::parse(serialize_tx(tx)));
    j["txs"] = txs_j;
    return j.dump();
}

Block parse_block(const std::string& line) {
    json j = json::parse(line);
    Block b;
    b.height = j.at("height");
    b.prev_hash = digest_from_hex(j.at("prev_hash"));
    b.proposer = j.at("proposer");
    b.block_hash = digest_from_hex(j.at("block_hash"));
    for (const auto& tj : j.at("txs")) {
        b.txs.push_back(tx_from_json(tj));
    }
    return b;
}

Block make_genesis() {
    Block g;
    g.height = 0;
    g.prev_hash = Digest{};  // all zero
    g.proposer = "genesis";
    g.block_hash = g.compute_hash();
    return g;
}

}  // namespace mcsl::ledger
