#include "mcsl/ledger/ledger.hpp"

#include <sstream>
#include <stdexcept>

namespace mcsl::ledger {

const char* to_string(ValidationResult::Reason r) {
    using R = ValidationResult::Reason;
    switch (r) {
        case R::Ok: return "ok";
        case R::BadHeight: return "bad height";
        case R::BadPrevHash: return "bad prev hash";
        case R::BadBlockHash: return "bad block hash";
        case R::BadSignature: return "bad signature";
    }
    return "?";
}

ValidationResult validate_block(const Chain& chain, const Block& block, const KeyStore& keys) {
    using R = ValidationResult::Reason;
    const uint64_t want_height = chain.next_height();
    if (block.height != want_height) {
        return ValidationResult::reject(
            R::BadHeight, "height " + std::to_string(block.height) + ", expected " +
                              std::to_string(want_height));
    }
    const Digest want_prev = chain.blocks.empty() ? Digest{} : chain.blocks.back().block_hash;
    if (block.prev_hash != want_prev) return ValidationResult::reject(R::BadPrevHash, "prev hash mismatch");
    if (block.compute_hash() != block.block_hash)
        return ValidationResult::reject(R::BadBlockHash, "block hash does not recompute");
    for (size_t i = 0; i < block.txs.size(); ++i) {
        if (!keys.verify(block.txs[i])) {
            return ValidationResult::reject(
                R::BadSignature, "tx " + std::to_string(i) + " from " + block.txs[i].submitter);
        }
    }
    return ValidationResult::accept();
}

ValidationResult validate_chain(const Chain& chain, const KeyStore& keys) {
    Chain prefix;
    for (const auto& b : chain.blocks) {
        if (b.height == 0) {
            // genesis carries no signatures and a zero prev hash
            if (b.prev_hash != Digest{} || b.compute_hash() != b.block_hash)
                return ValidationResult::reject(ValidationResult::Reason::BadBlockHash, "genesis");
            prefix.blocks.push_back(b);
            continue;
        }
        auto res = validate_block(prefix, b, keys);
        if (!res.ok) return res;
        prefix.blocks.push_back(b);
    }
    return ValidationResult::accept();
}

Ledger::Ledger(KeyStore& keys) : keys_(keys) { chain_.blocks.push_back(make_genesis()); }

void Ledger::install_recruitment_contract(RecruitmentPolicy policy,
                                          std::vector<WorkerDescriptor> candidates) {
    recruitment_ = Contract{policy, std::move(candidates)};
    if (!keys_.known("recruitment-contract")) keys_.register_participant("recruitment-contract", 0);
}

uint64_t Ledger::publish_task(const TaskRequest& req) {
    if (!(req.performance_requirement > 0.0 && req.performance_requirement < 1.0)) {
        throw std::invalid_argument("performance requirement must lie in (0,1)");
    }
    const uint64_t id = next_task_id_++;
    submit(TxKind::TaskRequest, id, req, req.requestor_id);
    return id;
}

Transaction& Ledger::submit(TxKind kind, uint64_t task_id, TxPayload payload,
                            const std::string& submitter) {
    Transaction tx;
    tx.kind = kind;
    tx.task_id = task_id;
    tx.payload = std::move(payload);
    tx.submitter = submitter;
    keys_.sign(tx);
    pending_.push_back(std::move(tx));
    return pending_.back();
}

Transaction& Ledger::submit_signed(Transaction tx) {
    pending_.push_back(std::move(tx));
    return pending_.back();
}

const Block& Ledger::commit_pending(const std::string& proposer,
                                    std::vector<Transaction>* discarded) {
    Block b;
    b.height = chain_.next_height();
    b.prev_hash = chain_.blocks.back().block_hash;
    b.proposer = proposer;
    for (auto& tx : pending_) {
        if (keys_.verify(tx)) {
            b.txs.push_back(std::move(tx));
        } else if (discarded) {
            discarded->push_back(std::move(tx));
        }
    }
    pending_.clear();
    b.block_hash = b.compute_hash();
    auto res = validate_block(chain_, b, keys_);
    if (!res.ok) throw std::logic_error(std::string("commit produced invalid block: ") + to_string(res.reason));
    chain_.blocks.push_back(std::move(b));
    const Block& committed = chain_.blocks.back();
    run_contracts(committed);
    return committed;
}

void Ledger::run_contracts(const Block& committed) {
    if (!recruitment_) return;
    for (const auto& tx : committed.txs) {
        if (tx.kind != TxKind::TaskRequest) continue;
        const auto& req = std::get<TaskRequest>(tx.payload);
        RecruitmentResult res =
            recruit_workers(req, recruitment_->candidates, recruitment_->policy);
        submit(TxKind::RecruitmentResult, tx.task_id, res, "recruitment-contract");
    }
}

std::vector<Transaction> Ledger::query_task_records(uint64_t task_id) const {
    std::vector<Transaction> out;
    for (const auto& b : chain_.blocks)
        for (const auto& tx : b.txs)
            if (tx.task_id == task_id) out.push_back(tx);
    return out;
}

std::optional<ContentAddress> Ledger::find_historical_model(
    const std::string& task_description) const {
    // Which task ids carry this description?
    std::vector<uint64_t> matching;
    for (const auto& b : chain_.blocks)
        for (const auto& tx : b.txs)
            if (tx.kind == TxKind::TaskRequest &&
                std::get<TaskRequest>(tx.payload).task_description == task_description)
                matching.push_back(tx.task_id);
    std::optional<ContentAddress> latest;
    for (const auto& b : chain_.blocks)
        for (const auto& tx : b.txs)
            if (tx.kind == TxKind::GlobalModelRecord) {
                const auto& gm = std::get<GlobalModelRecord>(tx.payload);
                if (!gm.final) continue;
                for (uint64_t id : matching)
                    if (tx.task_id == id) latest = gm.model;
            }
    return latest;
}

std::string Ledger::export_chain() const {
    std::string out;
    for (const auto& b : chain_.blocks) {
        out += serialize_block(b);
        out += '\n';
    }
    return out;
}

void Ledger::import_chain(const std::string& text) {
    Chain c;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Block b;
        try {
            b = parse_block(line);
        } catch (const std::exception& e) {
            throw std::invalid_argument("chain import: line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
        c.blocks.push_back(std::move(b));
    }
    auto res = validate_chain(c, keys_);
    if (!res.ok)
        throw std::invalid_argument(std::string("chain import: ") + to_string(res.reason) + ": " +
                                    res.detail);
    chain_ = std::move(c);
    pending_.clear();
}

}  // namespace mcsl::ledger
