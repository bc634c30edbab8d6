#pragma once

#include <string>
#include <vector>

#include "mcsl/ledger/types.hpp"

namespace mcsl::ledger {

struct WorkerDescriptor {
    std::string id;
    double capacity = 0.0;  // declared sensing capacity
};

// Pluggable selection policy for the recruitment contract.
struct RecruitmentPolicy {
    enum class Kind { SelectAll, TopKByCapacity } kind = Kind::SelectAll;
    size_t k = 0;

    static RecruitmentPolicy select_all() { return {Kind::SelectAll, 0}; }
    static RecruitmentPolicy top_k(size_t k) { return {Kind::TopKByCapacity, k}; }

    std::string name() const;
};

// Deterministic in (req, candidates, policy). Empty candidate pool yields a
// failure record rather than an error.
RecruitmentResult recruit_workers(const TaskRequest& req,
                                  const std::vector<WorkerDescriptor>& candidates,
                                  const RecruitmentPolicy& policy);

}  // namespace mcsl::ledger
