#include "mcsl/ledger/recruitment.hpp"

#include <algorithm>

namespace mcsl::ledger {

std::string RecruitmentPolicy::name() const {
    switch (kind) {
        case Kind::SelectAll: return "select-all";
        case Kind::TopKByCapacity: return "top-" + std::to_string(k) + "-by-capacity";
    }
    return "?";
}

RecruitmentResult recruit_workers(const TaskRequest& req,
                                  const std::vector<WorkerDescriptor>& candidates,
                                  const RecruitmentPolicy& policy) {
    (void)req;  // current policies do not inspect the request beyond triggering
    RecruitmentResult res;
    res.policy = policy.name();
    if (candidates.empty()) {
        res.success = false;
        return res;
    }
    std::vector<WorkerDescriptor> pool = candidates;
    // Higher capacity first; ties broken by lowest identity.
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        if (a.capacity != b.capacity) return a.capacity > b.capacity;
        return a.id < b.id;
    });
    size_t take = pool.size();
    if (policy.kind == RecruitmentPolicy::Kind::TopKByCapacity)
        take = std::min(policy.k, pool.size());
    res.success = take > 0;
    for (size_t i = 0; i < take; ++i) res.workers.push_back(pool[i].id);
    if (policy.kind == RecruitmentPolicy::Kind::SelectAll) {
        // keep the callers' ordering for select-all
        res.workers.clear();
        for (const auto& w : candidates) res.workers.push_back(w.id);
    }
    return res;
}

}  // namespace mcsl::ledger
