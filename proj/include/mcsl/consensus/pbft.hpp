#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "mcsl/consensus/network.hpp"

namespace mcsl::consensus {

struct ConsensusConfig {
    int n = 4;                 // replica count
    int f = 1;                 // max faulty replicas tolerated
    int reply_quorum = 2;      // matching follower replies the leader waits for (f+1)
    int phase_quorum = 3;      // prepare/commit quorum (2f+1), own message included
    uint64_t view = 0;

    static ConsensusConfig make(int n, int f, uint64_t view = 0) {
        ConsensusConfig c;
        c.n = n;
        c.f = f;
        c.reply_quorum = f + 1;
        c.phase_quorum = 2 * f + 1;
        c.view = view;
        c.validate();
        return c;
    }

    void validate() const {
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (f > 0 && n < 3 * f + 1) throw std::invalid_argument("n >= 3f+1 required when f > 0");
        if (reply_quorum < 1 || reply_quorum > n - 1)
            throw std::invalid_argument("reply quorum must lie in [1, n-1]");
        if (phase_quorum > n) throw std::invalid_argument("phase quorum must be <= n");
    }
};

// Round-robin leader rotation.
NodeId elect_leader(uint64_t view, int n);

// Prepare/Commit/Reply carry digests; PrePrepare carries the block payload on
// top of the same header.
inline constexpr size_t kControlMessageBytes = 4096;

struct RoundResult {
    bool committed = false;
    double elapsed = 0.0;      // PrePrepare send to reply quorum at the leader
    uint64_t messages = 0;     // every ConsensusMessage sent
    double timeout = 0.0;
    // Nodes that committed locally, in id order; used by safety checks.
    std::vector<NodeId> committed_nodes;
};

// One three-phase round over `net` for a block of `payload_bytes`. Faulty
// replicas are silent: they receive but never send. With more than f faults
// the round times out after 10 * (base_latency + preprepare_size/bandwidth).
RoundResult run_consensus_round(const ConsensusConfig& cfg, SimNetwork& net,
                                size_t payload_bytes, const std::set<NodeId>& faulty = {});

struct ScalingPoint {
    int n = 4;
    int servers = 1;            // FL clients feeding the block
    size_t payload_bytes = 0;   // total block payload
};

struct ScalingRow {
    int n;
    int f;
    int servers;
    size_t payload_bytes;
    double elapsed_s;
    uint64_t messages;
};

// One fault-free round per configuration, each with a fresh deterministic
// seed derived from `seed`. Requires at least 3 sample points.
std::vector<ScalingRow> measure_scaling(const std::vector<ScalingPoint>& points,
                                        double base_latency, double bandwidth, uint64_t seed);

}  // namespace mcsl::consensus
