#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "mcsl/common/rng.hpp"

namespace mcsl::consensus {

using NodeId = int;

// Seeded discrete-event network. All replicas share one transmission medium:
// a message occupies it for size/bandwidth seconds (FIFO), then arrives after
// base_latency plus jitter. On an idle medium the delivery time is exactly
// base_latency + size/bandwidth + jitter. Bulk block payloads are broadcast
// as a single occupancy, the way block relay layers disseminate data;
// per-recipient control messages occupy the medium individually.
class SimNetwork {
public:
    SimNetwork(double base_latency, double bandwidth, uint64_t seed)
        : base_latency_(base_latency), bandwidth_(bandwidth), rng_(seed) {}

    double base_latency() const { return base_latency_; }
    double bandwidth() const { return bandwidth_; }
    double clock() const { return clock_; }

    struct Delivery {
        double at = 0.0;
        NodeId sender = 0;
        uint64_t sequence = 0;
        NodeId recipient = 0;
        int tag = 0;  // protocol-defined message tag
    };

    // Queue one transmission to a single recipient.
    void unicast(double now, NodeId from, NodeId to, size_t bytes, int tag) {
        double end = occupy(now, bytes);
        push(end, from, to, tag);
    }

    // One medium occupancy that reaches every listed recipient.
    void broadcast(double now, NodeId from, const std::vector<NodeId>& to, size_t bytes,
                   int tag) {
        double end = occupy(now, bytes);
        for (NodeId dst : to) push(end, from, dst, tag);
    }

    bool idle() const { return events_.empty(); }

    // Pop the earliest delivery; ties broken by (sender, sequence).
    Delivery next() {
        Delivery d = events_.top();
        events_.pop();
        clock_ = d.at;
        return d;
    }

private:
    double occupy(double now, size_t bytes) {
        double start = medium_free_ > now ? medium_free_ : now;
        double end = start + static_cast<double>(bytes) / bandwidth_;
        medium_free_ = end;
        return end;
    }

    void push(double transmit_end, NodeId from, NodeId to, int tag) {
        double jitter = rng_.uniform01() * 0.1 * base_latency_;
        events_.push(Delivery{transmit_end + base_latency_ + jitter, from, next_seq_++, to, tag});
    }

    struct Later {
        bool operator()(const Delivery& a, const Delivery& b) const {
            if (a.at != b.at) return a.at > b.at;
            if (a.sender != b.sender) return a.sender > b.sender;
            return a.sequence > b.sequence;
        }
    };

    double base_latency_;
    double bandwidth_;
    Rng rng_;
    double clock_ = 0.0;
    double medium_free_ = 0.0;
    uint64_t next_seq_ = 0;
    std::priority_queue<Delivery, std::vector<Delivery>, Later> events_;
};

}  // namespace mcsl::consensus
