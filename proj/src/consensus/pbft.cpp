#include "mcsl/consensus/pbft.hpp"

#include "mcsl/common/rng.hpp"

namespace mcsl::consensus {

NodeId elect_leader(uint64_t view, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return static_cast<NodeId>(view % static_cast<uint64_t>(n));
}

namespace {
enum Tag { kPrePrepare, kPrepare, kCommit, kReply };
}

RoundResult run_consensus_round(const ConsensusConfig& cfg, SimNetwork& net,
                                size_t payload_bytes, const std::set<NodeId>& faulty) {
    cfg.validate();
    const int n = cfg.n;
    const NodeId leader = elect_leader(cfg.view, n);
    const size_t preprepare_bytes = kControlMessageBytes + payload_bytes;
    const double t0 = net.clock();
    const double timeout =
        10.0 * (net.base_latency() + static_cast<double>(preprepare_bytes) / net.bandwidth());

    RoundResult res;
    res.timeout = timeout;

    std::vector<bool> has_pp(n, false), prepared(n, false), committed(n, false), replied(n, false);
    std::vector<int> prep_count(n, 0), commit_count(n, 0);
    int replies = 0;

    std::vector<NodeId> others;
    auto others_of = [&](NodeId self) {
        others.clear();
        for (NodeId d = 0; d < n; ++d)
            if (d != self) others.push_back(d);
        return others;
    };

    auto send_prepares = [&](double now, NodeId from) {
        for (NodeId d : others_of(from)) {
            net.unicast(now, from, d, kControlMessageBytes, kPrepare);
            ++res.messages;
        }
    };
    auto send_commits = [&](double now, NodeId from) {
        for (NodeId d : others_of(from)) {
            net.unicast(now, from, d, kControlMessageBytes, kCommit);
            ++res.messages;
        }
    };

    // Phase transitions are re-checked after every delivery for the node.
    auto advance = [&](double now, NodeId node) {
        if (has_pp[node] && !prepared[node] && prep_count[node] >= cfg.phase_quorum) {
            prepared[node] = true;
            ++commit_count[node];  // own commit
            send_commits(now, node);
        }
        if (prepared[node] && !committed[node] && commit_count[node] >= cfg.phase_quorum) {
            committed[node] = true;
            if (node != leader && !replied[node]) {
                replied[node] = true;
                net.unicast(now, node, leader, kControlMessageBytes, kReply);
                ++res.messages;
            }
        }
    };

    if (!faulty.count(leader)) {
        net.broadcast(t0, leader, others_of(leader), preprepare_bytes, kPrePrepare);
        res.messages += static_cast<uint64_t>(n - 1);
        has_pp[leader] = true;
        ++prep_count[leader];  // leader's own prepare
        send_prepares(t0, leader);
        advance(t0, leader);
    }

    while (!net.idle()) {
        auto d = net.next();
        if (d.at - t0 > timeout) break;
        if (faulty.count(d.recipient)) continue;  // silent replica: receives, never reacts
        NodeId node = d.recipient;
        switch (d.tag) {
            case kPrePrepare:
                if (!has_pp[node]) {
                    has_pp[node] = true;
                    ++prep_count[node];  // own prepare
                    send_prepares(d.at, node);
                }
                break;
            case kPrepare: ++prep_count[node]; break;
            case kCommit: ++commit_count[node]; break;
            case kReply:
                if (node == leader) {
                    ++replies;
                    if (!res.committed && replies >= cfg.reply_quorum) {
                        res.committed = true;
                        res.elapsed = d.at - t0;
                    }
                }
                break;
        }
        advance(d.at, node);
        if (res.committed) break;
    }

    if (!res.committed) res.elapsed = timeout;
    for (NodeId v = 0; v < n; ++v)
        if (committed[v]) res.committed_nodes.push_back(v);
    return res;
}

std::vector<ScalingRow> measure_scaling(const std::vector<ScalingPoint>& points,
                                        double base_latency, double bandwidth, uint64_t seed) {
    if (points.size() < 3) throw std::invalid_argument("need at least 3 sample points");
    std::vector<ScalingRow> rows;
    rows.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        const int f = pt.n >= 4 ? (pt.n - 1) / 3 : 0;
        ConsensusConfig cfg = ConsensusConfig::make(pt.n, f);
        SimNetwork net(base_latency, bandwidth, Rng::mix(seed, i));
        RoundResult r = run_consensus_round(cfg, net, pt.payload_bytes);
        rows.push_back({pt.n, f, pt.servers, pt.payload_bytes, r.elapsed, r.messages});
    }
    return rows;
}

}  // namespace mcsl::consensus
