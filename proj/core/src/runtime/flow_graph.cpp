// SPDX-License-Identifier: Apache-2.0
#include "sdr/flow_graph.hpp"

#include <algorithm>
#include <sstream>

namespace sdr {

namespace {
constexpr std::size_t kUnconnected = static_cast<std::size_t>(-1);

std::uint64_t ns_to_cycles(std::uint64_t ns, std::uint64_t hz) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>(static_cast<u128>(ns) * hz / 1'000'000'000u);
}
}  // namespace

void FlowGraph::add_block(const std::shared_ptr<Block>& b) {
    if (!b) throw GraphError("null block");
    for (const auto& existing : blocks_)
        if (existing == b) return;
    blocks_.push_back(b);
    in_edge_.emplace_back(b->inputs().size(), kUnconnected);
    out_edge_.emplace_back(b->outputs().size(), kUnconnected);
    b->counters().configure(b->inputs().size(), b->outputs().size());
    runnable_ = false;
}

std::size_t FlowGraph::index_of(const std::shared_ptr<Block>& b) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] == b) return i;
    throw GraphError("block '" + b->name() + "' is not part of this graph");
}

void FlowGraph::connect(const std::shared_ptr<Block>& src, std::size_t out_port,
                        const std::shared_ptr<Block>& dst, std::size_t in_port,
                        std::size_t capacity) {
    add_block(src);
    add_block(dst);
    const std::size_t si = index_of(src);
    const std::size_t di = index_of(dst);

    if (out_port >= src->outputs().size())
        throw GraphError("block '" + src->name() + "' has no output port " + std::to_string(out_port));
    if (in_port >= dst->inputs().size())
        throw GraphError("block '" + dst->name() + "' has no input port " + std::to_string(in_port));

    const PortDesc& op = src->outputs()[out_port];
    const PortDesc& ip = dst->inputs()[in_port];
    if (op.kind != ip.kind) {
        throw GraphError("kind mismatch on " + src->name() + "." + op.name + " (" + op.kind.str() +
                         ") -> " + dst->name() + "." + ip.name + " (" + ip.kind.str() + ")");
    }
    if (in_edge_[di][in_port] != kUnconnected)
        throw GraphError("input " + dst->name() + "." + ip.name + " is already connected");
    if (out_edge_[si][out_port] != kUnconnected)
        throw GraphError("output " + src->name() + "." + op.name + " is already connected");

    Edge e;
    e.src_block = si;
    e.src_port = out_port;
    e.dst_block = di;
    e.dst_port = in_port;
    e.buffer = std::make_unique<RingBuffer>(op.kind, capacity);
    e.name = src->name() + "." + op.name + "->" + dst->name() + "." + ip.name;
    edges_.push_back(std::move(e));
    in_edge_[di][in_port] = edges_.size() - 1;
    out_edge_[si][out_port] = edges_.size() - 1;
    runnable_ = false;
}

ValidationReport FlowGraph::validate() {
    ValidationReport report;

    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (std::size_t p = 0; p < blocks_[b]->inputs().size(); ++p) {
            if (in_edge_[b][p] == kUnconnected) {
                report.issues.push_back({ValidationIssue::Kind::UnconnectedInput,
                                         "input " + blocks_[b]->name() + "." +
                                             blocks_[b]->inputs()[p].name + " is unconnected"});
            }
        }
    }

    // Kind agreement is enforced at connect(); re-check in case port
    // descriptors were mutated after wiring.
    for (const auto& e : edges_) {
        const auto& ok = blocks_[e.src_block]->outputs()[e.src_port].kind;
        const auto& ik = blocks_[e.dst_block]->inputs()[e.dst_port].kind;
        if (ok != ik)
            report.issues.push_back({ValidationIssue::Kind::KindMismatch, "kind mismatch on " + e.name});
    }

    // Kahn topological check over stream edges.
    std::vector<std::size_t> indeg(blocks_.size(), 0);
    for (const auto& e : edges_) ++indeg[e.dst_block];
    std::vector<std::size_t> order;
    order.reserve(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        if (indeg[b] == 0) order.push_back(b);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& e : edges_) {
            if (e.src_block == order[i] && --indeg[e.dst_block] == 0) order.push_back(e.dst_block);
        }
    }
    if (order.size() != blocks_.size()) {
        std::ostringstream os;
        os << "cycle involving {";
        bool first = true;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (indeg[b] > 0) {
                os << (first ? "" : ", ") << blocks_[b]->name();
                first = false;
            }
        }
        os << "}";
        report.issues.push_back({ValidationIssue::Kind::Cycle, os.str()});
    }

    report.runnable = report.issues.empty();
    runnable_ = report.runnable;
    return report;
}

CounterSnapshot FlowGraph::snapshot_counters() const {
    CounterSnapshot snap;
    snap.nominal_hz = last_nominal_hz_;
    if (run_start_.time_since_epoch().count() != 0) {
        snap.timestamp_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                 run_start_)
                .count());
    }
    snap.blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        BlockCounters bc;
        bc.name = b->name();
        const PerfCounters& c = b->counters();
        bc.work_calls = c.work_calls();
        bc.time_ns = c.time_ns();
        bc.cycles = ns_to_cycles(bc.time_ns, snap.nominal_hz);
        bc.avg_cycles_per_call =
            bc.work_calls ? static_cast<double>(bc.cycles) / static_cast<double>(bc.work_calls) : 0.0;
        bc.items_in.resize(c.n_in());
        for (std::size_t p = 0; p < c.n_in(); ++p) bc.items_in[p] = c.items_in(p);
        bc.items_out.resize(c.n_out());
        for (std::size_t p = 0; p < c.n_out(); ++p) bc.items_out[p] = c.items_out(p);
        bc.extra = b->extra_metrics();
        snap.blocks.push_back(std::move(bc));
    }
    return snap;
}

}  // namespace sdr
