// SPDX-License-Identifier: Apache-2.0
//
// Round-robin scheduler over runnable blocks. One sweep offers every
// block a bounded window (chunk cap, never below the port minimum);
// end-of-stream propagates through edge EOF flags and blocks drain
// residual data before the run completes. With several workers the
// block set is partitioned statically, which keeps every ring buffer
// single-producer single-consumer.
#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "sdr/flow_graph.hpp"

namespace sdr {

namespace {
constexpr std::size_t kUnconnected = static_cast<std::size_t>(-1);
using Clock = std::chrono::steady_clock;
}  // namespace

class Scheduler {
public:
    Scheduler(FlowGraph& graph, const RunOptions& opts)
        : g_(graph), opts_(opts), state_(graph.blocks_.size()) {
        const std::size_t n = g_.blocks_.size();
        for (std::size_t i = 0; i < n; ++i) {
            auto& st = state_[i];
            const Block& b = *g_.blocks_[i];
            st.in_scratch.resize(b.inputs().size());
            st.out_scratch.resize(b.outputs().size());
            st.consumed.resize(b.inputs().size());
            st.produced.resize(b.outputs().size());
            b.counters();
        }
        topo_order();
    }

    RunReport run();

private:
    struct BlockState {
        std::atomic<bool> done{false};
        bool flushed = false;  // saw a no-progress call with all inputs finished
        std::uint64_t source_produced = 0;
        std::vector<std::vector<std::byte>> in_scratch;
        std::vector<std::vector<std::byte>> out_scratch;
        std::vector<std::size_t> consumed;
        std::vector<std::size_t> produced;
    };

    void topo_order() {
        const std::size_t n = g_.blocks_.size();
        std::vector<std::size_t> indeg(n, 0);
        for (const auto& e : g_.edges_) ++indeg[e.dst_block];
        order_.reserve(n);
        for (std::size_t b = 0; b < n; ++b)
            if (indeg[b] == 0) order_.push_back(b);
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (const auto& e : g_.edges_)
                if (e.src_block == order_[i] && --indeg[e.dst_block] == 0)
                    order_.push_back(e.dst_block);
    }

    RingBuffer* in_buffer(std::size_t bi, std::size_t port) {
        const std::size_t ei = g_.in_edge_[bi][port];
        return ei == kUnconnected ? nullptr : g_.edges_[ei].buffer.get();
    }
    RingBuffer* out_buffer(std::size_t bi, std::size_t port) {
        const std::size_t ei = g_.out_edge_[bi][port];
        return ei == kUnconnected ? nullptr : g_.edges_[ei].buffer.get();
    }
    // Output buffer as seen by the producer: an edge whose consumer already
    // finished behaves like an unconnected port (writes are discarded), so an
    // early-stopping sink cannot wedge its upstream chain.
    RingBuffer* live_out_buffer(std::size_t bi, std::size_t port) {
        RingBuffer* rb = out_buffer(bi, port);
        return (rb && rb->abandoned()) ? nullptr : rb;
    }

    void finish_block(std::size_t bi) {
        auto& st = state_[bi];
        if (st.done.exchange(true, std::memory_order_acq_rel)) return;
        for (std::size_t p = 0; p < g_.blocks_[bi]->outputs().size(); ++p)
            if (RingBuffer* rb = out_buffer(bi, p)) rb->set_eof();
        for (std::size_t p = 0; p < g_.blocks_[bi]->inputs().size(); ++p)
            if (RingBuffer* rb = in_buffer(bi, p)) rb->abandon();
        done_count_.fetch_add(1, std::memory_order_acq_rel);
    }

    bool all_done() const {
        return done_count_.load(std::memory_order_acquire) == g_.blocks_.size();
    }

    // Runs one activation if the block's windows allow it. Returns true if
    // anything observable changed (items moved or lifecycle advanced).
    bool try_activate(std::size_t bi);

    bool sweep(std::span<const std::size_t> blocks) {
        bool any = false;
        for (std::size_t bi : blocks) any |= try_activate(bi);
        return any;
    }

    [[noreturn]] void report_deadlock() const;

    void run_single();
    void run_multi();

    FlowGraph& g_;
    RunOptions opts_;
    std::vector<BlockState> state_;
    std::vector<std::size_t> order_;
    std::atomic<std::size_t> done_count_{0};
    std::atomic<bool> sources_cut_{false};
    std::atomic<bool> stop_{false};
    std::atomic<std::uint64_t> global_progress_{0};
    std::atomic<bool> budget_hit_{false};
    bool wall_hit_ = false;
    std::exception_ptr worker_error_;
    std::mutex error_mutex_;
    Clock::time_point t0_;
};

bool Scheduler::try_activate(std::size_t bi) {
    BlockState& st = state_[bi];
    if (st.done.load(std::memory_order_acquire)) return false;

    Block& blk = *g_.blocks_[bi];
    const auto in_ports = blk.inputs();
    const auto out_ports = blk.outputs();

    // Source lifecycle: wall-clock cutoff or item budget turns a source
    // into an exhausted one; downstream still drains.
    if (in_ports.empty()) {
        if (sources_cut_.load(std::memory_order_acquire)) {
            finish_block(bi);
            return true;
        }
    }

    // Input readiness.
    bool all_inputs_finished = !in_ports.empty();
    std::size_t budget_room = static_cast<std::size_t>(-1);
    if (in_ports.empty() && opts_.source_item_budget) {
        if (st.source_produced >= *opts_.source_item_budget) {
            budget_hit_.store(true, std::memory_order_relaxed);
            finish_block(bi);
            return true;
        }
        budget_room = static_cast<std::size_t>(*opts_.source_item_budget - st.source_produced);
    }

    std::size_t n_in = in_ports.size(), n_out = out_ports.size();
    if (n_in > 16 || n_out > 16)
        throw RunError("block '" + blk.name() + "' exceeds the 16-port scheduler limit");
    std::size_t avail[16];
    bool in_eof[16];
    for (std::size_t p = 0; p < n_in; ++p) {
        RingBuffer* rb = in_buffer(bi, p);
        assert(rb);  // validated: all inputs connected
        // Load order matters across threads: eof() (acquire) before
        // readable(). set_eof() is a release store sequenced after the
        // producer's final commit, so once eof reads true the write index
        // read next is guaranteed current — "eof && avail == 0" then means
        // genuinely drained, never "final items not yet visible".
        in_eof[p] = rb->eof();
        avail[p] = rb->readable();
        if (!in_eof[p] && avail[p] < in_ports[p].min_items) return false;
        if (!(in_eof[p] && avail[p] == 0)) all_inputs_finished = false;
    }
    if (all_inputs_finished && st.flushed) {
        finish_block(bi);
        return true;
    }

    // Output space.
    std::size_t space[16];
    for (std::size_t p = 0; p < n_out; ++p) {
        RingBuffer* rb = live_out_buffer(bi, p);
        space[p] = rb ? rb->writable() : std::max(opts_.chunk_items, out_ports[p].min_items);
        if (space[p] < out_ports[p].min_items) return false;
    }

    // Window sizes: chunk-capped, but never below the declared minimum.
    // A min_items == 0 input is a sparse side channel: it neither gates
    // activation nor falls under the chunk cap, so a consumer always sees
    // every buffered record regardless of how the main stream is diced.
    std::size_t in_n[16], out_n[16];
    for (std::size_t p = 0; p < n_in; ++p)
        in_n[p] = in_ports[p].min_items == 0
                      ? avail[p]
                      : std::min(avail[p], std::max(opts_.chunk_items, in_ports[p].min_items));
    for (std::size_t p = 0; p < n_out; ++p) {
        out_n[p] = std::min(space[p], std::max(opts_.chunk_items, out_ports[p].min_items));
        if (in_ports.empty()) out_n[p] = std::min(out_n[p], budget_room);
    }

    // Materialize contiguous windows (scratch copy only across the wrap).
    InputWindow iw[16];
    OutputWindow ow[16];
    bool out_direct[16];
    for (std::size_t p = 0; p < n_in; ++p) {
        RingBuffer* rb = in_buffer(bi, p);
        const std::size_t ib = in_ports[p].kind.bytes();
        auto win = rb->read_window();
        if (win.size() >= in_n[p] * ib) {
            iw[p].raw = win.first(in_n[p] * ib);
        } else {
            auto& scratch = st.in_scratch[p];
            scratch.resize(in_n[p] * ib);
            rb->peek(scratch.data(), in_n[p]);
            iw[p].raw = {scratch.data(), scratch.size()};
        }
        iw[p].eof = in_eof[p];
        iw[p].consumed = 0;
    }
    for (std::size_t p = 0; p < n_out; ++p) {
        RingBuffer* rb = live_out_buffer(bi, p);
        const std::size_t ib = out_ports[p].kind.bytes();
        out_direct[p] = false;
        if (rb) {
            auto win = rb->write_window();
            if (win.size() >= out_n[p] * ib) {
                ow[p].raw = win.first(out_n[p] * ib);
                out_direct[p] = true;
            }
        }
        if (!out_direct[p]) {
            auto& scratch = st.out_scratch[p];
            scratch.resize(out_n[p] * ib);
            ow[p].raw = {scratch.data(), scratch.size()};
        }
        ow[p].produced = 0;
    }

    WorkContext ctx{{iw, n_in}, {ow, n_out}};
    WorkStatus status;
    const auto w0 = Clock::now();
    try {
        status = blk.work(ctx);
    } catch (const std::exception& e) {
        throw RunError("block '" + blk.name() + "' failed: " + e.what());
    }
    const auto elapsed_ns =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - w0).count());

    // Commit within the offered bounds.
    bool moved = false;
    for (std::size_t p = 0; p < n_in; ++p) {
        if (iw[p].consumed > in_n[p])
            throw RunError("block '" + blk.name() + "' consumed beyond its input window");
        if (iw[p].consumed) {
            in_buffer(bi, p)->commit_read(iw[p].consumed);
            moved = true;
        }
        st.consumed[p] = iw[p].consumed;
    }
    for (std::size_t p = 0; p < n_out; ++p) {
        if (ow[p].produced > out_n[p])
            throw RunError("block '" + blk.name() + "' produced beyond its output window");
        if (RingBuffer* rb = live_out_buffer(bi, p); rb && ow[p].produced) {
            if (!out_direct[p]) rb->poke(st.out_scratch[p].data(), ow[p].produced);
            rb->commit_write(ow[p].produced);
        }
        if (ow[p].produced) moved = true;
        st.produced[p] = ow[p].produced;
        if (in_ports.empty()) st.source_produced += ow[p].produced;
    }

    if (opts_.profiling) blk.counters().on_work(st.consumed, st.produced, elapsed_ns);

    if (status == WorkStatus::Done) {
        finish_block(bi);
        return true;
    }
    if (all_inputs_finished && !moved) {
        st.flushed = true;
        finish_block(bi);
        return true;
    }
    return moved;
}

void Scheduler::report_deadlock() const {
    // Prefer naming an edge whose capacity can never satisfy the consumer
    // or producer window; otherwise name a full edge.
    std::ostringstream os;
    for (std::size_t bi = 0; bi < g_.blocks_.size(); ++bi) {
        if (state_[bi].done.load(std::memory_order_acquire)) continue;
        const Block& blk = *g_.blocks_[bi];
        for (std::size_t p = 0; p < blk.inputs().size(); ++p) {
            const std::size_t ei = g_.in_edge_[bi][p];
            if (ei == kUnconnected) continue;
            const auto& e = g_.edges_[ei];
            if (blk.inputs()[p].min_items > e.buffer->capacity()) {
                os << "deadlock: edge " << e.name << " (capacity " << e.buffer->capacity()
                   << ") cannot satisfy the " << blk.inputs()[p].min_items << "-item window of '"
                   << blk.name() << "'";
                throw RunError(os.str());
            }
        }
    }
    for (const auto& e : g_.edges_) {
        if (!e.buffer->abandoned() && e.buffer->occupancy() == e.buffer->capacity()) {
            os << "deadlock: edge " << e.name << " saturated at capacity " << e.buffer->capacity();
            throw RunError(os.str());
        }
    }
    throw RunError("deadlock: no block can make progress and sources are not exhausted");
}

void Scheduler::run_single() {
    for (;;) {
        if (opts_.wall_clock_budget && !sources_cut_.load(std::memory_order_relaxed) &&
            Clock::now() - t0_ >= *opts_.wall_clock_budget) {
            sources_cut_.store(true, std::memory_order_release);
            wall_hit_ = true;
        }
        const bool any = sweep(order_);
        if (all_done()) return;
        if (!any) report_deadlock();
    }
}

void Scheduler::run_multi() {
    const int n_workers = std::max(1, opts_.workers);
    std::vector<std::vector<std::size_t>> partition(n_workers);
    for (std::size_t i = 0; i < order_.size(); ++i)
        partition[i % n_workers].push_back(order_[i]);

    std::atomic<int> alive{0};
    std::vector<std::thread> threads;
    for (int w = 0; w < n_workers; ++w) {
        if (partition[w].empty()) continue;
        alive.fetch_add(1);
        threads.emplace_back([this, &alive, blocks = partition[w]] {
            std::chrono::microseconds backoff{0};
            try {
                while (!stop_.load(std::memory_order_acquire)) {
                    bool alldone = true;
                    bool any = false;
                    for (std::size_t bi : blocks) {
                        if (!state_[bi].done.load(std::memory_order_acquire)) {
                            alldone = false;
                            any |= try_activate(bi);
                        }
                    }
                    if (alldone) break;
                    if (any) {
                        global_progress_.fetch_add(1, std::memory_order_release);
                        backoff = std::chrono::microseconds{0};
                    } else {
                        if (backoff.count()) std::this_thread::sleep_for(backoff);
                        backoff = std::min(backoff * 2 + std::chrono::microseconds{1},
                                           std::chrono::microseconds{200});
                    }
                }
            } catch (...) {
                std::scoped_lock lk(error_mutex_);
                if (!worker_error_) worker_error_ = std::current_exception();
                stop_.store(true, std::memory_order_release);
            }
            alive.fetch_sub(1, std::memory_order_acq_rel);
        });
    }

    // Monitor: wall-clock cutoff and stall detection.
    std::uint64_t last_progress = global_progress_.load();
    auto stall_since = Clock::now();
    bool deadlock = false;
    while (alive.load(std::memory_order_acquire) > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(1));
        if (opts_.wall_clock_budget && !sources_cut_.load(std::memory_order_relaxed) &&
            Clock::now() - t0_ >= *opts_.wall_clock_budget) {
            sources_cut_.store(true, std::memory_order_release);
            wall_hit_ = true;
        }
        const auto cur = global_progress_.load(std::memory_order_acquire);
        if (cur != last_progress) {
            last_progress = cur;
            stall_since = Clock::now();
        } else if (Clock::now() - stall_since > std::chrono::seconds(2) && !all_done()) {
            deadlock = true;
            stop_.store(true, std::memory_order_release);
            break;
        }
    }
    for (auto& t : threads) t.join();
    if (worker_error_) std::rethrow_exception(worker_error_);
    if (deadlock) report_deadlock();
}

RunReport Scheduler::run() {
    t0_ = Clock::now();
    g_.run_start_ = t0_;
    g_.last_nominal_hz_ = opts_.nominal_hz;
    for (const auto& b : g_.blocks_) b->counters().reset();

    if (opts_.workers <= 1)
        run_single();
    else
        run_multi();

    RunReport report;
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0_);
    report.counters = g_.snapshot_counters();
    report.edges.reserve(g_.edges_.size());
    for (const auto& e : g_.edges_) {
        EdgeStats s;
        s.name = e.name;
        s.capacity = e.buffer->capacity();
        s.high_water = e.buffer->high_water();
        s.item_bytes = e.buffer->kind().bytes();
        s.final_occupancy = e.buffer->occupancy();
        s.total_items = e.buffer->total_written();
        report.edges.push_back(std::move(s));
    }
    report.termination = wall_hit_ ? Termination::WallClock
                         : budget_hit_.load() ? Termination::ItemBudget
                                              : Termination::SourcesExhausted;
    return report;
}

RunReport FlowGraph::run(const RunOptions& opts) {
    if (!runnable_) {
        auto rep = validate();
        if (!rep.runnable) {
            std::string msg = "graph is not runnable:";
            for (const auto& i : rep.issues) msg += " [" + i.message + "]";
            throw RunError(msg);
        }
    }
    Scheduler sched(*this, opts);
    return sched.run();
}

}  // namespace sdr
