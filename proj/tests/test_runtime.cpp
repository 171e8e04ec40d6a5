// SPDX-License-Identifier: Apache-2.0
//
// Ring buffer, graph construction/validation, and scheduler behavior.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "sdr/dsp/blocks.hpp"
#include "sdr/flow_graph.hpp"
#include "sdr/ring_buffer.hpp"
#include "sdr/types.hpp"

using namespace sdr;

namespace {

std::vector<std::byte> pack_ints(const std::vector<std::int32_t>& v) {
    return dsp::VectorSource::pack(v);
}

std::vector<std::int32_t> iota_ints(std::size_t n) {
    std::vector<std::int32_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

/// Multiplies int32 samples by a constant; used to exercise scheduling.
class Scale : public Block {
public:
    Scale(std::string name, std::int32_t k) : Block(std::move(name)), k_(k) {
        add_input({"in", ItemKind::int32()});
        add_output({"out", ItemKind::int32()});
    }
    WorkStatus work(WorkContext& ctx) override {
        auto in = ctx.in[0].as<std::int32_t>();
        auto out = ctx.out[0].as<std::int32_t>();
        const std::size_t n = std::min(in.size(), out.size());
        for (std::size_t i = 0; i < n; ++i) out[i] = in[i] * k_;
        ctx.in[0].consumed = n;
        ctx.out[0].produced = n;
        return WorkStatus::Ok;
    }

private:
    std::int32_t k_;
};

/// Declares an input window the scheduler must honor as a whole.
class NeedsBigWindow : public Block {
public:
    NeedsBigWindow(std::string name, std::size_t min_items) : Block(std::move(name)) {
        add_input({"in", ItemKind::int32(), min_items});
    }
    WorkStatus work(WorkContext& ctx) override {
        ctx.in[0].consumed = ctx.in[0].items(sizeof(std::int32_t));
        return WorkStatus::Ok;
    }
};

}  // namespace

TEST_CASE("ring buffer capacity rounds up to a power of two") {
    CHECK(RingBuffer::round_up_pow2(0) == 2);
    CHECK(RingBuffer::round_up_pow2(1) == 2);
    CHECK(RingBuffer::round_up_pow2(2) == 2);
    CHECK(RingBuffer::round_up_pow2(3) == 4);
    CHECK(RingBuffer::round_up_pow2(4096) == 4096);
    CHECK(RingBuffer::round_up_pow2(4097) == 8192);
    RingBuffer rb(ItemKind::int32(), 100);
    CHECK(rb.capacity() == 128);
}

TEST_CASE("ring buffer write/read round trip across the wrap point") {
    RingBuffer rb(ItemKind::int32(), 8);
    REQUIRE(rb.capacity() == 8);
    std::uint64_t next_write = 0, next_read = 0;
    // Push/pop unequal batch sizes for several laps so the positions wrap.
    for (int lap = 0; lap < 50; ++lap) {
        const std::size_t want = 1 + (lap % 5);
        const std::size_t can = std::min(want, rb.writable());
        for (std::size_t i = 0; i < can; ++i) {
            auto win = rb.write_window();
            REQUIRE(win.size() >= sizeof(std::int32_t));
            const std::int32_t v = static_cast<std::int32_t>(next_write++);
            std::memcpy(win.data(), &v, sizeof v);
            rb.commit_write(1);
        }
        const std::size_t take = std::min<std::size_t>(rb.readable(), 2 + (lap % 3));
        for (std::size_t i = 0; i < take; ++i) {
            std::int32_t v = -1;
            rb.peek(reinterpret_cast<std::byte*>(&v), 1);
            CHECK(v == static_cast<std::int32_t>(next_read));
            rb.commit_read(1);
            ++next_read;
        }
    }
    CHECK(rb.total_written() == next_write);
    CHECK(rb.total_read() == next_read);
    CHECK(rb.occupancy() == next_write - next_read);
    CHECK(rb.high_water() <= rb.capacity());
    CHECK(rb.high_water() > 0);
}

TEST_CASE("ring buffer eof and finished") {
    RingBuffer rb(ItemKind::byte(), 4);
    CHECK_FALSE(rb.eof());
    CHECK_FALSE(rb.finished());
    auto w = rb.write_window();
    w[0] = std::byte{42};
    rb.commit_write(1);
    rb.set_eof();
    CHECK(rb.eof());
    CHECK_FALSE(rb.finished());  // one item still unread
    rb.commit_read(1);
    CHECK(rb.finished());
}

TEST_CASE("ring buffer abandon flag") {
    RingBuffer rb(ItemKind::byte(), 4);
    CHECK_FALSE(rb.abandoned());
    rb.abandon();
    CHECK(rb.abandoned());
}

TEST_CASE("connect rejects bad wiring") {
    FlowGraph g;
    auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(iota_ints(4)));
    auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::complex32());
    SUBCASE("kind mismatch") {
        CHECK_THROWS_AS(g.connect(src, 0, sink, 0), GraphError);
    }
    SUBCASE("unknown ports") {
        CHECK_THROWS_AS(g.connect(src, 1, sink, 0), GraphError);
        CHECK_THROWS_AS(g.connect(src, 0, sink, 5), GraphError);
    }
    SUBCASE("double connection") {
        auto ok = g.emplace<dsp::VectorSink>("ok", ItemKind::int32());
        g.connect(src, 0, ok, 0);
        auto src2 = g.emplace<dsp::VectorSource>("src2", ItemKind::int32(), pack_ints({1}));
        CHECK_THROWS_AS(g.connect(src2, 0, ok, 0), GraphError);   // input taken
        auto ok2 = g.emplace<dsp::VectorSink>("ok2", ItemKind::int32());
        CHECK_THROWS_AS(g.connect(src, 0, ok2, 0), GraphError);   // output taken
    }
    SUBCASE("foreign block") {
        auto outside = std::make_shared<dsp::VectorSink>("outside", ItemKind::int32());
        CHECK_THROWS_AS(g.connect(src, 0, outside, 0), GraphError);
    }
}

TEST_CASE("validate reports unconnected inputs and cycles") {
    SUBCASE("unconnected input") {
        FlowGraph g;
        g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
        auto rep = g.validate();
        CHECK_FALSE(rep.runnable);
        REQUIRE(rep.issues.size() == 1);
        CHECK(rep.issues[0].kind == ValidationIssue::Kind::UnconnectedInput);
    }
    SUBCASE("cycle") {
        FlowGraph g;
        auto a = g.emplace<Scale>("a", 1);
        auto b = g.emplace<Scale>("b", 1);
        g.connect(a, 0, b, 0);
        g.connect(b, 0, a, 0);
        auto rep = g.validate();
        CHECK_FALSE(rep.runnable);
        bool has_cycle = false;
        for (const auto& i : rep.issues)
            has_cycle |= i.kind == ValidationIssue::Kind::Cycle;
        CHECK(has_cycle);
    }
    SUBCASE("running an invalid graph throws") {
        FlowGraph g;
        g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
        CHECK_THROWS_WITH_AS(g.run(), doctest::Contains("not runnable"), RunError);
    }
    SUBCASE("run auto-validates a good graph") {
        FlowGraph g;
        auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints({1, 2}));
        auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
        g.connect(src, 0, sink, 0);
        CHECK_NOTHROW(g.run());
        CHECK(sink->item_count() == 2);
    }
}

TEST_CASE("linear graph moves every item unchanged") {
    const auto data = iota_ints(10000);
    FlowGraph g;
    auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(data));
    auto s2 = g.emplace<Scale>("x2", 2);
    auto s3 = g.emplace<Scale>("x3", 3);
    auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
    g.connect(src, 0, s2, 0, 64);
    g.connect(s2, 0, s3, 0, 64);
    g.connect(s3, 0, sink, 0, 64);
    REQUIRE(g.validate().runnable);
    auto report = g.run();
    CHECK(report.termination == Termination::SourcesExhausted);
    auto out = sink->as<std::int32_t>();
    REQUIRE(out.size() == data.size());
    for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == data[i] * 6);
}

TEST_CASE("result is invariant across chunk caps and worker counts") {
    const auto data = iota_ints(20000);
    auto run_with = [&](std::size_t chunk, int workers) {
        FlowGraph g;
        auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(data));
        auto a = g.emplace<Scale>("a", 5);
        auto b = g.emplace<Scale>("b", -1);
        auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
        g.connect(src, 0, a, 0, 128);
        g.connect(a, 0, b, 0, 32);
        g.connect(b, 0, sink, 0, 1024);
        REQUIRE(g.validate().runnable);
        RunOptions opts;
        opts.chunk_items = chunk;
        opts.workers = workers;
        g.run(opts);
        return sink->as<std::int32_t>();
    };
    const auto ref = run_with(4096, 1);
    REQUIRE(ref.size() == data.size());
    CHECK(run_with(1, 1) == ref);
    CHECK(run_with(7, 1) == ref);
    CHECK(run_with(4096, 4) == ref);
    CHECK(run_with(3, 4) == ref);
}

TEST_CASE("source item budget caps production and reports ItemBudget") {
    FlowGraph g;
    auto src = g.emplace<dsp::CosineSource>("tone", 1000.0, 48000.0, 1.0);
    auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::complex32());
    g.connect(src, 0, sink, 0);
    REQUIRE(g.validate().runnable);
    RunOptions opts;
    opts.source_item_budget = 12345;
    auto report = g.run(opts);
    CHECK(report.termination == Termination::ItemBudget);
    CHECK(sink->item_count() == 12345);
}

TEST_CASE("budget equal to available items still counts as SourcesExhausted") {
    FlowGraph g;
    auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(iota_ints(100)));
    auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
    g.connect(src, 0, sink, 0);
    REQUIRE(g.validate().runnable);
    RunOptions opts;
    opts.source_item_budget = 1000;  // more than the source holds
    auto report = g.run(opts);
    CHECK(report.termination == Termination::SourcesExhausted);
    CHECK(sink->item_count() == 100);
}

TEST_CASE("wall clock budget cuts an endless source off") {
    FlowGraph g;
    auto src = g.emplace<dsp::CosineSource>("tone", 1000.0, 48000.0, 1.0);
    auto thr = g.emplace<dsp::Throttle>("pace", ItemKind::complex32(), 200000.0);
    auto sink = g.emplace<dsp::NullSink>("sink", ItemKind::complex32());
    g.connect(src, 0, thr, 0);
    g.connect(thr, 0, sink, 0);
    REQUIRE(g.validate().runnable);
    RunOptions opts;
    opts.wall_clock_budget = std::chrono::milliseconds(50);
    const auto t0 = std::chrono::steady_clock::now();
    auto report = g.run(opts);
    const auto took = std::chrono::steady_clock::now() - t0;
    CHECK(report.termination == Termination::WallClock);
    CHECK(took >= std::chrono::milliseconds(45));
    CHECK(took < std::chrono::seconds(5));
}

TEST_CASE("deadlock: window larger than edge capacity is reported") {
    FlowGraph g;
    auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(iota_ints(500)));
    auto big = g.emplace<NeedsBigWindow>("big", 64);
    g.connect(src, 0, big, 0, 16);  // capacity 16 can never hold a 64-item window
    REQUIRE(g.validate().runnable);
    CHECK_THROWS_WITH_AS(g.run(), doctest::Contains("cannot satisfy"), RunError);
}

TEST_CASE("multithreaded runs match single-threaded on a diamond-free chain") {
    // Related configurations must agree bit for bit even when producers
    // and consumers land on different workers (regression: premature
    // eof-driven finish used to strand committed items).
    const auto data = iota_ints(50000);
    std::vector<std::int32_t> ref;
    for (int trial = 0; trial < 6; ++trial) {
        FlowGraph g;
        auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(data));
        auto a = g.emplace<Scale>("a", 3);
        auto b = g.emplace<Scale>("b", 7);
        auto c = g.emplace<Scale>("c", -2);
        auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
        g.connect(src, 0, a, 0, 64);
        g.connect(a, 0, b, 0, 64);
        g.connect(b, 0, c, 0, 64);
        g.connect(c, 0, sink, 0, 64);
        REQUIRE(g.validate().runnable);
        RunOptions opts;
        opts.chunk_items = trial % 2 ? 3 : 4096;
        opts.workers = 2 + trial % 3;
        g.run(opts);
        auto out = sink->as<std::int32_t>();
        if (trial == 0)
            ref = out;
        else
            REQUIRE(out == ref);
    }
    REQUIRE(ref.size() == data.size());
}

TEST_CASE("counters track item flow when profiling is on, zero when off") {
    auto build_and_run = [](bool profiling) {
        FlowGraph g;
        auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(iota_ints(4096)));
        auto sc = g.emplace<Scale>("sc", 2);
        auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
        g.connect(src, 0, sc, 0);
        g.connect(sc, 0, sink, 0);
        REQUIRE(g.validate().runnable);
        RunOptions opts;
        opts.profiling = profiling;
        g.run(opts);
        return g.snapshot_counters();
    };

    SUBCASE("profiling on") {
        auto snap = build_and_run(true);
        REQUIRE(snap.blocks.size() == 3);
        CHECK(snap.nominal_hz == 666'000'000);
        for (const auto& b : snap.blocks) {
            if (b.name == "src") {
                REQUIRE(b.items_out.size() == 1);
                CHECK(b.items_out[0] == 4096);
            } else if (b.name == "sc") {
                CHECK(b.items_in[0] == 4096);
                CHECK(b.items_out[0] == 4096);
                CHECK(b.work_calls > 0);
            } else {
                CHECK(b.items_in[0] == 4096);
            }
            // cycles is time at the nominal clock; both advance together.
            const auto want = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(b.time_ns) * snap.nominal_hz / 1'000'000'000u);
            CHECK(b.cycles == want);
        }
    }
    SUBCASE("profiling off") {
        auto snap = build_and_run(false);
        for (const auto& b : snap.blocks) {
            CHECK(b.work_calls == 0);
            CHECK(b.time_ns == 0);
            CHECK(b.cycles == 0);
            for (auto v : b.items_in) CHECK(v == 0);
            for (auto v : b.items_out) CHECK(v == 0);
        }
    }
}

TEST_CASE("edge stats report capacity, throughput, and high water") {
    FlowGraph g;
    auto src = g.emplace<dsp::VectorSource>("src", ItemKind::int32(), pack_ints(iota_ints(1000)));
    auto sink = g.emplace<dsp::VectorSink>("sink", ItemKind::int32());
    g.connect(src, 0, sink, 0, 100);  // rounds up to 128
    REQUIRE(g.validate().runnable);
    auto report = g.run();
    REQUIRE(report.edges.size() == 1);
    const auto& e = report.edges[0];
    CHECK(e.capacity == 128);
    CHECK(e.total_items == 1000);
    CHECK(e.high_water <= 128);
    CHECK(e.high_water > 0);
    CHECK(e.item_bytes == sizeof(std::int32_t));
    CHECK(e.final_occupancy == 0);
}

TEST_CASE("sixteen port limit is enforced at run time") {
    class ManyOut : public Block {
    public:
        explicit ManyOut(std::string name) : Block(std::move(name)) {
            for (int i = 0; i < 17; ++i)
                add_output({"o" + std::to_string(i), ItemKind::byte()});
        }
        WorkStatus work(WorkContext&) override { return WorkStatus::Done; }
    };
    FlowGraph g;
    auto src = g.emplace<ManyOut>("many");
    for (int i = 0; i < 17; ++i) {
        auto sink = g.emplace<dsp::NullSink>("s" + std::to_string(i), ItemKind::byte());
        g.connect(src, static_cast<std::size_t>(i), sink, 0);
    }
    REQUIRE(g.validate().runnable);
    CHECK_THROWS_WITH_AS(g.run(), doctest::Contains("16-port"), RunError);
}
