// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "sdr/block.hpp"
#include "sdr/dsp/blocks.hpp"
#include "sdr/dsp/fft.hpp"
#include "sdr/flow_graph.hpp"
#include "sdr/types.hpp"
#include "sdr/wifi/equalizer.hpp"
#include "sdr/wifi/params.hpp"
#include "sdr/wifi/receiver.hpp"
#include "sdr/wifi/sync.hpp"

namespace sdr::wifi {

/// The receiver decomposed into stream blocks. Every block here computes
/// each output from explicit per-sample state (absolute indices, sliding
/// sums, state machines), never from work-call boundaries, so the decoded
/// event list is identical for any scheduler chunk size or worker count.
///
/// Wire protocol between the stages:
///   samples  complex32, one item per capture sample, in order
///   trig     complex32, 1:1 with samples; nonzero = preamble detection
///            at that sample, value = the raw lag-16 autocorrelation
///   sym      cvec(64): one candidate OFDM symbol (CP removed)
///   flag     byte, 1:1 with sym: 1 = LTF period one, 2 = LTF period two,
///            3 = SIGNAL symbol, 0 = data symbol
///   meta     byte stream of 16-byte records, one per SIGNAL symbol:
///            u64le estimated first STF sample, f64 total CFO estimate
///   records  byte stream, one frame event per record (see FrameDecode)

/// Lag-16 autocorrelation preamble detector. Passes samples through 1:1
/// (delayed internally by the correlation lookahead) and marks trigger
/// positions on a parallel stream. Same plateau/refractory policy as
/// detect_frames().
class FrameDetect : public Block {
public:
    FrameDetect(std::string name, OfdmParams params, DetectConfig cfg = {});
    WorkStatus work(WorkContext& ctx) override;

private:
    void emit_one(cfloat* out_sample, cfloat* out_trig);

    OfdmParams p_;
    DetectConfig cfg_;
    std::deque<cfloat> q_;      // q_[0] is the next sample to emit, absolute index n_
    std::complex<double> acc_{};  // lag-16 autocorrelation over the window at n_
    double power_ = 0.0;          // lagged-window power at n_
    bool sums_valid_ = false;
    std::uint64_t n_ = 0;
    std::size_t streak_ = 0;
    bool armed_ = true;
    bool has_trigger_ = false;
    std::uint64_t last_trigger_ = 0;
};

/// Removes the coarse frequency offset announced by each trigger: from a
/// trigger at absolute index t with autocorrelation a, every following
/// sample n is rotated by exp(-j 2 pi f (n - t) / fs) with f derived
/// from arg(a). The trigger stream passes through unchanged.
class CfoCorrect : public Block {
public:
    CfoCorrect(std::string name, double sample_rate);
    WorkStatus work(WorkContext& ctx) override;

private:
    double sample_rate_;
    double freq_hz_ = 0.0;
    std::uint64_t ref_ = 0;
    std::uint64_t n_ = 0;
};

/// Frame synchronizer. After a trigger it buffers enough samples to
/// cross-correlate the long-training period over a search window, then
/// streams out CP-stripped 64-sample windows (LTF1, LTF2, SIGNAL, then
/// data symbol slots every 80 samples) with the residual fine CFO
/// removed, until the next trigger restarts acquisition. One 16-byte
/// meta record (start index + total CFO) accompanies each SIGNAL window.
class SymbolAlign : public Block {
public:
    SymbolAlign(std::string name, OfdmParams params, double min_quality = 0.5);
    WorkStatus work(WorkContext& ctx) override;

private:
    enum class St : std::uint8_t { Hunt, Collect, Stream };

    /// A trigger that arrived while an acquisition was already running.
    /// It is judged by LTF quality once its evaluation region is buffered;
    /// only a passing candidate steals the anchor, so a false detection
    /// cannot abort the frame in progress.
    struct Candidate {
        std::uint64_t t_abs;  // absolute sample index of the trigger
        cfloat autocorr;      // raw lag autocorrelation at the trigger
    };

    std::uint64_t window_start_abs(std::size_t j) const;
    bool drain(OutputWindow& sym, OutputWindow& flag, OutputWindow& meta);
    void resolve_candidates(WorkContext& ctx);

    OfdmParams p_;
    double min_quality_;
    St st_ = St::Hunt;
    std::vector<cfloat> buf_;   // samples from absolute index anchor_ on
    std::deque<Candidate> cands_;
    std::uint64_t anchor_ = 0;
    std::uint64_t n_ = 0;       // absolute index of the next input sample
    std::uint64_t d_abs_ = 0;   // absolute index of LTF period one
    double coarse_cfo_ = 0.0;
    double fine_cfo_ = 0.0;
    std::size_t next_win_ = 0;  // 0 = LTF1, 1 = LTF2, 2 = SIGNAL, j>2 = data j-2
    std::size_t sym_space_ = 0, flag_space_ = 0, meta_space_ = 0;
};

/// Channel estimation and equalization over the flagged symbol stream.
/// LTF windows are absorbed into a least-squares channel estimate; the
/// SIGNAL and data windows are equalized (divide by H, pilot-tracked
/// phase/slope removal) down to their 48 data carriers. Symbols arriving
/// without a valid estimate, or failing it, are dropped. By default the
/// block transforms each window itself; with `expect_frequency_domain`
/// an upstream FFT stage has already done so.
class OfdmEqualizer : public Block {
public:
    OfdmEqualizer(std::string name, OfdmParams params, bool expect_frequency_domain = false);
    WorkStatus work(WorkContext& ctx) override;

private:
    OfdmParams p_;
    bool expect_freq_;
    dsp::Fft fft_;
    std::vector<cfloat> ltf1_, freq_;
    bool have_ltf1_ = false;
    std::optional<ChannelEstimate> est_;
    std::size_t sym_idx_ = 0;
};

/// Decodes the equalized symbol stream into frame-event records:
///   u8 marker 0x5A, u8 mcs index, u8 fcs_ok, u16le psdu length,
///   u64le start index, f64 cfo_hz, psdu bytes.
/// A SIGNAL symbol (flag 3) opens a frame; its meta record is consumed;
/// data symbols accumulate soft bits until the frame's symbol count is
/// reached, then the PSDU is Viterbi-decoded, descrambled and checked.
class FrameDecode : public Block {
public:
    static constexpr std::uint8_t kMarker = 0x5A;

    explicit FrameDecode(std::string name);
    WorkStatus work(WorkContext& ctx) override;

private:
    void finalize_frame();

    // In-flight frame
    bool collecting_ = false;
    const Mcs* mcs_ = nullptr;
    std::size_t psdu_len_ = 0;
    std::size_t n_sym_ = 0;
    std::size_t got_sym_ = 0;
    std::uint64_t start_index_ = 0;
    double cfo_hz_ = 0.0;
    std::vector<float> soft_;

    std::vector<std::uint8_t> meta_fifo_;
    std::vector<std::uint8_t> pending_;  // serialized records awaiting output space
    std::size_t pending_head_ = 0;
};

/// Terminal sink: parses frame-event records back into FrameEvent values
/// for inspection after the run.
class PacketReconstruct : public Block {
public:
    explicit PacketReconstruct(std::string name);
    WorkStatus work(WorkContext& ctx) override;

    const std::vector<FrameEvent>& events() const { return events_; }

private:
    std::vector<std::uint8_t> partial_;
    std::vector<FrameEvent> events_;
};

/// Receiver chain construction on an existing graph, from a complex32
/// sample source port to a PacketReconstruct sink.
struct ReceiverGraphOptions {
    ReceiverConfig rx{};
    /// Insert an explicit FFT stage block between synchronizer and
    /// equalizer (required to plug in a non-default backend).
    bool separate_fft_stage = true;
    /// Transform engine for the FFT stage; nullptr = built-in software
    /// path. Borrowed pointer, must outlive the graph run.
    dsp::FftBackend* fft_backend = nullptr;
};

struct ReceiverGraph {
    std::shared_ptr<FrameDetect> detect;
    std::shared_ptr<CfoCorrect> cfo;
    std::shared_ptr<SymbolAlign> align;
    std::shared_ptr<dsp::FftStage> fft;  // null when the equalizer transforms internally
    std::shared_ptr<OfdmEqualizer> equalizer;
    std::shared_ptr<FrameDecode> decode;
    std::shared_ptr<PacketReconstruct> sink;
};

ReceiverGraph build_receiver_graph(FlowGraph& g, const std::shared_ptr<Block>& source,
                                   std::size_t source_port,
                                   const ReceiverGraphOptions& opt = {});

}  // namespace sdr::wifi
