// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/rx_blocks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

#include "sdr/wifi/interleaver.hpp"
#include "sdr/wifi/crc32.hpp"
#include "sdr/wifi/mapping.hpp"
#include "sdr/wifi/signal_field.hpp"

namespace sdr::wifi {

namespace {

constexpr std::size_t kLag = 16;  // STF period
// LTF search window relative to the trigger sample, matching receive():
// the plateau is met a couple dozen samples into the STF, so LTF period
// one starts roughly 150..180 samples ahead.
constexpr std::size_t kSearchLo = 140;
constexpr std::size_t kSearchHi = 200;
constexpr std::size_t kMetaBytes = 16;

void put_u64le(std::uint8_t* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}
std::uint64_t get_u64le(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}
void put_u16le(std::uint8_t* p, std::uint16_t v) {
    p[0] = static_cast<std::uint8_t>(v);
    p[1] = static_cast<std::uint8_t>(v >> 8);
}
std::uint16_t get_u16le(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

cfloat rotate(cfloat x, double phase) {
    return x * cfloat{static_cast<float>(std::cos(phase)), static_cast<float>(std::sin(phase))};
}

}  // namespace

// ---------------------------------------------------------------- FrameDetect

FrameDetect::FrameDetect(std::string name, OfdmParams params, DetectConfig cfg)
    : Block(std::move(name)), p_(params), cfg_(cfg) {
    add_input({"in", ItemKind::complex32()});
    add_output({"out", ItemKind::complex32()});
    add_output({"trig", ItemKind::complex32()});
}

void FrameDetect::emit_one(cfloat* out_sample, cfloat* out_trig) {
    const std::size_t w = cfg_.window;
    cfloat trig{};
    if (q_.size() >= w + kLag) {
        if (!sums_valid_) {
            acc_ = {};
            power_ = 0.0;
            for (std::size_t k = 0; k < w; ++k) {
                acc_ += std::complex<double>(q_[k]) * std::conj(std::complex<double>(q_[k + kLag]));
                power_ += std::norm(std::complex<double>(q_[k + kLag]));
            }
            sums_valid_ = true;
        }
        const double ratio = power_ > 0.0 ? std::abs(acc_) / power_ : 0.0;
        if (ratio > cfg_.threshold) {
            ++streak_;
            if (streak_ >= cfg_.plateau && armed_ &&
                (!has_trigger_ || n_ - last_trigger_ >= cfg_.min_gap)) {
                trig = cfloat(acc_);
                has_trigger_ = true;
                last_trigger_ = n_;
                armed_ = false;
            }
        } else {
            streak_ = 0;
            armed_ = true;
        }
        if (q_.size() >= w + kLag + 1) {
            acc_ -= std::complex<double>(q_[0]) * std::conj(std::complex<double>(q_[kLag]));
            acc_ += std::complex<double>(q_[w]) * std::conj(std::complex<double>(q_[w + kLag]));
            power_ -= std::norm(std::complex<double>(q_[kLag]));
            power_ += std::norm(std::complex<double>(q_[w + kLag]));
        } else {
            sums_valid_ = false;
        }
    } else {
        sums_valid_ = false;
    }
    *out_sample = q_.front();
    *out_trig = trig;
    q_.pop_front();
    ++n_;
}

WorkStatus FrameDetect::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<cfloat>();
    const bool eof = ctx.in[0].eof;
    auto out_s = ctx.out[0].as<cfloat>();
    auto out_t = ctx.out[1].as<cfloat>();
    const std::size_t cap = std::min(out_s.size(), out_t.size());
    const std::size_t need = cfg_.window + kLag + 1;  // evaluable and slidable

    std::size_t used = 0, made = 0;
    while (made < cap) {
        if (q_.size() >= need) {
            emit_one(&out_s[made], &out_t[made]);
            ++made;
        } else if (used < in.size()) {
            q_.push_back(in[used++]);
        } else if (eof && !q_.empty()) {
            emit_one(&out_s[made], &out_t[made]);  // tail: evaluate while possible
            ++made;
        } else {
            break;
        }
    }
    ctx.in[0].consumed = used;
    ctx.out[0].produced = made;
    ctx.out[1].produced = made;
    // Termination is the scheduler's call (input exhausted + no motion), not
    // ours: this window may be a chunk-capped slice of a larger backlog.
    return WorkStatus::Ok;
}

// ----------------------------------------------------------------- CfoCorrect

CfoCorrect::CfoCorrect(std::string name, double sample_rate)
    : Block(std::move(name)), sample_rate_(sample_rate) {
    add_input({"in", ItemKind::complex32()});
    add_input({"trig", ItemKind::complex32()});
    add_output({"out", ItemKind::complex32()});
    add_output({"trig", ItemKind::complex32()});
}

WorkStatus CfoCorrect::work(WorkContext& ctx) {
    auto in_s = ctx.in[0].as<cfloat>();
    auto in_t = ctx.in[1].as<cfloat>();
    auto out_s = ctx.out[0].as<cfloat>();
    auto out_t = ctx.out[1].as<cfloat>();
    const std::size_t n = std::min(std::min(in_s.size(), in_t.size()),
                                   std::min(out_s.size(), out_t.size()));
    for (std::size_t i = 0; i < n; ++i) {
        const cfloat t = in_t[i];
        if (t != cfloat{}) {
            freq_hz_ = coarse_cfo_from_autocorr(t, sample_rate_);
            ref_ = n_;
        }
        const double ph =
            -2.0 * std::numbers::pi * freq_hz_ * static_cast<double>(n_ - ref_) / sample_rate_;
        out_s[i] = rotate(in_s[i], ph);
        out_t[i] = t;
        ++n_;
    }
    ctx.in[0].consumed = n;
    ctx.in[1].consumed = n;
    ctx.out[0].produced = n;
    ctx.out[1].produced = n;
    return WorkStatus::Ok;
}

// ---------------------------------------------------------------- SymbolAlign

SymbolAlign::SymbolAlign(std::string name, OfdmParams params, double min_quality)
    : Block(std::move(name)), p_(params), min_quality_(min_quality) {
    add_input({"in", ItemKind::complex32()});
    add_input({"trig", ItemKind::complex32()});
    add_output({"sym", ItemKind::cvec(static_cast<std::uint32_t>(p_.fft_size))});
    add_output({"flag", ItemKind::byte()});
    // One whole meta record per activation or none: gate on record space.
    add_output({"meta", ItemKind::byte(), kMetaBytes});
}

std::uint64_t SymbolAlign::window_start_abs(std::size_t j) const {
    const std::uint64_t n = p_.fft_size;
    if (j == 0) return d_abs_;
    if (j == 1) return d_abs_ + n;
    return d_abs_ + 2 * n + static_cast<std::uint64_t>(p_.symbol_len()) * (j - 2) + p_.cp_len;
}

bool SymbolAlign::drain(OutputWindow& sym, OutputWindow& flag, OutputWindow& meta) {
    bool any = false;
    auto sym_span = sym.as<cfloat>();
    auto flag_span = flag.as<std::uint8_t>();
    auto meta_span = meta.as<std::uint8_t>();
    const std::size_t nfft = p_.fft_size;
    while (st_ == St::Stream) {
        const std::uint64_t ws = window_start_abs(next_win_);
        if (ws + nfft > anchor_ + buf_.size()) break;  // wait for more samples
        const std::uint8_t f = next_win_ == 0 ? 1 : next_win_ == 1 ? 2 : next_win_ == 2 ? 3 : 0;
        if ((sym.produced + 1) * nfft > sym_span.size()) break;
        if (flag.produced + 1 > flag_span.size()) break;
        if (f == 3 && meta.produced + kMetaBytes > meta_span.size()) break;

        cfloat* dst = sym_span.data() + sym.produced * nfft;
        const std::size_t rel = static_cast<std::size_t>(ws - anchor_);
        const double w = -2.0 * std::numbers::pi * fine_cfo_ / p_.sample_rate;
        for (std::size_t m = 0; m < nfft; ++m) {
            const double ph = w * static_cast<double>(ws + m - d_abs_);
            dst[m] = rotate(buf_[rel + m], ph);
        }
        flag_span[flag.produced] = f;
        if (f == 3) {
            const std::uint64_t preamble =
                p_.stf_len + (p_.ltf_len - 2 * nfft);  // STF plus the LTF prefix
            const std::uint64_t start = d_abs_ >= preamble ? d_abs_ - preamble : 0;
            std::uint8_t* mp = meta_span.data() + meta.produced;
            put_u64le(mp, start);
            put_u64le(mp + 8, std::bit_cast<std::uint64_t>(coarse_cfo_ + fine_cfo_));
            meta.produced += kMetaBytes;
        }
        ++sym.produced;
        ++flag.produced;
        ++next_win_;
        any = true;

        // Everything before the next window's start is never read again —
        // except the evaluation region of a still-pending candidate.
        std::uint64_t keep_from = window_start_abs(next_win_);
        if (!cands_.empty() && cands_.front().t_abs < keep_from)
            keep_from = cands_.front().t_abs;
        const std::size_t drop =
            static_cast<std::size_t>(std::min<std::uint64_t>(keep_from - anchor_, buf_.size()));
        if (drop) {
            buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(drop));
            anchor_ += drop;
        }
    }
    return any;
}

void SymbolAlign::resolve_candidates(WorkContext& ctx) {
    const std::size_t collect_need = kSearchHi + 2 * p_.fft_size;
    while (st_ == St::Stream && !cands_.empty()) {
        const Candidate c = cands_.front();
        if (anchor_ + buf_.size() < c.t_abs + collect_need) return;  // region not buffered yet
        const std::size_t rel = static_cast<std::size_t>(c.t_abs - anchor_);
        const std::span<const cfloat> region(buf_.data() + rel, collect_need);
        const auto al = align_ltf(region, kSearchLo, kSearchHi, p_, min_quality_);
        if (!al) {
            // False detection: the frame in progress continues untouched.
            cands_.pop_front();
            continue;
        }
        // A genuine preamble: flush the previous frame's whole windows, then
        // re-anchor on it. If output space runs out, keep the candidate
        // pending and retry on a later call.
        drain(ctx.out[0], ctx.out[1], ctx.out[2]);
        if (window_start_abs(next_win_) + p_.fft_size <= anchor_ + buf_.size()) return;
        buf_.erase(buf_.begin(),
                   buf_.begin() + static_cast<std::ptrdiff_t>(c.t_abs - anchor_));
        anchor_ = c.t_abs;
        coarse_cfo_ = coarse_cfo_from_autocorr(c.autocorr, p_.sample_rate);
        d_abs_ = anchor_ + al->ltf_start;
        fine_cfo_ = al->fine_cfo_hz;
        next_win_ = 0;
        cands_.pop_front();
    }
}

WorkStatus SymbolAlign::work(WorkContext& ctx) {
    auto in_s = ctx.in[0].as<cfloat>();
    auto in_t = ctx.in[1].as<cfloat>();
    const std::size_t collect_need = kSearchHi + 2 * p_.fft_size;
    constexpr std::size_t kSoftCap = 1u << 18;  // backpressure bound on buffered samples

    drain(ctx.out[0], ctx.out[1], ctx.out[2]);
    resolve_candidates(ctx);  // a switch blocked on output space last time

    const std::size_t pairs = std::min(in_s.size(), in_t.size());
    std::size_t used = 0;
    while (used < pairs) {
        if (buf_.size() >= kSoftCap) {
            if (!drain(ctx.out[0], ctx.out[1], ctx.out[2])) break;
            continue;
        }
        const cfloat x = in_s[used];
        const cfloat t = in_t[used];
        if (t != cfloat{}) {
            if (st_ == St::Hunt) {
                // First acquisition: collect from this trigger.
                st_ = St::Collect;
                anchor_ = n_;
                buf_.clear();
                buf_.push_back(x);
                coarse_cfo_ = coarse_cfo_from_autocorr(t, p_.sample_rate);
            } else {
                // Competing trigger: queue it for judgement instead of
                // abandoning the acquisition in progress.
                buf_.push_back(x);
                cands_.push_back({n_, t});
            }
        } else if (st_ != St::Hunt) {
            buf_.push_back(x);
        }
        if (st_ == St::Collect && buf_.size() >= collect_need) {
            const auto al = align_ltf(buf_, kSearchLo, kSearchHi, p_, min_quality_);
            if (al) {
                d_abs_ = anchor_ + al->ltf_start;
                fine_cfo_ = al->fine_cfo_hz;
                st_ = St::Stream;
                next_win_ = 0;
            } else if (!cands_.empty()) {
                // Collect around a false detection: restart it from the
                // oldest queued trigger, whose samples are already here.
                const Candidate c = cands_.front();
                cands_.pop_front();
                buf_.erase(buf_.begin(),
                           buf_.begin() + static_cast<std::ptrdiff_t>(c.t_abs - anchor_));
                anchor_ = c.t_abs;
                coarse_cfo_ = coarse_cfo_from_autocorr(c.autocorr, p_.sample_rate);
            } else {
                st_ = St::Hunt;
                buf_.clear();
            }
        }
        resolve_candidates(ctx);
        ++n_;
        ++used;
    }

    drain(ctx.out[0], ctx.out[1], ctx.out[2]);
    ctx.in[0].consumed = used;
    ctx.in[1].consumed = used;
    return WorkStatus::Ok;
}

// -------------------------------------------------------------- OfdmEqualizer

OfdmEqualizer::OfdmEqualizer(std::string name, OfdmParams params, bool expect_frequency_domain)
    : Block(std::move(name)),
      p_(params),
      expect_freq_(expect_frequency_domain),
      fft_({params.fft_size, dsp::FftDirection::Forward, true}),
      ltf1_(params.fft_size),
      freq_(params.fft_size) {
    const auto n = static_cast<std::uint32_t>(p_.fft_size);
    add_input({"sym", ItemKind::cvec(n)});
    add_input({"flag", ItemKind::byte()});
    add_input({"meta", ItemKind::byte(), 0});  // sparse side channel
    add_output({"sym", ItemKind::cvec(48)});
    add_output({"flag", ItemKind::byte()});
    add_output({"meta", ItemKind::byte(), kMetaBytes});
}

WorkStatus OfdmEqualizer::work(WorkContext& ctx) {
    auto syms = ctx.in[0].as<cfloat>();
    auto flags = ctx.in[1].as<std::uint8_t>();
    auto meta_in = ctx.in[2].as<std::uint8_t>();
    auto out_sym = ctx.out[0].as<cfloat>();
    auto out_flag = ctx.out[1].as<std::uint8_t>();
    auto out_meta = ctx.out[2].as<std::uint8_t>();

    const std::size_t nfft = p_.fft_size;
    const std::size_t in_pairs =
        std::min(ctx.in[0].items(nfft * sizeof(cfloat)), flags.size());
    const std::size_t out_pairs_cap =
        std::min(ctx.out[0].items(48 * sizeof(cfloat)), out_flag.size());

    std::size_t used = 0, made = 0, meta_used = 0, meta_made = 0;
    while (used < in_pairs) {
        const std::uint8_t f = flags[used];
        std::span<const cfloat> in_vec(syms.data() + used * nfft, nfft);
        const cfloat* fd;
        if (expect_freq_) {
            fd = in_vec.data();
        } else {
            fft_.run(in_vec, freq_);
            fd = freq_.data();
        }
        std::span<const cfloat> fvec(fd, nfft);

        if (f == 1) {
            std::copy(fvec.begin(), fvec.end(), ltf1_.begin());
            have_ltf1_ = true;
            est_.reset();
        } else if (f == 2) {
            if (have_ltf1_) {
                est_ = estimate_channel(ltf1_, fvec, p_);
                sym_idx_ = 0;
                have_ltf1_ = false;
            }
        } else if (f == 3) {
            if (meta_used + kMetaBytes > meta_in.size()) break;  // meta still in flight
            if (est_) {
                if (made >= out_pairs_cap) break;
                if (meta_made + kMetaBytes > out_meta.size()) break;
                const auto eq = equalize(fvec, *est_, 0, p_);
                if (eq) {
                    std::copy(eq->begin(), eq->end(), out_sym.data() + made * 48);
                    out_flag[made] = f;
                    std::memcpy(out_meta.data() + meta_made, meta_in.data() + meta_used,
                                kMetaBytes);
                    meta_made += kMetaBytes;
                    ++made;
                } else {
                    est_.reset();
                }
            }
            meta_used += kMetaBytes;
        } else {  // data symbol slot
            if (est_) {
                if (made >= out_pairs_cap) break;
                ++sym_idx_;
                const auto eq = equalize(fvec, *est_, sym_idx_, p_);
                if (eq) {
                    std::copy(eq->begin(), eq->end(), out_sym.data() + made * 48);
                    out_flag[made] = f;
                    ++made;
                } else {
                    est_.reset();
                }
            }
        }
        ++used;
    }

    ctx.in[0].consumed = used;
    ctx.in[1].consumed = used;
    ctx.in[2].consumed = meta_used;
    ctx.out[0].produced = made;
    ctx.out[1].produced = made;
    ctx.out[2].produced = meta_made;
    return WorkStatus::Ok;
}

// ---------------------------------------------------------------- FrameDecode

FrameDecode::FrameDecode(std::string name) : Block(std::move(name)) {
    add_input({"sym", ItemKind::cvec(48)});
    add_input({"flag", ItemKind::byte()});
    add_input({"meta", ItemKind::byte(), 0});  // sparse side channel
    add_output({"out", ItemKind::byte()});
}

void FrameDecode::finalize_frame() {
    auto psdu = decode_psdu(soft_, *mcs_, psdu_len_);
    const bool ok = check_fcs(psdu);
    const std::size_t at = pending_.size();
    pending_.resize(at + 21 + psdu.size());
    std::uint8_t* r = pending_.data() + at;
    r[0] = kMarker;
    r[1] = static_cast<std::uint8_t>(mcs_->index());
    r[2] = ok ? 1 : 0;
    put_u16le(r + 3, static_cast<std::uint16_t>(psdu.size()));
    put_u64le(r + 5, start_index_);
    put_u64le(r + 13, std::bit_cast<std::uint64_t>(cfo_hz_));
    std::copy(psdu.begin(), psdu.end(), r + 21);
}

WorkStatus FrameDecode::work(WorkContext& ctx) {
    auto syms = ctx.in[0].as<cfloat>();
    auto flags = ctx.in[1].as<std::uint8_t>();
    auto meta = ctx.in[2].as<std::uint8_t>();
    auto out = ctx.out[0].as<std::uint8_t>();
    constexpr std::size_t kMaxPending = 1u << 18;

    std::size_t out_n = 0;
    auto drain_pending = [&] {
        const std::size_t k =
            std::min(out.size() - out_n, pending_.size() - pending_head_);
        if (k) {
            std::memcpy(out.data() + out_n, pending_.data() + pending_head_, k);
            out_n += k;
            pending_head_ += k;
            if (pending_head_ == pending_.size()) {
                pending_.clear();
                pending_head_ = 0;
            }
        }
    };

    drain_pending();
    meta_fifo_.insert(meta_fifo_.end(), meta.begin(), meta.end());
    ctx.in[2].consumed = meta.size();

    const std::size_t pairs = std::min(ctx.in[0].items(48 * sizeof(cfloat)), flags.size());
    std::size_t used = 0;
    while (used < pairs && pending_.size() - pending_head_ < kMaxPending) {
        const std::uint8_t f = flags[used];
        std::span<const cfloat> sym(syms.data() + used * 48, 48);
        if (f == 3) {
            if (meta_fifo_.size() < kMetaBytes) break;  // record still in flight
            start_index_ = get_u64le(meta_fifo_.data());
            cfo_hz_ = std::bit_cast<double>(get_u64le(meta_fifo_.data() + 8));
            meta_fifo_.erase(meta_fifo_.begin(),
                             meta_fifo_.begin() + static_cast<std::ptrdiff_t>(kMetaBytes));
            const auto sig_soft = demap_soft(sym, Modulation::Bpsk);
            const auto sig = decode_signal(sig_soft);
            if (sig) {
                collecting_ = true;
                mcs_ = sig->mcs;
                psdu_len_ = sig->length;
                n_sym_ = n_data_symbols(psdu_len_, *mcs_);
                got_sym_ = 0;
                soft_.clear();
                soft_.reserve(n_sym_ * mcs_->n_cbps);
            } else {
                collecting_ = false;
            }
        } else if (f == 0 && collecting_) {
            const auto sym_soft = demap_soft(sym, mcs_->modulation);
            const auto deint = deinterleave_soft(sym_soft, *mcs_);
            soft_.insert(soft_.end(), deint.begin(), deint.end());
            if (++got_sym_ == n_sym_) {
                finalize_frame();
                collecting_ = false;
            }
        }
        // Flags 1/2 do not reach this block; ignore defensively.
        ++used;
    }

    drain_pending();
    ctx.in[0].consumed = used;
    ctx.in[1].consumed = used;
    ctx.out[0].produced = out_n;
    return WorkStatus::Ok;
}

// ---------------------------------------------------------- PacketReconstruct

PacketReconstruct::PacketReconstruct(std::string name) : Block(std::move(name)) {
    add_input({"in", ItemKind::byte()});
}

WorkStatus PacketReconstruct::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<std::uint8_t>();
    partial_.insert(partial_.end(), in.begin(), in.end());
    ctx.in[0].consumed = in.size();

    std::size_t head = 0;
    while (partial_.size() - head >= 21) {
        const std::uint8_t* r = partial_.data() + head;
        if (r[0] != FrameDecode::kMarker)
            throw std::runtime_error("corrupt frame-event record (bad marker)");
        const std::size_t mcs_idx = r[1];
        if (mcs_idx >= Mcs::all().size())
            throw std::runtime_error("corrupt frame-event record (bad rate index)");
        const std::size_t len = get_u16le(r + 3);
        if (partial_.size() - head < 21 + len) break;
        FrameEvent ev;
        ev.mcs = &Mcs::all()[mcs_idx];
        ev.fcs_ok = r[2] != 0;
        ev.start_index = static_cast<std::size_t>(get_u64le(r + 5));
        ev.cfo_hz = std::bit_cast<double>(get_u64le(r + 13));
        ev.psdu.assign(r + 21, r + 21 + len);
        events_.push_back(std::move(ev));
        head += 21 + len;
    }
    if (head)
        partial_.erase(partial_.begin(), partial_.begin() + static_cast<std::ptrdiff_t>(head));
    return WorkStatus::Ok;
}

// --------------------------------------------------------------- construction

ReceiverGraph build_receiver_graph(FlowGraph& g, const std::shared_ptr<Block>& source,
                                   std::size_t source_port, const ReceiverGraphOptions& opt) {
    if (opt.fft_backend && !opt.separate_fft_stage)
        throw GraphError("an FFT backend requires the separate FFT stage");

    const OfdmParams& p = opt.rx.params;
    ReceiverGraph r;
    r.detect = g.emplace<FrameDetect>("frame_detect", p, opt.rx.detect);
    r.cfo = g.emplace<CfoCorrect>("cfo_correct", p.sample_rate);
    r.align = g.emplace<SymbolAlign>("symbol_align", p, opt.rx.align_min_quality);
    r.equalizer = g.emplace<OfdmEqualizer>("ofdm_equalizer", p, opt.separate_fft_stage);
    r.decode = g.emplace<FrameDecode>("frame_decode");
    r.sink = g.emplace<PacketReconstruct>("packet_sink");

    g.connect(source, source_port, r.detect, 0);
    g.connect(r.detect, 0, r.cfo, 0);
    g.connect(r.detect, 1, r.cfo, 1);
    g.connect(r.cfo, 0, r.align, 0);
    g.connect(r.cfo, 1, r.align, 1);
    if (opt.separate_fft_stage) {
        r.fft = g.emplace<dsp::FftStage>("fft_stage", static_cast<std::uint32_t>(p.fft_size),
                                         dsp::FftDirection::Forward, opt.fft_backend);
        g.connect(r.align, 0, r.fft, 0, 256);
        g.connect(r.fft, 0, r.equalizer, 0, 256);
    } else {
        g.connect(r.align, 0, r.equalizer, 0, 256);
    }
    g.connect(r.align, 1, r.equalizer, 1, 256);
    g.connect(r.align, 2, r.equalizer, 2);
    g.connect(r.equalizer, 0, r.decode, 0, 256);
    g.connect(r.equalizer, 1, r.decode, 1, 256);
    g.connect(r.equalizer, 2, r.decode, 2);
    g.connect(r.decode, 0, r.sink, 0, 65536);
    return r;
}

}  // namespace sdr::wifi
