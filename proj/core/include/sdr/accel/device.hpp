// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdr/accel/fixed_point.hpp"
#include "sdr/dsp/fft.hpp"

namespace sdr::accel {

/// Contractual misuse of the device (unknown address, busy protocol
/// violation, bad job geometry). Value-range register writes do NOT
/// throw; they are rejected with STATUS.error set, like hardware.
class DeviceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Register map (word addresses; all registers 32-bit):
///   0x00 ID          read-only constant 0x46465431 ("FFT1")
///   0x04 DIRECTION   bit 0: 0 = forward, 1 = inverse (masked on write)
///   0x08 NFFT_LOG2   transform size exponent, valid 3..11
///   0x0C CP_LEN      cyclic prefix length, valid 0..fft_size-1
///   0x10 SCALE_SCHED 2-bit right-shift per stage; stage 0 in bits 1:0,
///                    22 bits used at most (11 stages)
///   0x14 STATUS      bit 0 busy (RO), 1 done, 2 error, 3 overflow;
///                    writing 1 clears done/error/overflow
namespace reg {
inline constexpr std::uint32_t kId = 0x00;
inline constexpr std::uint32_t kDirection = 0x04;
inline constexpr std::uint32_t kNfftLog2 = 0x08;
inline constexpr std::uint32_t kCpLen = 0x0C;
inline constexpr std::uint32_t kScaleSched = 0x10;
inline constexpr std::uint32_t kStatus = 0x14;
}  // namespace reg

inline constexpr std::uint32_t kDeviceId = 0x46465431;
inline constexpr std::uint32_t kStatusBusy = 1u << 0;
inline constexpr std::uint32_t kStatusDone = 1u << 1;
inline constexpr std::uint32_t kStatusError = 1u << 2;
inline constexpr std::uint32_t kStatusOverflow = 1u << 3;

/// Streaming-path cost model: peak throughput of the 64-bit, 150 MHz
/// memory port plus a fixed setup latency per transfer.
struct TransferModel {
    double bus_bits = 64.0;
    double clock_hz = 150e6;
    double peak_bytes_per_sec = 1.2e9;
    double setup_s = 0.0;
};

/// setup + n_bytes / peak. Always >= n_bytes / peak and monotone.
double estimate_transfer_time(const TransferModel& model, std::uint64_t n_bytes);

struct FftDeviceConfig {
    dsp::FftDirection direction = dsp::FftDirection::Forward;
    std::size_t fft_size = 64;
    std::size_t cp_len = 0;
    std::uint32_t scale_sched = 0;

    bool operator==(const FftDeviceConfig&) const = default;
};

/// Shift-by-one at every stage: overall 1/N block scaling, the
/// overflow-safe default.
std::uint32_t default_scale_schedule(std::size_t nfft_log2);

struct Completion {
    std::vector<FixedComplex> output;
    double modeled_time_s = 0.0;
    bool overflow = false;
};

/// Behavioral model of the hardware FFT peripheral: a register file, a
/// Q1.15 radix-2 datapath with per-stage block scaling, saturation and
/// sticky overflow, cyclic-prefix handling (strip on forward, insert on
/// inverse), and a modeled streaming cost. Jobs are serialized per
/// device; computation is immediate and deterministic, the modeled time
/// is advisory metadata only.
class FftDevice {
public:
    explicit FftDevice(TransferModel model = {});

    /// Raw register access. Unknown addresses throw; out-of-range values
    /// and writes to busy/read-only registers are rejected with
    /// STATUS.error set and the prior value intact.
    void write_register(std::uint32_t addr, std::uint32_t value);
    std::uint32_t read_register(std::uint32_t addr) const;

    /// Validated register setup; equivalent to individual writes.
    /// Throws DeviceError when busy or the plan is out of capability.
    void configure(const FftDeviceConfig& plan);

    /// Split-phase job interface: begin() checks the busy protocol,
    /// latches the configuration and raises STATUS.busy; finish() lowers
    /// it, raises STATUS.done (and overflow if the datapath saturated)
    /// and yields the completion.
    void begin(std::span<const FixedComplex> input);
    Completion finish();

    /// begin + finish in one call.
    Completion submit(std::span<const FixedComplex> input);

    bool busy() const { return (status_ & kStatusBusy) != 0; }
    std::size_t fft_size() const { return std::size_t{1} << nfft_log2_; }
    const TransferModel& transfer_model() const { return model_; }

    /// Job geometry for the current configuration.
    std::size_t expected_input_len() const;
    std::size_t expected_output_len() const;

private:
    void reject_write() { status_ |= kStatusError; }

    TransferModel model_;
    std::uint32_t direction_ = 0;
    std::uint32_t nfft_log2_ = 6;
    std::uint32_t cp_len_ = 0;
    std::uint32_t scale_sched_ = 0;
    std::uint32_t status_ = 0;
    bool configured_ = false;
    Completion staged_;
};

}  // namespace sdr::accel
