// SPDX-License-Identifier: Apache-2.0
#include <cstdio>

#include "commands.hpp"
#include "sdr/io/events.hpp"
#include "sdr/wifi/receiver.hpp"

namespace flowsdr {

int run_per(const PerOptions& opt) {
    const auto sent = sdr::io::read_manifest(opt.manifest);
    const auto events = sdr::io::read_events(opt.events);
    const auto r = sdr::wifi::compute_per(sent, events);
    std::printf("{\"sent\":%zu,\"detected\":%zu,\"passed\":%zu,\"per\":%.6f}\n", sent.size(),
                r.detected, r.passed, r.per);
    return kExitOk;
}

}  // namespace flowsdr
