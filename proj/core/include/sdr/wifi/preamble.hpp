// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "sdr/types.hpp"
#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Known long-training-sequence value on subcarrier k (-26..26, 0 at DC
/// and outside the occupied band).
float ltf_reference(int carrier);

/// 160-sample short training field: ten repetitions of a 16-sample
/// period, average power ~1.
std::vector<cfloat> build_stf(const OfdmParams& p);

/// 160-sample long training field: 32-sample cyclic prefix followed by
/// two 64-sample periods.
std::vector<cfloat> build_ltf(const OfdmParams& p);

/// One 64-sample time-domain LTF period (no prefix), as used for
/// cross-correlation alignment.
std::vector<cfloat> ltf_time_period(const OfdmParams& p);

/// Time-domain gain applied after the 1/N inverse transform so symbols
/// with the standard 52-carrier loading come out near unit average power.
float ofdm_symbol_gain(const OfdmParams& p);

}  // namespace sdr::wifi
