// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "risdim/power_model.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace risdim {

// Counter-based 64-bit generator: output k of stream (seed, stream) is the
// SplitMix64 finaliser applied to key + (k + 1) * golden_gamma. Streams are
// addressable independently, so replication i draws from stream i.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Uniform double on the open interval (0, 1) from the top 53 bits.
double uniform_open01(CounterRng& rng);

struct Deployment {
    std::vector<double> positions; // sorted ascending, meters
    double z = 1.0;
    int elements_per_ris = 256;
};

// Poisson(rho * length_m) RIS, i.i.d. uniform on (0, length_m). Deterministic in (seed, stream).
Deployment sample_poisson_deployment(double length_m, double rho, double z, std::uint64_t seed,
                                     std::uint64_t stream = 0, int elements_per_ris = 256);

// Sum of the single-RIS power over RIS with 0 < y < r; others are ignored.
double realized_additional_power(const Deployment& d, double r, const ModelParams& params);

struct EstimateWithCI {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_reps = 0;
    std::uint64_t seed = 0;

    bool operator==(const EstimateWithCI&) const = default;
};

// Mean and standard error of realized_additional_power over n_reps independent
// deployments. Replication i uses stream i; results are reduced in index order
// so the estimate does not depend on `threads` (0 = hardware concurrency).
EstimateWithCI monte_carlo_average(double length_m, double r, double z, double rho, const ModelParams& params,
                                   std::uint64_t n_reps, std::uint64_t seed, unsigned threads = 0);

// Optimal SISO phase alignment: amplitudes add.
double coherent_gain(double direct_amp, std::span<const double> element_amps);

struct RateResult {
    double rate = 0.0;           // bits/s/Hz
    double snr = 0.0;
    double received_power = 0.0; // W
};

// snr = received_power / sigma2, rate = log2(1 + snr). received_power already includes Pt.
RateResult siso_rate(double received_power, const ModelParams& params);

// Received power at Rx without any RIS: Pt * los_power(r).
double received_power_no_ris(double r, const ModelParams& params);

// Received power with one RIS of `elements` elements at g. Each element carries
// amplitude sqrt(P_RIS / elements) so the incoherent element sum reproduces the
// single-RIS power; the elements and the direct path are then phase aligned.
double received_power_with_ris(const LinkGeometry& g, const ModelParams& params, int elements);

struct RateSweepPoint {
    double p = 0.0;
    double rate_no_ris = 0.0;
    double rate_with_ris = 0.0;
};

std::vector<RateSweepPoint> rate_sweep(double r, double z, std::span<const double> p_grid,
                                       const ModelParams& params, int elements = 256);

// S that makes the rate improvement at (r, p r, z) equal `improvement_bits`.
double calibrate_scattering_constant(double r, double z, double p, double improvement_bits,
                                     const ModelParams& params, int elements = 256);

} // namespace risdim
