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

#include "risdim/stochastic_sim.hpp"

#include "risdim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace risdim {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t x)
{
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed + kGoldenGamma) ^ mix64(~stream * kGoldenGamma + 0x632be59bd9b4e019ULL))
{
}

CounterRng::result_type CounterRng::operator()()
{
    ++counter_;
    return mix64(key_ + counter_ * kGoldenGamma);
}

double uniform_open01(CounterRng& rng)
{
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

Deployment sample_poisson_deployment(double length_m, double rho, double z, std::uint64_t seed,
                                     std::uint64_t stream, int elements_per_ris)
{
    if (!(length_m > 0.0))
        throw DomainError("sample_poisson_deployment: length_m must be positive");
    if (!(rho >= 0.0))
        throw DomainError("sample_poisson_deployment: rho must be nonnegative");
    if (elements_per_ris < 1)
        throw DomainError("sample_poisson_deployment: elements_per_ris must be positive");

    Deployment d;
    d.z = z;
    d.elements_per_ris = elements_per_ris;
    if (rho == 0.0)
        return d;

    CounterRng rng(seed, stream);
    std::poisson_distribution<long long> count_dist(rho * length_m);
    const long long n = count_dist(rng);
    d.positions.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        d.positions.push_back(length_m * uniform_open01(rng));
    std::sort(d.positions.begin(), d.positions.end());
    return d;
}

double realized_additional_power(const Deployment& d, double r, const ModelParams& params)
{
    if (!(r > 0.0))
        throw DomainError("realized_additional_power: r must be positive");
    double total = 0.0;
    for (double y : d.positions) {
        if (y > 0.0 && y < r)
            total += ris_power(r, y, d.z, params.S);
    }
    return total;
}

EstimateWithCI monte_carlo_average(double length_m, double r, double z, double rho, const ModelParams& params,
                                   std::uint64_t n_reps, std::uint64_t seed, unsigned threads)
{
    if (n_reps < 2)
        throw DomainError("monte_carlo_average: n_reps must be at least 2");

    std::vector<double> samples(n_reps);
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i)
            samples[i] = realized_additional_power(sample_poisson_deployment(length_m, rho, z, seed, i), r, params);
    };

    unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    n_threads = static_cast<unsigned>(std::min<std::uint64_t>(n_threads, n_reps));
    if (n_threads <= 1) {
        run_range(0, n_reps);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(n_threads);
        const std::uint64_t chunk = (n_reps + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::uint64_t b = t * chunk;
            const std::uint64_t e = std::min<std::uint64_t>(n_reps, b + chunk);
            if (b < e)
                workers.emplace_back(run_range, b, e);
        }
    }

    double sum = 0.0;
    for (double s : samples)
        sum += s;
    const double mean = sum / static_cast<double>(n_reps);
    double ss = 0.0;
    for (double s : samples)
        ss += (s - mean) * (s - mean);
    const double var = ss / static_cast<double>(n_reps - 1);
    return {mean, std::sqrt(var / static_cast<double>(n_reps)), n_reps, seed};
}

double coherent_gain(double direct_amp, std::span<const double> element_amps)
{
    if (direct_amp < 0.0)
        throw DomainError("coherent_gain: amplitudes must be nonnegative");
    double amp = direct_amp;
    for (double a : element_amps) {
        if (a < 0.0)
            throw DomainError("coherent_gain: amplitudes must be nonnegative");
        amp += a;
    }
    return amp;
}

RateResult siso_rate(double received_power, const ModelParams& params)
{
    if (!(params.sigma2 > 0.0))
        throw DomainError("siso_rate: sigma2 must be positive");
    if (!(received_power >= 0.0))
        throw DomainError("siso_rate: received power must be nonnegative");
    const double snr = received_power / params.sigma2;
    return {std::log2(1.0 + snr), snr, received_power};
}

double received_power_no_ris(double r, const ModelParams& params)
{
    return params.Pt * los_power(r, params);
}

double received_power_with_ris(const LinkGeometry& g, const ModelParams& params, int elements)
{
    if (elements < 1)
        throw DomainError("received_power_with_ris: elements must be positive");
    const double per_element = std::sqrt(ris_power_exact(g, params) / elements);
    const std::vector<double> amps(static_cast<std::size_t>(elements), per_element);
    const double amp = coherent_gain(std::sqrt(los_power(g.r, params)), amps);
    return params.Pt * amp * amp;
}

std::vector<RateSweepPoint> rate_sweep(double r, double z, std::span<const double> p_grid,
                                       const ModelParams& params, int elements)
{
    const double no_ris = siso_rate(received_power_no_ris(r, params), params).rate;
    std::vector<RateSweepPoint> out;
    out.reserve(p_grid.size());
    for (double p : p_grid) {
        const LinkGeometry g{r, p * r, z};
        out.push_back({p, no_ris, siso_rate(received_power_with_ris(g, params, elements), params).rate});
    }
    return out;
}

double calibrate_scattering_constant(double r, double z, double p, double improvement_bits,
                                     const ModelParams& params, int elements)
{
    if (!(improvement_bits >= 0.0))
        throw DomainError("calibrate_scattering_constant: improvement must be nonnegative");
    if (!(params.Pt > 0.0))
        throw DomainError("calibrate_scattering_constant: Pt must be positive");
    const double p0 = received_power_no_ris(r, params);
    // 1 + snr_with = 2^bits (1 + snr_without)
    const double target = params.sigma2 * (std::exp2(improvement_bits) * (1.0 + p0 / params.sigma2) - 1.0);
    const double ris_amp = std::sqrt(target / params.Pt) - std::sqrt(los_power(r, params));
    const double shape = ris_power(r, p * r, z, 1.0);
    return ris_amp * ris_amp / (static_cast<double>(elements) * shape);
}

} // namespace risdim
