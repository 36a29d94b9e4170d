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

#include <vector>

namespace risdim {

// Placement of one Tx-Rx pair and one RIS. Tx sits at the origin, Rx at (r, 0);
// the RIS is at horizontal offset y from Tx and height z above the Tx-Rx line.
// All lengths in meters.
struct LinkGeometry {
    double r = 1.0;
    double y = 0.0;
    double z = 1.0;
};

// Scale-free form of a LinkGeometry: p = y/r, q = z/r, with r kept as the scale.
struct NormalizedGeometry {
    double p = 0.0;
    double q = 1.0;
    double r = 1.0;
};

// Physical constants of a link. Powers in W, densities per m (rho) and per m^2
// (beta). S carries antenna gains and the averaged scattering profile of one
// RIS and is a calibration input.
struct ModelParams {
    double S = 1.0;
    double los_ref = 1e-6;     // LOS power at 1 m
    double los_exponent = 2.0;
    double Pt = 1.0;           // 30 dBm
    double sigma2 = 1e-13;     // -100 dBm
    double rho = 1.0;
    double beta = 1.0;

    // Throws ValidationError naming the offending field.
    void validate() const;
};

NormalizedGeometry normalize(const LinkGeometry& g);
LinkGeometry denormalize(const NormalizedGeometry& n);

// Expected power scattered through one RIS:
//   S / ((y^2 + z^2) ((r - y)^2 + z^2)).
// Finite everywhere except z = 0 with y in {0, r}, which raises DomainError.
double ris_power(double r, double y, double z, double S);
double ris_power_exact(const LinkGeometry& g, const ModelParams& params);

// The r = 1 instance of ris_power. ris_power(r, p r, q r, S) = ris_power_normalized(q, p, S) / r^4.
double ris_power_normalized(double q, double p, double S = 1.0);

// Left maximiser (1 - sqrt(1 - 4 q^2)) / 2, defined for 0 < q < 1/2.
double peak_location(double q);

// Highest normalized power for a given q: S / q^2 when q < 1/2, the value at
// p = 1/2 otherwise.
double peak_power_normalized(double q, double S = 1.0);

enum class ExtremaKind { three_extrema, single_maximum };

struct ExtremaReport {
    ExtremaKind kind = ExtremaKind::single_maximum;
    std::vector<double> p_values;
    std::vector<double> values;
};

// q < 1/2: maxima at p* and 1 - p*, local minimum at 1/2. q >= 1/2: one maximum at 1/2.
ExtremaReport extremum_locations(double q, double S = 1.0);

double los_power(double r, const ModelParams& params);

// LOS and RIS contributions add (independent components, phase-compensated at Rx).
double total_power(const LinkGeometry& g, const ModelParams& params);

} // namespace risdim
