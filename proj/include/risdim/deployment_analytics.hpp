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

#include <string_view>

namespace risdim {

enum class Method { closed_form, quadrature, piecewise, monte_carlo };

std::string_view to_string(Method m);

// Mean additional power of a random RIS deployment, with the inputs that produced it.
struct AveragePowerResult {
    double value = 0.0;    // W
    Method method = Method::closed_form;
    double r = 0.0;
    double z_or_q = 0.0;   // z in meters for line deployments, q for normalized inputs
    double density = 0.0; // rho (1/m) or beta (1/m^2)
    double S = 0.0;
};

// RIS positions y along the corridor over which a line deployment is averaged.
// The default (0, r) excludes elements behind Tx and beyond Rx.
struct CorridorSpan {
    bool full_corridor = false;
    double half_length = 0.0; // used when full_corridor: y in (-half_length, +half_length)
};

// Poisson line deployment of intensity rho at height z, averaged over y in (0, r):
//   2 S rho [ (z/r) ln((r^2 + z^2) / z^2) + atan(r/z) ] / (z (r^2 + 4 z^2)).
// With span.full_corridor the closed-form primitive of the single-RIS power is
// evaluated over (-L, L) instead.
AveragePowerResult campbell_average_power(double r, double z, double rho, double S,
                                          const CorridorSpan& span = {});

// rho * integral of ris_power over the same span by adaptive quadrature.
// `tol` is relative. Throws NonConvergenceError at the refinement cap.
AveragePowerResult quadrature_average_power(double r, double z, double rho, double S, double tol,
                                            const CorridorSpan& span = {});

// S rho / r^3 * piecewise_integral(q), for 0 < q < 1/2.
AveragePowerResult piecewise_average_power(double r, double q, double rho, double S);

struct WallRange {
    double q_min = 0.01;
    double q_max = 0.49;
};

// RIS spread over a wall with areal density beta:
//   (S beta / r^2) * integral_{q_min}^{q_max} integral_0^1 ris_power_normalized(q, p) dp dq,
// both integrals by adaptive quadrature at relative tolerance `tol`.
AveragePowerResult wall_average_power(double r, double beta, double S, const WallRange& range = {},
                                      double tol = 1e-10);

// The r-independent double integral used by wall_average_power.
double wall_normalized_integral(const WallRange& range, double tol = 1e-10);

} // namespace risdim
