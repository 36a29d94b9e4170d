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

#include "risdim/power_model.hpp"

#include "risdim/errors.hpp"

#include <cmath>
#include <string>

namespace risdim {

namespace {

void require_nonnegative(const char* field, double v)
{
    if (!(v >= 0.0) || !std::isfinite(v))
        throw ValidationError(field, "must be a finite nonnegative number");
}

} // namespace

void ModelParams::validate() const
{
    require_nonnegative("S", S);
    require_nonnegative("los_ref", los_ref);
    require_nonnegative("los_exponent", los_exponent);
    require_nonnegative("Pt", Pt);
    require_nonnegative("sigma2", sigma2);
    require_nonnegative("rho", rho);
    require_nonnegative("beta", beta);
}

NormalizedGeometry normalize(const LinkGeometry& g)
{
    if (!(g.r > 0.0))
        throw DomainError("normalize: r must be positive");
    return {g.y / g.r, g.z / g.r, g.r};
}

LinkGeometry denormalize(const NormalizedGeometry& n)
{
    if (!(n.r > 0.0))
        throw DomainError("denormalize: r must be positive");
    return {n.r, n.p * n.r, n.q * n.r};
}

double ris_power(double r, double y, double z, double S)
{
    if (!(r > 0.0))
        throw DomainError("ris_power: r must be positive");
    if (z < 0.0)
        throw DomainError("ris_power: z must be nonnegative");
    const double d = r - y;
    const double den = (y * y + z * z) * (d * d + z * z);
    if (den == 0.0)
        throw DomainError("ris_power: RIS coincides with Tx or Rx (z = 0, y in {0, r})");
    return S / den;
}

double ris_power_exact(const LinkGeometry& g, const ModelParams& params)
{
    return ris_power(g.r, g.y, g.z, params.S);
}

double ris_power_normalized(double q, double p, double S)
{
    return ris_power(1.0, p, q, S);
}

double peak_location(double q)
{
    if (!(q > 0.0 && q < 0.5))
        throw DomainError("peak_location: requires 0 < q < 1/2, got q = " + std::to_string(q));
    // 2 q^2 / (1 + sqrt(1 - 4 q^2)) is the cancellation-free form of (1 - sqrt(1 - 4 q^2)) / 2.
    return 2.0 * q * q / (1.0 + std::sqrt(1.0 - 4.0 * q * q));
}

double peak_power_normalized(double q, double S)
{
    if (!(q > 0.0))
        throw DomainError("peak_power_normalized: q must be positive");
    if (q < 0.5)
        return S / (q * q);
    return ris_power_normalized(q, 0.5, S);
}

ExtremaReport extremum_locations(double q, double S)
{
    if (!(q > 0.0))
        throw DomainError("extremum_locations: q must be positive");
    ExtremaReport rep;
    if (q < 0.5) {
        const double lo = peak_location(q);
        rep.kind = ExtremaKind::three_extrema;
        rep.p_values = {lo, 0.5, 1.0 - lo};
    } else {
        rep.kind = ExtremaKind::single_maximum;
        rep.p_values = {0.5};
    }
    rep.values.reserve(rep.p_values.size());
    for (double p : rep.p_values)
        rep.values.push_back(ris_power_normalized(q, p, S));
    return rep;
}

double los_power(double r, const ModelParams& params)
{
    if (!(r > 0.0))
        throw DomainError("los_power: r must be positive");
    return params.los_ref / std::pow(r, params.los_exponent);
}

double total_power(const LinkGeometry& g, const ModelParams& params)
{
    return los_power(g.r, params) + ris_power_exact(g, params);
}

} // namespace risdim
