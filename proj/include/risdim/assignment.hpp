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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace risdim {

// Which normalized power curve P(p, q) the level-set solver works on.
enum class PowerModel { exact, piecewise };

// What happens when the left level-set edge would fall at p < 0 (behind Tx).
//  extend: follow the exact curve past p = 0; the edge always exists.
//  clip:   stop at p = 0 and mark the span clipped.
// The piecewise model is only defined on [0, 1] and always clips.
enum class LeftEdgePolicy { extend, clip };

std::string_view to_string(PowerModel m);
std::string_view to_string(LeftEdgePolicy p);

struct AssignmentOptions {
    PowerModel model = PowerModel::exact;
    LeftEdgePolicy left_edge = LeftEdgePolicy::extend;
};

// Normalized power P(p, q) with S = 1 under the selected model.
double model_power(double q, double p, const AssignmentOptions& opt = {});

// P_min(q) = P(1/2, q), P_max(q) = P(p*, q).
double level_min(double q, const AssignmentOptions& opt = {});
double level_max(double q, const AssignmentOptions& opt = {});

struct LevelSpan {
    double delta_l = 0.0;
    double delta_r = 0.0;
    bool clipped = false; // left edge stopped at p = 0 above the requested level
};

// Edges p* - delta_l and p* + delta_r where the power curve crosses level L,
// found by bisection to machine precision. Requires 0 < q < 1/2 and
// P_min(q) <= L <= P_max(q); DomainError otherwise.
LevelSpan level_set_span(double q, double level, const AssignmentOptions& opt = {});

// Integral of P(p, q) over [p* - delta_l, p* + delta_r].
double span_integral(double q, const LevelSpan& span, const AssignmentOptions& opt = {});

struct AssignmentCurvePoint {
    double q = 0.0;
    double P_star = 0.0;
    double level = 0.0;
    double x_star = 0.0;
    double p_peak = 0.0;
    double delta_l = 0.0;
    double delta_r = 0.0;
    double delta = 0.0;
    bool clipped = false;
    bool feasible = true;
    double max_achievable = 0.0; // integral over the span at level P_min
};

// Largest integrated power reachable for q: the span at level P_min.
double max_target_power(double q, const AssignmentOptions& opt = {});

// Bisection on the level so that the span integral equals P_star to 1e-9
// relative. Throws InfeasibleTargetError when P_star > max_target_power(q).
AssignmentCurvePoint solve_target_power(double q, double P_star, const AssignmentOptions& opt = {});

// P_star whose solution at q0 has x* = x0.
double calibrate_target_power(double q0, double x0, const AssignmentOptions& opt = {});

// solve_target_power over a grid. Infeasible points are returned with
// feasible = false instead of throwing.
std::vector<AssignmentCurvePoint> x_star_curve(std::span<const double> q_grid, double P_star,
                                               const AssignmentOptions& opt = {});

struct TxRxPair {
    double tx = 0.0;
    double rx = 0.0;

    bool operator==(const TxRxPair&) const = default;
};

enum class PairStatus { ok, q_too_large, infeasible };

std::string_view to_string(PairStatus s);

struct PairAssignment {
    std::size_t pair_index = 0;
    double r = 0.0;
    double q = 0.0;
    PairStatus status = PairStatus::ok;
    // Eligible normalized intervals: around p* and its mirror around 1 - p*.
    double span_lo = 0.0, span_hi = 0.0;
    double mirror_lo = 0.0, mirror_hi = 0.0;
    std::vector<std::size_t> ris;  // assigned indices into the RIS list, ascending
    double achieved_gain = 0.0;    // sum of P(p, q) over assigned RIS
};

struct AssignmentPlan {
    std::vector<PairAssignment> pairs;
    std::vector<std::size_t> unassigned;
};

// Greedy scheduler. A RIS at corridor position y is eligible for a pair when
// p = (y - tx) / (rx - tx) falls in the pair's span or its mirror. Candidates
// are taken by descending normalized gain (ties: lower pair index, then lower
// RIS index) and each RIS goes to at most one pair.
AssignmentPlan assign_ris(std::span<const TxRxPair> pairs, std::span<const double> ris_ys, double z,
                          double P_star, const AssignmentOptions& opt = {});

} // namespace risdim
