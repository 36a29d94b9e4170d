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

#include "risdim/assignment.hpp"

#include "risdim/errors.hpp"
#include "risdim/piecewise.hpp"
#include "risdim/power_model.hpp"
#include "risdim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>

namespace risdim {

std::string_view to_string(PowerModel m)
{
    return m == PowerModel::exact ? "exact" : "piecewise";
}

std::string_view to_string(LeftEdgePolicy p)
{
    return p == LeftEdgePolicy::extend ? "extend" : "clip";
}

std::string_view to_string(PairStatus s)
{
    switch (s) {
    case PairStatus::ok: return "ok";
    case PairStatus::q_too_large: return "q_too_large";
    case PairStatus::infeasible: return "infeasible";
    }
    return "unknown";
}

namespace {

constexpr double kSpanQuadratureTol = 1e-13;
constexpr double kTargetRelTol = 1e-12;

// Normalized power curve for one q under the selected model.
class Curve {
public:
    Curve(double q, const AssignmentOptions& opt) : q_(q), opt_(opt)
    {
        if (!(q > 0.0 && q < 0.5))
            throw DomainError("level-set solver requires 0 < q < 1/2, got q = " + std::to_string(q));
        peak_ = peak_location(q);
        if (opt.model == PowerModel::piecewise)
            seg_.emplace(q);
        p_min_ = (*this)(0.5);
        p_max_ = (*this)(peak_);
    }

    double operator()(double p) const
    {
        return seg_ ? (*seg_)(p) : ris_power_normalized(q_, p);
    }

    bool clips() const { return seg_.has_value() || opt_.left_edge == LeftEdgePolicy::clip; }

    double peak() const { return peak_; }
    double p_min() const { return p_min_; }
    double p_max() const { return p_max_; }

    double integral(double a, double b) const
    {
        if (seg_)
            return seg_->integral(a, b);
        QuadratureOptions qo;
        qo.rel_tol = kSpanQuadratureTol;
        const auto f = [this](double p) { return ris_power_normalized(q_, p); };
        // Split at the peak so neither half straddles the maximum.
        double total = 0.0;
        if (a < peak_)
            total += integrate(f, a, std::min(b, peak_), qo).value;
        if (b > peak_)
            total += integrate(f, std::max(a, peak_), b, qo).value;
        return total;
    }

private:
    double q_;
    AssignmentOptions opt_;
    std::optional<PiecewiseSegments> seg_;
    double peak_ = 0.0;
    double p_min_ = 0.0;
    double p_max_ = 0.0;
};

// Crossing of a monotone curve with `level` inside [lo, hi]. `rising` tells
// whether the curve increases from lo to hi. Bisects until the bracket cannot shrink.
template <class F>
double bisect_crossing(const F& f, double level, double lo, double hi, bool rising)
{
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const bool above = f(mid) > level;
        if (above == rising)
            hi = mid;
        else
            lo = mid;
    }
    return std::abs(f(lo) - level) <= std::abs(f(hi) - level) ? lo : hi;
}

LevelSpan span_on(const Curve& c, double level)
{
    if (!(level >= c.p_min() && level <= c.p_max()))
        throw DomainError("level_set_span: level " + std::to_string(level) + " outside [P_min, P_max] = [" +
                          std::to_string(c.p_min()) + ", " + std::to_string(c.p_max()) + "]");
    LevelSpan span;
    const double ps = c.peak();
    if (level >= c.p_max())
        return span;

    span.delta_r = level <= c.p_min() ? 0.5 - ps : bisect_crossing(c, level, ps, 0.5, false) - ps;

    const double at_zero = c(0.0);
    if (at_zero <= level) {
        span.delta_l = ps - bisect_crossing(c, level, 0.0, ps, true);
    } else if (c.clips()) {
        span.delta_l = ps;
        span.clipped = true;
    } else {
        double lo = -ps;
        while (c(lo) > level)
            lo *= 2.0;
        span.delta_l = ps - bisect_crossing(c, level, lo, ps, true);
    }
    return span;
}

double integral_on(const Curve& c, const LevelSpan& span)
{
    return c.integral(c.peak() - span.delta_l, c.peak() + span.delta_r);
}

} // namespace

double model_power(double q, double p, const AssignmentOptions& opt)
{
    if (opt.model == PowerModel::piecewise)
        return PiecewiseSegments(q)(p);
    return ris_power_normalized(q, p);
}

double level_min(double q, const AssignmentOptions& opt)
{
    return Curve(q, opt).p_min();
}

double level_max(double q, const AssignmentOptions& opt)
{
    return Curve(q, opt).p_max();
}

LevelSpan level_set_span(double q, double level, const AssignmentOptions& opt)
{
    return span_on(Curve(q, opt), level);
}

double span_integral(double q, const LevelSpan& span, const AssignmentOptions& opt)
{
    return integral_on(Curve(q, opt), span);
}

double max_target_power(double q, const AssignmentOptions& opt)
{
    const Curve c(q, opt);
    return integral_on(c, span_on(c, c.p_min()));
}

AssignmentCurvePoint solve_target_power(double q, double P_star, const AssignmentOptions& opt)
{
    const Curve c(q, opt);
    if (!(P_star > 0.0))
        throw DomainError("solve_target_power: P_star must be positive");

    AssignmentCurvePoint pt;
    pt.q = q;
    pt.P_star = P_star;
    pt.p_peak = c.peak();
    pt.max_achievable = integral_on(c, span_on(c, c.p_min()));
    if (P_star > pt.max_achievable * (1.0 + kTargetRelTol)) {
        throw InfeasibleTargetError("solve_target_power: P_star = " + std::to_string(P_star) +
                                        " exceeds the largest achievable span integral " +
                                        std::to_string(pt.max_achievable) + " at q = " + std::to_string(q),
                                    P_star, pt.max_achievable);
    }

    // The span integral decreases in the level: lo keeps I >= P_star, hi keeps I <= P_star.
    double lo = c.p_min();
    double hi = c.p_max();
    double level = lo;
    LevelSpan span = span_on(c, lo);
    double achieved = pt.max_achievable;
    if (std::abs(achieved - P_star) > kTargetRelTol * P_star) {
        for (int it = 0; it < 500; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            const LevelSpan s = span_on(c, mid);
            const double val = integral_on(c, s);
            level = mid;
            span = s;
            achieved = val;
            if (std::abs(val - P_star) <= kTargetRelTol * P_star)
                break;
            if (val > P_star)
                lo = mid;
            else
                hi = mid;
        }
    }

    // Close to P_max the span width grows like sqrt(P_max - L), so the level runs out of
    // bits before the integral converges. Finish with Newton steps on one edge; the level
    // at that edge moves only by rounding-sized amounts.
    if (std::abs(achieved - P_star) > kTargetRelTol * P_star) {
        const bool left = !span.clipped;
        if (left || span.delta_r < 0.5 - pt.p_peak) {
            LevelSpan s = span;
            double val = achieved;
            for (int it = 0; it < 4 && std::abs(val - P_star) > kTargetRelTol * P_star; ++it) {
                double& d = left ? s.delta_l : s.delta_r;
                d += (P_star - val) / c(left ? pt.p_peak - d : pt.p_peak + d);
                val = integral_on(c, s);
            }
            const double edge = left ? c(pt.p_peak - s.delta_l) : c(pt.p_peak + s.delta_r);
            if (std::abs(val - P_star) < std::abs(achieved - P_star) && std::abs(edge - level) <= 1e-12 * level) {
                span = s;
                achieved = val;
            }
        }
    }

    pt.level = level;
    pt.x_star = std::clamp((level - c.p_min()) / (c.p_max() - c.p_min()), 0.0, 1.0);
    pt.delta_l = span.delta_l;
    pt.delta_r = span.delta_r;
    pt.delta = span.delta_l + span.delta_r;
    pt.clipped = span.clipped;
    return pt;
}

double calibrate_target_power(double q0, double x0, const AssignmentOptions& opt)
{
    if (!(x0 >= 0.0 && x0 <= 1.0))
        throw DomainError("calibrate_target_power: x0 must lie in [0, 1]");
    const Curve c(q0, opt);
    const double level = c.p_min() + x0 * (c.p_max() - c.p_min());
    return integral_on(c, span_on(c, level));
}

std::vector<AssignmentCurvePoint> x_star_curve(std::span<const double> q_grid, double P_star,
                                               const AssignmentOptions& opt)
{
    std::vector<AssignmentCurvePoint> out;
    out.reserve(q_grid.size());
    for (double q : q_grid) {
        try {
            out.push_back(solve_target_power(q, P_star, opt));
        } catch (const InfeasibleTargetError& e) {
            AssignmentCurvePoint pt;
            pt.q = q;
            pt.P_star = P_star;
            pt.p_peak = peak_location(q);
            pt.feasible = false;
            pt.max_achievable = e.achievable();
            pt.level = pt.x_star = pt.delta_l = pt.delta_r = pt.delta = std::nan("");
            out.push_back(pt);
        } catch (const DomainError&) {
            AssignmentCurvePoint pt;
            pt.q = q;
            pt.P_star = P_star;
            pt.feasible = false;
            pt.p_peak = pt.level = pt.x_star = pt.delta_l = pt.delta_r = pt.delta = std::nan("");
            out.push_back(pt);
        }
    }
    return out;
}

AssignmentPlan assign_ris(std::span<const TxRxPair> pairs, std::span<const double> ris_ys, double z,
                          double P_star, const AssignmentOptions& opt)
{
    if (!(z > 0.0))
        throw DomainError("assign_ris: z must be positive");

    struct Candidate {
        double gain;
        std::size_t pair;
        std::size_t ris;
    };
    std::vector<Candidate> candidates;

    AssignmentPlan plan;
    plan.pairs.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double dir = pairs[i].rx - pairs[i].tx;
        if (dir == 0.0)
            throw DomainError("assign_ris: pair " + std::to_string(i) + " has Tx and Rx at the same position");
        PairAssignment pa;
        pa.pair_index = i;
        pa.r = std::abs(dir);
        pa.q = z / pa.r;
        if (pa.q >= 0.5) {
            pa.status = PairStatus::q_too_large;
            plan.pairs.push_back(std::move(pa));
            continue;
        }
        AssignmentCurvePoint pt;
        try {
            pt = solve_target_power(pa.q, P_star, opt);
        } catch (const InfeasibleTargetError&) {
            pa.status = PairStatus::infeasible;
            plan.pairs.push_back(std::move(pa));
            continue;
        }
        pa.span_lo = pt.p_peak - pt.delta_l;
        pa.span_hi = pt.p_peak + pt.delta_r;
        pa.mirror_lo = 1.0 - pa.span_hi;
        pa.mirror_hi = 1.0 - pa.span_lo;
        for (std::size_t j = 0; j < ris_ys.size(); ++j) {
            const double p = (ris_ys[j] - pairs[i].tx) / dir;
            const bool in_span = p >= pa.span_lo && p <= pa.span_hi;
            const bool in_mirror = p >= pa.mirror_lo && p <= pa.mirror_hi;
            if (in_span || in_mirror)
                candidates.push_back({model_power(pa.q, p, opt), i, j});
        }
        plan.pairs.push_back(std::move(pa));
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(b.gain, a.pair, a.ris) < std::tie(a.gain, b.pair, b.ris);
    });

    std::vector<bool> taken(ris_ys.size(), false);
    for (const Candidate& c : candidates) {
        if (taken[c.ris])
            continue;
        taken[c.ris] = true;
        plan.pairs[c.pair].ris.push_back(c.ris);
        plan.pairs[c.pair].achieved_gain += c.gain;
    }
    for (auto& pa : plan.pairs)
        std::sort(pa.ris.begin(), pa.ris.end());
    for (std::size_t j = 0; j < ris_ys.size(); ++j) {
        if (!taken[j])
            plan.unassigned.push_back(j);
    }
    return plan;
}

} // namespace risdim
