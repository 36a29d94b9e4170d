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

#include "risdim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace risdim {

struct QuadratureOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-10;
    std::size_t max_intervals = 1'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
};

namespace detail {

struct SimpsonPanel {
    double a, b;
    double fa, fm, fb;
    double whole;
};

inline constexpr std::size_t kInitialPanels = 32;

} // namespace detail

// Adaptive Simpson rule with Richardson correction. A panel is accepted when
// |S_left + S_right - S_whole| <= 15 * tol * width / (b - a), where
// tol = max(abs_tol, rel_tol * |I|). The magnitude |I| is re-estimated from the
// converged result and the pass repeated if the tolerance it implies is tighter.
// Throws NonConvergenceError when more than max_intervals panels are needed.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opt = {})
{
    if (a == b)
        return {};
    if (!(a < b))
        throw DomainError("integrate: need a <= b");
    if (!(opt.abs_tol > 0.0 || opt.rel_tol > 0.0))
        throw DomainError("integrate: at least one tolerance must be positive");

    using detail::SimpsonPanel;
    const double width = b - a;
    const std::size_t n0 = detail::kInitialPanels;

    std::vector<SimpsonPanel> seeds;
    seeds.reserve(n0);
    double magnitude = 0.0;
    {
        double x0 = a;
        double f0 = f(a);
        for (std::size_t i = 0; i < n0; ++i) {
            const double x1 = (i + 1 == n0) ? b : a + width * static_cast<double>(i + 1) / n0;
            const double xm = 0.5 * (x0 + x1);
            const double fm = f(xm);
            const double f1 = f(x1);
            const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
            seeds.push_back({x0, x1, f0, fm, f1, whole});
            magnitude += whole;
            x0 = x1;
            f0 = f1;
        }
    }

    std::vector<SimpsonPanel> stack;
    for (int pass = 0; pass < 4; ++pass) {
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(magnitude));
        QuadratureResult res;
        stack.assign(seeds.rbegin(), seeds.rend());
        std::size_t leaves = 0;
        while (!stack.empty()) {
            const SimpsonPanel pn = stack.back();
            stack.pop_back();
            const double m = 0.5 * (pn.a + pn.b);
            const double lm = 0.5 * (pn.a + m);
            const double rm = 0.5 * (m + pn.b);
            const double flm = f(lm);
            const double frm = f(rm);
            const double h = pn.b - pn.a;
            const double left = h / 12.0 * (pn.fa + 4.0 * flm + pn.fm);
            const double right = h / 12.0 * (pn.fm + 4.0 * frm + pn.fb);
            const double diff = left + right - pn.whole;
            const double local_tol = tol * h / width;
            const bool tiny = h <= 64.0 * std::numeric_limits<double>::epsilon() * width;
            if (std::abs(diff) <= 15.0 * local_tol || tiny || (tol == 0.0 && diff == 0.0)) {
                res.value += left + right + diff / 15.0;
                res.error_estimate += std::abs(diff) / 15.0;
                ++leaves;
                continue;
            }
            if (leaves + stack.size() + 2 > opt.max_intervals)
                throw NonConvergenceError("integrate: refinement limit of " +
                                          std::to_string(opt.max_intervals) + " intervals reached");
            stack.push_back({m, pn.b, pn.fm, frm, pn.fb, right});
            stack.push_back({pn.a, m, pn.fa, flm, pn.fm, left});
        }
        res.intervals = leaves;
        const double implied = std::max(opt.abs_tol, opt.rel_tol * std::abs(res.value));
        if (implied >= 0.5 * tol || pass == 3)
            return res;
        magnitude = res.value;
    }
    return {};
}

} // namespace risdim
