/*
   Copyright 2026 qgeom contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qgeom/bounds.hpp"

#include <cmath>
#include <numbers>

#include "qgeom/errors.hpp"
#include "qgeom/measures.hpp"

namespace qgeom {

namespace {

// ln ln(e/alpha) without cancellation for alpha near 1:
// ln(e/alpha) = 1 - ln(alpha) = 1 + ln(1/alpha).
double log_log_e_over(double alpha)
{
    return std::log1p(-std::log(alpha));
}

} // namespace

LogReal log_selberg_integral(int n, double p)
{
    if (n < 2) {
        throw domain_error("log_selberg_integral: n must be >= 2");
    }
    if (p >= 0.5 && p <= 1.0) {
        throw domain_error("log_selberg_integral: p in [1/2, 1] hits Gamma"
                           " poles");
    }
    const double beta = (p - 1.0) / (2.0 * p - 1.0);
    if (!(beta > 0.0)) {
        throw domain_error("log_selberg_integral: exponent (p-1)/(2p-1) must"
                           " be positive");
    }
    const double n2 = static_cast<double>(n) * n;
    double acc = -log_gamma(n + 1.0).log_value; // 1/N!
    acc -= log_gamma(beta * n2).log_value;
    for (int j = 1; j <= n; ++j) {
        acc += log_gamma(1.0 + beta * j).log_value +
               log_gamma(beta * j).log_value;
    }
    acc -= n * log_gamma(1.0 + beta).log_value; // Gamma((3p-2)/(2p-1)) = Gamma(1+beta)
    acc += log_flag_volume(n).log_value;
    return {acc};
}

BoundReport bures_volume_sandwich(int n, double log_hs_volume_k, double p)
{
    if (!(p > 1.0)) {
        throw domain_error("bures_volume_sandwich: p must be > 1");
    }
    const double log_hs_full = exact_hs_volume(n).log_value;
    if (log_hs_volume_k > log_hs_full + 1e-9) {
        throw validation_error("bures_volume_sandwich: subset volume exceeds"
                               " the full body");
    }
    const double n2 = static_cast<double>(n) * n;
    const double log_n = std::log(static_cast<double>(n));
    const double lower = (1.0 - n2) * std::numbers::ln2 +
                         0.5 * (n2 - 1.0) * log_n + log_hs_volume_k;
    const double upper =
        -0.5 * (n2 + n - 2.0) * std::numbers::ln2 +
        (log_hs_volume_k - 0.5 * log_n) / (2.0 * p) +
        (2.0 * p - 1.0) / (2.0 * p) * log_selberg_integral(n, p).log_value;
    BoundReport report;
    report.N = n;
    report.lower_log = lower;
    report.upper_log = upper;
    report.parameters = {{"p", p}};
    return report;
}

double vr_lower_constant(int n)
{
    const LogVolume hs = exact_hs_volume(n);
    const LogVolume bures = exact_bures_volume(n);
    const double d = static_cast<double>(hs.d);
    const double log_c = 0.25 * std::log(d) +
                         (hs.log_value - bures.log_value) / d -
                         std::numbers::ln2;
    return std::exp(log_c);
}

EnvelopeExponents upper_envelope_exponents(int n, double alpha)
{
    if (n < 4) {
        throw unsupported_error("upper_envelope_exponents: requires N >= 4");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw domain_error("upper_envelope_exponents: alpha must be in (0, 1]");
    }
    const double n2 = static_cast<double>(n) * n;
    const double scaled = n2 * (1.0 - std::log(alpha)); // N^2 ln(e/alpha) >= N^2
    return {(scaled - 1.0) / (scaled - 2.0), 1.0 / scaled};
}

double vr_upper_envelope(int n, double alpha)
{
    const EnvelopeExponents exps = upper_envelope_exponents(n, alpha);
    const double n2 = static_cast<double>(n) * n;
    const double d = n2 - 1.0;
    const double half_inv_p = 0.5 / exps.p;
    const double log_scaled = std::log(n2) + log_log_e_over(alpha);
    const double log_bound =
        std::numbers::ln2 + std::log(kGammaReciprocalTheta) / 3.0 +
        half_inv_p * std::log(alpha) +
        (1.0 - half_inv_p) / (n + 1.0) * log_scaled +
        log_gamma(0.5 * n2).log_value / d -
        half_inv_p * log_gamma(n2).log_value / d;
    return std::exp(log_bound);
}

double vr_envelope_ratio_max(int n, int grid_points)
{
    if (grid_points < 2) {
        throw domain_error("vr_envelope_ratio_max: need at least 2 grid"
                           " points");
    }
    double best = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double exponent =
            -12.0 * (1.0 - static_cast<double>(i) / (grid_points - 1));
        const double alpha = std::pow(10.0, exponent);
        const double reference =
            std::sqrt(alpha) * std::exp(log_log_e_over(alpha) / (2.0 * n));
        best = std::max(best, vr_upper_envelope(n, alpha) / reference);
    }
    return best;
}

double separable_scaling_exponent(int subsystem_dim)
{
    if (subsystem_dim < 2) {
        throw domain_error("separable_scaling_exponent: dimension must be"
                           " >= 2");
    }
    const double dim = subsystem_dim;
    const double log_dim = std::log(dim);
    return 0.5 * std::log1p(1.0 / dim) / log_dim -
           std::log(dim + 1.0) / (2.0 * dim * dim * log_dim);
}

namespace {

void check_envelope_args(int subsystem_dim, int n_subsystems, double c_lo,
                         double c_hi)
{
    if (subsystem_dim < 2 || n_subsystems < 2) {
        throw domain_error("separable envelope: D and n must be >= 2");
    }
    if (!(c_lo > 0.0) || !(c_hi > 0.0)) {
        throw domain_error("separable envelope: constants must be positive");
    }
    if (n_subsystems * std::log2(static_cast<double>(subsystem_dim)) > 62.0) {
        throw domain_error("separable envelope: total dimension overflows");
    }
}

long long int_pow(int base, int exponent)
{
    long long acc = 1;
    for (int i = 0; i < exponent; ++i) {
        acc *= base;
    }
    return acc;
}

} // namespace

BoundReport separable_vr_bounds_many_small(int subsystem_dim, int n_subsystems,
                                           double c_lo, double c_hi)
{
    check_envelope_args(subsystem_dim, n_subsystems, c_lo, c_hi);
    const double exponent_shift = separable_scaling_exponent(subsystem_dim);
    const double log_total = n_subsystems * std::log(double(subsystem_dim));
    const double decay = (0.5 + exponent_shift) * log_total;
    BoundReport report;
    report.N = int_pow(subsystem_dim, n_subsystems);
    report.lower_log = std::log(c_lo) - decay;
    report.upper_log = std::log(c_hi) +
                       0.25 * std::log(subsystem_dim * n_subsystems *
                                       std::log(double(n_subsystems))) -
                       0.5 * decay;
    report.parameters = {{"D", double(subsystem_dim)},
                         {"n", double(n_subsystems)},
                         {"c_lo", c_lo},
                         {"c_hi", c_hi},
                         {"exponent_shift", exponent_shift}};
    return report;
}

BoundReport separable_vr_bounds_few_large(int subsystem_dim, int n_subsystems,
                                          double c_lo, double c_hi)
{
    check_envelope_args(subsystem_dim, n_subsystems, c_lo, c_hi);
    const double log_total = n_subsystems * std::log(double(subsystem_dim));
    const double decay = (0.5 - 0.5 / n_subsystems) * log_total;
    BoundReport report;
    report.N = int_pow(subsystem_dim, n_subsystems);
    report.lower_log = n_subsystems * std::log(c_lo) - decay;
    report.upper_log = std::log(c_hi) +
                       0.25 * std::log(n_subsystems *
                                       std::log(double(n_subsystems))) -
                       0.5 * decay;
    report.parameters = {{"D", double(subsystem_dim)},
                         {"n", double(n_subsystems)},
                         {"c_lo", c_lo},
                         {"c_hi", c_hi}};
    return report;
}

BoundReport separable_vs_ppt_scaling(int subsystem_dim, double c_lo,
                                     double c_hi)
{
    if (subsystem_dim < 2) {
        throw domain_error("separable_vs_ppt_scaling: D must be >= 2");
    }
    if (!(c_lo > 0.0) || !(c_hi > 0.0)) {
        throw domain_error("separable_vs_ppt_scaling: constants must be"
                           " positive");
    }
    const double log_dim = std::log(double(subsystem_dim));
    BoundReport report;
    report.N = static_cast<long long>(subsystem_dim) * subsystem_dim;
    report.lower_log = std::log(c_lo) - 0.5 * log_dim;
    report.upper_log = std::log(c_hi) - 0.25 * log_dim;
    report.parameters = {{"D", double(subsystem_dim)},
                         {"c_lo", c_lo},
                         {"c_hi", c_hi}};
    return report;
}

namespace bound_defaults {

double few_large_lower()
{
    return std::exp(-0.25) / std::sqrt(6.0);
}

} // namespace bound_defaults

} // namespace qgeom
