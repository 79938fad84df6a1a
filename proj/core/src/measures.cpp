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

#include "qgeom/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qgeom/errors.hpp"

namespace qgeom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool has_boundary_zero(const Spectrum& s)
{
    return s.min() <= 0.0;
}

// 2^{(2-N-N^2)/2} exponent of the Bures density prefactor.
double bures_prefactor_log(int n)
{
    return 0.5 * (2.0 - n - static_cast<double>(n) * n) * std::numbers::ln2;
}

} // namespace

double log_hs_eigen_density(const Spectrum& s)
{
    const int n = s.size();
    double acc = 0.5 * std::log(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double diff = s[i] - s[j];
            if (diff == 0.0) {
                return -kInf;
            }
            acc += 2.0 * std::log(diff);
        }
    }
    return acc;
}

double hs_eigen_density(const Spectrum& s)
{
    const int n = s.size();
    double acc = std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double diff = s[i] - s[j];
            acc *= diff * diff;
        }
    }
    return acc;
}

double log_bures_eigen_density(const Spectrum& s)
{
    if (has_boundary_zero(s)) {
        return kInf; // singular sentinel
    }
    const int n = s.size();
    double acc = bures_prefactor_log(n);
    for (int i = 0; i < n; ++i) {
        acc -= 0.5 * std::log(s[i]);
        for (int j = i + 1; j < n; ++j) {
            const double diff = s[i] - s[j];
            if (diff == 0.0) {
                return -kInf;
            }
            acc += 2.0 * std::log(diff) - std::log(s[i] + s[j]);
        }
    }
    return acc;
}

double bures_eigen_density(const Spectrum& s)
{
    const double log_density = log_bures_eigen_density(s);
    if (log_density == kInf) {
        return kInf;
    }
    return std::exp(log_density);
}

double log_density_ratio(const Spectrum& s)
{
    if (has_boundary_zero(s)) {
        return kInf; // singular sentinel
    }
    const int n = s.size();
    double acc = bures_prefactor_log(n) -
                 0.5 * std::log(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        acc -= 0.5 * std::log(s[i]);
        for (int j = i + 1; j < n; ++j) {
            acc -= std::log(s[i] + s[j]);
        }
    }
    return acc;
}

double density_ratio(const Spectrum& s)
{
    const double log_ratio = log_density_ratio(s);
    if (log_ratio == kInf) {
        return kInf;
    }
    return std::exp(log_ratio);
}

double log_density_ratio_floor(int n)
{
    if (n < 2) {
        throw domain_error("log_density_ratio_floor: n must be >= 2");
    }
    const double n2 = static_cast<double>(n) * n;
    return (1.0 - n2) * std::numbers::ln2 +
           0.5 * (n2 - 1.0) * std::log(static_cast<double>(n));
}

LogVolume exact_hs_volume(int n)
{
    if (n < 2) {
        throw domain_error("exact_hs_volume: n must be >= 2");
    }
    const double n2 = static_cast<double>(n) * n;
    const double log_value = 0.5 * n * (n - 1) *
                                 std::log(2.0 * std::numbers::pi) +
                             0.5 * std::log(static_cast<double>(n)) +
                             log_gamma_product(n).log_value -
                             log_gamma(n2).log_value;
    return {log_value, Metric::HS, n * n - 1};
}

LogVolume exact_bures_volume(int n)
{
    if (n < 2) {
        throw domain_error("exact_bures_volume: n must be >= 2");
    }
    const double n2 = static_cast<double>(n) * n;
    const double log_value = (1.0 - n2) * std::numbers::ln2 +
                             0.5 * n2 * std::log(std::numbers::pi) -
                             log_gamma(0.5 * n2).log_value;
    return {log_value, Metric::Bures, n * n - 1};
}

double vrad(const LogVolume& volume)
{
    return std::exp((volume.log_value - log_ball_volume(volume.d).log_value) /
                    volume.d);
}

double vr_ratio(const LogVolume& numerator, const LogVolume& denominator)
{
    if (numerator.metric != denominator.metric) {
        throw validation_error("vr_ratio: metric tags differ");
    }
    if (numerator.d != denominator.d) {
        throw validation_error("vr_ratio: ambient dimensions differ");
    }
    return std::exp((numerator.log_value - denominator.log_value) /
                    numerator.d);
}

} // namespace qgeom
