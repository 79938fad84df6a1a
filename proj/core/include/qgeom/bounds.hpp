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

#pragma once

#include <map>
#include <optional>
#include <string>

#include "qgeom/specfun.hpp"

namespace qgeom {

/// Two-sided (or one-sided) bound in log scale, with the parameters that
/// produced it.  When both sides are present, lower_log <= upper_log.
struct BoundReport {
    long long N = 0;
    std::optional<double> lower_log;
    std::optional<double> upper_log;
    std::map<std::string, double> parameters;
};

/// ln of the Gamma-product value of the Selberg-type integral over the state
/// body that drives the upper volume estimate.  Defined for p outside
/// [1/2, 1]; inside that band some Gamma arguments hit poles.  At p = 0 the
/// value reduces to V_HS(full body)/sqrt(N).
LogReal log_selberg_integral(int n, double p);

/// The two-sided estimate for the Bures volume of a subset K with known
/// Hilbert-Schmidt volume (log scale), at Hoelder exponent p > 1:
///   lower = (1-N^2) ln 2 + ((N^2-1)/2) ln N + ln V_HS(K)
///   upper = -((N^2+N-2)/2) ln 2 + (1/2p)(ln V_HS(K) - ln sqrt(N))
///           + ((2p-1)/2p) ln I(p).
/// log_hs_volume_k may be -inf (empty set).  Throws validation_error when it
/// exceeds the volume of the full body.
BoundReport bures_volume_sandwich(int n, double log_hs_volume_k, double p);

/// Exact finite-N constant of the lower volume-radius comparison
/// VR_B >= c * VR_HS:  c(N) = d^{1/4} vrad_HS(full) / (2 vrad_B(full)).
/// Tends to e^{-1/4} ~ 0.7788 as N grows.
double vr_lower_constant(int n);

/// Exponent pair used in the explicit upper envelope: for alpha in (0,1]
/// and L = ln(e/alpha),
///   p = (N^2 L - 1)/(N^2 L - 2),  beta = 1/(N^2 L),  with beta N^2 <= 1.
/// Requires N >= 4 (the argument behind the envelope needs it).
struct EnvelopeExponents {
    double p;
    double beta;
};
EnvelopeExponents upper_envelope_exponents(int n, double alpha);

/// Explicit upper envelope for VR_B(K, full) in terms of
/// alpha = VR_HS(K, full):
///   2 theta^{1/3} alpha^{1/2p} [N^2 ln(e/alpha)]^{(1-1/2p)/(N+1)}
///     Gamma(N^2/2)^{1/d} Gamma(N^2)^{-1/(2pd)}.
double vr_upper_envelope(int n, double alpha);

/// Largest value of vr_upper_envelope(N, alpha) / (sqrt(alpha) *
/// exp(ln ln(e/alpha) / 2N)) over a log-spaced alpha grid in [1e-12, 1]:
/// the empirical per-N constant of the upper comparison
/// VR_B <= C sqrt(VR_HS) exp(ln ln(e/VR_HS) / 2N).  Requires N >= 4.
double vr_envelope_ratio_max(int n, int grid_points = 200);

/// Exponent shift in the many-small-subsystems scaling:
///   (1/2) log_D(1 + 1/D) - 1/(2 D^2) log_D(D + 1).
double separable_scaling_exponent(int subsystem_dim);

/// Separable-set volume-radius envelope for n subsystems of dimension D
/// ("many small subsystems" regime), N = D^n:
///   c_lo / N^{1/2 + a_D}  <=  VR_B  <=  c_hi sqrt((D n ln n)^{1/2} / N^{1/2 + a_D}).
/// The constants are caller-supplied configuration.
BoundReport separable_vr_bounds_many_small(int subsystem_dim, int n_subsystems,
                                           double c_lo, double c_hi);

/// Same for the "few large subsystems" regime:
///   c_lo^n / N^{1/2 - 1/(2n)}  <=  VR_B  <=  c_hi sqrt((n ln n)^{1/2} / N^{1/2 - 1/(2n)}).
BoundReport separable_vr_bounds_few_large(int subsystem_dim, int n_subsystems,
                                          double c_lo, double c_hi);

/// Scaling envelopes for the separable set relative to the positive-partial-
/// transpose set on C^D x C^D: lower c_lo * D^{-1/2}, upper c_hi * D^{-1/4}.
BoundReport separable_vs_ppt_scaling(int subsystem_dim, double c_lo,
                                     double c_hi);

/// Published default constants for the envelopes above (the few-large lower
/// constant is exactly e^{-1/4}/sqrt(6)).
namespace bound_defaults {
inline constexpr double kManySmallLower4 = 0.2272;
inline constexpr double kManySmallLower6 = 0.2306;
inline constexpr double kManySmallLower8 = 0.2318;
inline constexpr double kManySmallUpper4 = 5.2785;
inline constexpr double kManySmallUpper6 = 4.6436;
inline constexpr double kManySmallUpper8 = 4.2955;
double few_large_lower();
} // namespace bound_defaults

} // namespace qgeom
