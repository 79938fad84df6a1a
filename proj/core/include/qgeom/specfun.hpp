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

#include <cmath>

namespace qgeom {

/// A positive quantity stored as its natural logarithm.  Gamma products and
/// volumes overflow double precision already for moderate matrix dimensions,
/// so everything downstream carries logs and exponentiates only for display.
struct LogReal {
    double log_value = 0.0;

    /// Linear-scale value; may overflow to +inf for large magnitudes.
    double value() const { return std::exp(log_value); }
};

/// ln Gamma(x) for x > 0 via a Lanczos series (no reflection needed: every
/// call site in this library has a positive argument).
///
/// Accuracy is ~1e-14 relative over [1e-6, 1e6].  Throws domain_error for
/// x <= 0.
LogReal log_gamma(double x);

/// ln of prod_{j=1}^{n} Gamma(j), n >= 1.
LogReal log_gamma_product(int n);

/// ln of the total invariant measure of the flag manifold U(n)/U(1)^n,
///   (2*pi)^{n(n-1)/2} / prod_{j=1}^{n} Gamma(j),  n >= 2.
LogReal log_flag_volume(int n);

/// ln of the volume of the d-dimensional Euclidean unit ball,
///   pi^{d/2} / Gamma(1 + d/2),  d >= 1.
LogReal log_ball_volume(int d);

/// Reciprocal-Gamma envelope constant: 1/(theta*x) <= Gamma(x) <= 1/x on
/// (0,1).  The quoted value is the conventional 6-digit rounding of
/// 1/min Gamma; the true constant is ~3.9e-6 larger.
inline constexpr double kGammaReciprocalTheta = 1.12917;

} // namespace qgeom
