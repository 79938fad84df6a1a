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

#include "qgeom/specfun.hpp"
#include "qgeom/states.hpp"

namespace qgeom {

enum class Metric { HS, Bures };

/// A set volume stored as a natural logarithm, tagged with the metric it was
/// measured in and the ambient dimension d = N^2 - 1.
struct LogVolume {
    double log_value;
    Metric metric;
    int d;
};

/// Eigenvalue density of the flat (Hilbert-Schmidt) measure on the sorted
/// simplex: sqrt(N) * prod_{i<j} (l_i - l_j)^2.  Vanishes on ties.
double hs_eigen_density(const Spectrum& spectrum);

/// Log-space variant; -inf on ties.
double log_hs_eigen_density(const Spectrum& spectrum);

/// Eigenvalue density of the Bures measure:
///   2^{(2-N-N^2)/2} / sqrt(l_1...l_N) * prod_{i<j} (l_i-l_j)^2/(l_i+l_j).
/// Boundary spectra (some l_i = 0) are singular; the function returns the
/// +inf sentinel there and the caller decides (Monte Carlo rejects and
/// counts such draws, they carry zero measure).
double bures_eigen_density(const Spectrum& spectrum);

/// Log-space variant; +inf sentinel on the boundary, -inf on interior ties.
double log_bures_eigen_density(const Spectrum& spectrum);

/// Pointwise Radon-Nikodym ratio of the Bures over the Hilbert-Schmidt
/// eigen-density (the squared Vandermonde cancels, so ties are fine):
///   2^{(2-N-N^2)/2} / (sqrt(N) sqrt(l_1...l_N) prod_{i<j}(l_i+l_j)).
/// +inf sentinel on the boundary.
double density_ratio(const Spectrum& spectrum);

/// Log-space variant; +inf sentinel on the boundary.
double log_density_ratio(const Spectrum& spectrum);

/// Global minimum of log_density_ratio over the simplex, attained at the
/// uniform spectrum: (1-N^2) ln 2 + ((N^2-1)/2) ln N.  Every importance
/// weight is bounded below by this value.
double log_density_ratio_floor(int n);

/// Exact Hilbert-Schmidt volume of the full state body:
///   (2 pi)^{N(N-1)/2} sqrt(N) E(N) / Gamma(N^2),  E(N) = prod Gamma(j).
LogVolume exact_hs_volume(int n);

/// Exact Bures volume of the full state body:
///   2^{1-N^2} pi^{N^2/2} / Gamma(N^2/2)
/// (numerically identical to a radius-1/2 hemisphere of dimension N^2-1).
LogVolume exact_bures_volume(int n);

/// Volume radius: the radius of the Euclidean d-ball with the same volume,
/// (V / sigma_d)^{1/d}.
double vrad(const LogVolume& volume);

/// Relative volume-radius ratio (V(K)/V(L))^{1/d}.  Requires matching
/// metric tags and dimensions.
double vr_ratio(const LogVolume& numerator, const LogVolume& denominator);

} // namespace qgeom
