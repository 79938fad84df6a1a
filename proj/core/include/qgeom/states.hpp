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

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qgeom {

using ComplexMatrix = Eigen::MatrixXcd;

/// Tolerances for accepting a matrix as a density matrix.  Eigensolvers
/// return slightly negative eigenvalues for boundary states, so positivity
/// is enforced only up to kPsdTolerance.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;

/// Tensor decomposition C^{D1} x ... x C^{Dn} of the underlying Hilbert
/// space.  Carries the total dimension N = prod D_i and the real dimension
/// d = N^2 - 1 of the state body.
class HilbertFactorization {
public:
    explicit HilbertFactorization(std::vector<int> factors);

    const std::vector<int>& factors() const { return factors_; }
    int total_dimension() const { return total_dimension_; }
    int body_dimension() const { return total_dimension_ * total_dimension_ - 1; }
    bool bipartite() const { return factors_.size() == 2; }

private:
    std::vector<int> factors_;
    int total_dimension_;
};

/// A quantum state: Hermitian, positive semidefinite (within tolerance),
/// trace-one complex matrix.
class DensityMatrix {
public:
    /// Validates hermiticity, trace and positivity; throws validation_error.
    explicit DensityMatrix(ComplexMatrix matrix);

    /// Wraps a matrix that is positive semidefinite by construction
    /// (e.g. G G^dagger / tr).  Skips the eigenvalue check.
    static DensityMatrix trusted(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }

    /// The maximally mixed state Id_N / N.
    static DensityMatrix maximally_mixed(int n);

private:
    struct TrustedTag {};
    DensityMatrix(ComplexMatrix matrix, TrustedTag);

    ComplexMatrix matrix_;
};

/// Eigenvalues of a state, sorted nonincreasing, nonnegative, summing to 1.
class Spectrum {
public:
    /// Values must already be sorted nonincreasing; throws validation_error
    /// on negative entries, wrong order, or sum off 1 by more than 1e-12.
    explicit Spectrum(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<size_t>(i)]; }
    double min() const { return values_.back(); }
    double max() const { return values_.front(); }

private:
    std::vector<double> values_;
};

/// Eigenvalues of rho, sorted descending.  Negative values within the PSD
/// tolerance are clamped to zero and the result renormalized to sum 1.
Spectrum spectrum_of(const DensityMatrix& rho);

/// Partial transpose with respect to one tensor factor of a bipartite
/// factorization (subsystem is 1 or 2).  The result is Hermitian with trace
/// one but in general not positive.
ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                const HilbertFactorization& factorization,
                                int subsystem = 1);

/// Peres test: true iff the partial transpose has no eigenvalue below -tol.
/// Eigenvalue-based, hence independent of which subsystem is transposed.
bool is_ppt(const DensityMatrix& rho, const HilbertFactorization& factorization,
            double tol = kPsdTolerance);

/// Bures distance sqrt(2 - 2 tr sqrt(sqrt(rho1) rho2 sqrt(rho1))).
double bures_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Membership in the body obtained by shrinking the full state body by t
/// toward the maximally mixed state: every eigenvalue of a member is at
/// least (1-t)/N.  Requires 0 < t < 1.
bool in_k_tube(const Spectrum& spectrum, double t);

/// Membership in the boundary-hugging body whose members have sorted
/// spectrum (1-t+t*l1, t*l2, ..., t*lN) for some sorted (l1..lN) in the
/// simplex: equivalently s1 >= 1-t and s1-(1-t) >= s2.  Requires 0 < t < 1.
bool in_k_face(const Spectrum& spectrum, double t);

/// Kronecker (tensor) product of two operators.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qgeom
