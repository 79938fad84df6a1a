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

#include "qgeom/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgeom/errors.hpp"

namespace qgeom {

namespace {

Eigen::VectorXd sorted_eigenvalues(const ComplexMatrix& hermitian)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian,
                                                        Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("eigenvalue solver did not converge");
    }
    return solver.eigenvalues();
}

} // namespace

HilbertFactorization::HilbertFactorization(std::vector<int> factors)
    : factors_(std::move(factors))
{
    if (factors_.empty()) {
        throw validation_error("HilbertFactorization: at least one factor");
    }
    long long product = 1;
    for (int f : factors_) {
        if (f < 2) {
            throw validation_error(
                "HilbertFactorization: every factor must be >= 2");
        }
        product *= f;
        if (product > (1 << 20)) {
            throw validation_error("HilbertFactorization: dimension too large");
        }
    }
    total_dimension_ = static_cast<int>(product);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix))
{
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw validation_error("DensityMatrix: matrix must be square");
    }
    const double hermitian_defect =
        (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (hermitian_defect > kHermitianTolerance) {
        throw validation_error("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace().real() - 1.0) > kTraceTolerance ||
        std::abs(matrix_.trace().imag()) > kTraceTolerance) {
        throw validation_error("DensityMatrix: trace must be 1");
    }
    if (sorted_eigenvalues(matrix_).minCoeff() < -kPsdTolerance) {
        throw validation_error("DensityMatrix: matrix is not positive"
                               " semidefinite");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, TrustedTag)
    : matrix_(std::move(matrix))
{
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix matrix)
{
    return DensityMatrix(std::move(matrix), TrustedTag{});
}

DensityMatrix DensityMatrix::maximally_mixed(int n)
{
    if (n < 1) {
        throw validation_error("maximally_mixed: dimension must be >= 1");
    }
    ComplexMatrix m = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    return DensityMatrix::trusted(std::move(m));
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values))
{
    if (values_.empty()) {
        throw validation_error("Spectrum: empty value list");
    }
    double sum = 0.0;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0.0) {
            throw validation_error("Spectrum: negative eigenvalue");
        }
        if (i > 0 && values_[i] > values_[i - 1]) {
            throw validation_error("Spectrum: values must be nonincreasing");
        }
        sum += values_[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw validation_error("Spectrum: values must sum to 1");
    }
}

Spectrum spectrum_of(const DensityMatrix& rho)
{
    Eigen::VectorXd eigs = sorted_eigenvalues(rho.matrix());
    const int n = static_cast<int>(eigs.size());
    std::vector<double> values(static_cast<size_t>(n));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double v = eigs[n - 1 - i]; // Eigen sorts ascending
        if (v < 0.0) {
            if (v < -kPsdTolerance) {
                throw validation_error("spectrum_of: eigenvalue below PSD"
                                       " tolerance");
            }
            v = 0.0;
        }
        values[static_cast<size_t>(i)] = v;
        sum += v;
    }
    for (double& v : values) {
        v /= sum;
    }
    return Spectrum(std::move(values));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                const HilbertFactorization& factorization,
                                int subsystem)
{
    if (!factorization.bipartite()) {
        throw unsupported_error(
            "partial_transpose: only bipartite factorizations are supported");
    }
    if (subsystem != 1 && subsystem != 2) {
        throw validation_error("partial_transpose: subsystem must be 1 or 2");
    }
    const int d1 = factorization.factors()[0];
    const int d2 = factorization.factors()[1];
    if (rho.dim() != d1 * d2) {
        throw validation_error(
            "partial_transpose: factorization does not match state dimension");
    }
    const ComplexMatrix& in = rho.matrix();
    ComplexMatrix out(rho.dim(), rho.dim());
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d1; ++j) {
            for (int a = 0; a < d2; ++a) {
                for (int b = 0; b < d2; ++b) {
                    if (subsystem == 1) {
                        out(i * d2 + a, j * d2 + b) = in(j * d2 + a, i * d2 + b);
                    } else {
                        out(i * d2 + a, j * d2 + b) = in(i * d2 + b, j * d2 + a);
                    }
                }
            }
        }
    }
    return out;
}

bool is_ppt(const DensityMatrix& rho, const HilbertFactorization& factorization,
            double tol)
{
    const ComplexMatrix transposed = partial_transpose(rho, factorization, 1);
    return sorted_eigenvalues(transposed).minCoeff() >= -tol;
}

namespace {

// Hermitian square root via eigendecomposition, clamping the tiny negative
// eigenvalues that occur for boundary states.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("eigenvalue solver did not converge");
    }
    Eigen::VectorXd roots = solver.eigenvalues();
    for (int i = 0; i < roots.size(); ++i) {
        roots[i] = std::sqrt(std::max(roots[i], 0.0));
    }
    return solver.eigenvectors() * roots.asDiagonal() *
           solver.eigenvectors().adjoint();
}

} // namespace

double bures_distance(const DensityMatrix& rho1, const DensityMatrix& rho2)
{
    if (rho1.dim() != rho2.dim()) {
        throw validation_error("bures_distance: dimension mismatch");
    }
    const ComplexMatrix root = hermitian_sqrt(rho1.matrix());
    const ComplexMatrix inner = root * rho2.matrix() * root;
    Eigen::VectorXd eigs = sorted_eigenvalues(inner);
    double fidelity_root = 0.0;
    for (int i = 0; i < eigs.size(); ++i) {
        fidelity_root += std::sqrt(std::max(eigs[i], 0.0));
    }
    return std::sqrt(std::max(2.0 - 2.0 * fidelity_root, 0.0));
}

bool in_k_tube(const Spectrum& spectrum, double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw domain_error("in_k_tube: t must be in (0, 1)");
    }
    const double floor = (1.0 - t) / spectrum.size();
    return spectrum.min() >= floor;
}

bool in_k_face(const Spectrum& spectrum, double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw domain_error("in_k_face: t must be in (0, 1)");
    }
    if (spectrum.size() < 2) {
        throw validation_error("in_k_face: spectrum must have >= 2 entries");
    }
    // Inverting s = (1-t+t*l1, t*l2, ...) demands l1 >= 0 and l1 >= l2;
    // the sum condition holds automatically.
    return spectrum[0] >= 1.0 - t && spectrum[0] - (1.0 - t) >= spectrum[1];
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

} // namespace qgeom
