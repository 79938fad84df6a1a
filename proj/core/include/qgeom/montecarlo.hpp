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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>

#include "qgeom/measures.hpp"
#include "qgeom/rng.hpp"
#include "qgeom/states.hpp"

namespace qgeom::mc {

/// Result of a Monte Carlo estimation run.  Identical (seed, n, chunk
/// layout) reproduce every statistical field bit for bit; only elapsed_ms
/// varies between runs.
struct EstimateWithError {
    double estimate = 0.0;
    double std_error = 0.0;
    std::pair<double, double> ci95{0.0, 0.0};
    std::int64_t n_samples = 0;
    std::int64_t n_rejected_singular = 0;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;
    std::string warning; // empty when none
};

/// Execution knobs.  chunks == 0 derives the chunk count from n alone (so
/// results do not depend on the thread count); threads == 0 falls back to
/// the QGEOM_THREADS environment variable, then to the hardware count.
/// When sample_dump is set, every draw is written as a CSV row
/// "lambda_1,...,lambda_N,weight,accepted", flushed per chunk in chunk
/// order after the run.
struct McConfig {
    int chunks = 0;
    int threads = 0;
    std::ostream* sample_dump = nullptr;
};

/// Membership test for the target set, given the sampled state and its
/// spectrum.  Must be pure: it is evaluated concurrently.
using StatePredicate = std::function<bool(const DensityMatrix&, const Spectrum&)>;

/// Ready-made predicates for the sets the command line exposes.
namespace sets {
StatePredicate full();
StatePredicate ppt(HilbertFactorization factorization,
                   double tol = kPsdTolerance);
StatePredicate k_tube(double t);
StatePredicate k_face(double t);
} // namespace sets

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of the R diagonal absorbed into Q.
ComplexMatrix sample_haar_unitary(int n, RngStream& stream);

/// State drawn from the Hilbert-Schmidt ensemble: G G^dag / tr(G G^dag) with
/// G a square complex Gaussian matrix.
DensityMatrix sample_hs_state(int n, RngStream& stream);

/// Spectrum drawn uniformly from the probability simplex (normalized unit
/// exponentials), then sorted descending.
Spectrum sample_simplex_uniform(int n, RngStream& stream);

/// P(K) under the Hilbert-Schmidt measure: indicator mean over the HS
/// ensemble with binomial standard error.  Requires n >= 1000.
EstimateWithError estimate_hs_probability(int n_dim,
                                          const StatePredicate& in_set,
                                          std::int64_t n, std::uint64_t seed,
                                          const McConfig& config = {});

/// P(K) under the Bures measure via self-normalized importance sampling over
/// the HS ensemble; the weight is the pointwise Bures/HS density ratio.
/// Boundary draws with singular weight are rejected and counted.  Standard
/// error by the delta method.  A warning is set when the effective sample
/// size falls below 1% of the accepted draws.
EstimateWithError estimate_bures_probability(int n_dim,
                                             const StatePredicate& in_set,
                                             std::int64_t n,
                                             std::uint64_t seed,
                                             const McConfig& config = {});

/// Direct Monte Carlo estimate of the Bures volume of the full state body
/// from uniform simplex draws.  Desk-scale validation only: N in {2, 3, 4}.
EstimateWithError estimate_bures_state_volume(int n_dim, std::int64_t n,
                                              std::uint64_t seed,
                                              const McConfig& config = {});

/// Volume-radius ratio VR(K, full) = P(K)^{1/d} for the chosen metric, with
/// the standard error propagated by the delta method.  A zero-probability
/// estimate returns 0 with a one-sided rule-of-three upper confidence limit.
EstimateWithError estimate_vr(int n_dim, const StatePredicate& in_set,
                              Metric metric, std::int64_t n,
                              std::uint64_t seed, const McConfig& config = {});

/// Thread count resolution used by the estimators (exposed for the CLI).
int resolve_threads(int requested);

/// Chunk count used when McConfig.chunks == 0.
int default_chunks(std::int64_t n);

} // namespace qgeom::mc
