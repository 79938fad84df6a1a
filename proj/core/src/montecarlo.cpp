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

#include "qgeom/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include "qgeom/errors.hpp"

namespace qgeom::mc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kDrawsPerChunk = 1 << 16;

struct Stopwatch {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();

    std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void check_sample_count(std::int64_t n)
{
    if (n < 1000) {
        throw domain_error("estimator: at least 1000 samples required");
    }
}

std::int64_t chunk_size(std::int64_t total, int chunks, int index)
{
    const std::int64_t base = total / chunks;
    return base + (index < total % chunks ? 1 : 0);
}

// Runs fn(chunk_index, draws_in_chunk) over all chunks on a small thread
// pool and returns the per-chunk results in chunk order.  Exceptions from
// workers are rethrown on the calling thread.
template <typename Result, typename Fn>
std::vector<Result> run_chunks(std::int64_t total, int chunks, int threads,
                               Fn&& fn)
{
    std::vector<Result> results(static_cast<size_t>(chunks));
    if (threads <= 1 || chunks == 1) {
        for (int i = 0; i < chunks; ++i) {
            results[static_cast<size_t>(i)] = fn(i, chunk_size(total, chunks, i));
        }
        return results;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= chunks) {
                return;
            }
            try {
                results[static_cast<size_t>(i)] =
                    fn(i, chunk_size(total, chunks, i));
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int pool_size = std::min(threads, chunks);
    pool.reserve(static_cast<size_t>(pool_size));
    for (int i = 0; i < pool_size; ++i) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return results;
}

void append_csv_row(std::string& out, const Spectrum& spectrum, double weight,
                    bool accepted)
{
    char buf[40];
    for (int i = 0; i < spectrum.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,", spectrum[i]);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g,%d\n", weight, accepted ? 1 : 0);
    out += buf;
}

void write_dump(std::ostream* sink, int n_dim,
                const std::vector<std::string>& chunks)
{
    if (sink == nullptr) {
        return;
    }
    for (int i = 1; i <= n_dim; ++i) {
        *sink << "lambda_" << i << ',';
    }
    *sink << "weight,accepted\n";
    for (const std::string& chunk : chunks) {
        *sink << chunk;
        sink->flush();
    }
}

std::pair<double, double> normal_ci(double estimate, double std_error)
{
    return {estimate - 1.96 * std_error, estimate + 1.96 * std_error};
}

} // namespace

int resolve_threads(int requested)
{
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("QGEOM_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) {
            return parsed;
        }
    }
    const unsigned hardware = std::thread::hardware_concurrency();
    return hardware > 0 ? static_cast<int>(hardware) : 1;
}

int default_chunks(std::int64_t n)
{
    const std::int64_t chunks = (n + kDrawsPerChunk - 1) / kDrawsPerChunk;
    return static_cast<int>(std::clamp<std::int64_t>(chunks, 1, 4096));
}

namespace sets {

StatePredicate full()
{
    return [](const DensityMatrix&, const Spectrum&) { return true; };
}

StatePredicate ppt(HilbertFactorization factorization, double tol)
{
    if (!factorization.bipartite()) {
        throw unsupported_error("sets::ppt: bipartite factorization required");
    }
    return [factorization, tol](const DensityMatrix& rho, const Spectrum&) {
        return is_ppt(rho, factorization, tol);
    };
}

StatePredicate k_tube(double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw domain_error("sets::k_tube: t must be in (0, 1)");
    }
    return [t](const DensityMatrix&, const Spectrum& s) {
        return in_k_tube(s, t);
    };
}

StatePredicate k_face(double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw domain_error("sets::k_face: t must be in (0, 1)");
    }
    return [t](const DensityMatrix&, const Spectrum& s) {
        return in_k_face(s, t);
    };
}

} // namespace sets

ComplexMatrix sample_haar_unitary(int n, RngStream& stream)
{
    if (n < 2) {
        throw domain_error("sample_haar_unitary: n must be >= 2");
    }
    for (;;) {
        ComplexMatrix gaussian(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double re = stream.normal();
                const double im = stream.normal();
                gaussian(i, j) = std::complex<double>(re, im);
            }
        }
        Eigen::HouseholderQR<ComplexMatrix> qr(gaussian);
        const ComplexMatrix& packed = qr.matrixQR();
        Eigen::VectorXcd phases(n);
        bool degenerate = false;
        for (int i = 0; i < n; ++i) {
            const std::complex<double> r = packed(i, i);
            const double mag = std::abs(r);
            if (mag == 0.0) {
                degenerate = true;
                break;
            }
            phases[i] = r / mag;
        }
        if (degenerate) {
            continue; // probability-zero draw, resample
        }
        ComplexMatrix unitary = qr.householderQ();
        unitary = unitary * phases.asDiagonal();
        return unitary;
    }
}

DensityMatrix sample_hs_state(int n, RngStream& stream)
{
    if (n < 2) {
        throw domain_error("sample_hs_state: n must be >= 2");
    }
    ComplexMatrix gaussian(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = stream.normal();
            const double im = stream.normal();
            gaussian(i, j) = std::complex<double>(re, im);
        }
    }
    ComplexMatrix rho = gaussian * gaussian.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::trusted(std::move(rho));
}

Spectrum sample_simplex_uniform(int n, RngStream& stream)
{
    if (n < 2) {
        throw domain_error("sample_simplex_uniform: n must be >= 2");
    }
    std::vector<double> values(static_cast<size_t>(n));
    double sum = 0.0;
    for (double& v : values) {
        v = -std::log(stream.uniform01_positive());
        sum += v;
    }
    for (double& v : values) {
        v /= sum;
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum(std::move(values));
}

namespace {

struct IndicatorChunk {
    std::int64_t hits = 0;
    std::string dump;
};

struct WeightedChunk {
    double sum_w = 0.0;
    double sum_w_sq = 0.0;
    double sum_hit_w = 0.0;
    double sum_hit_w_sq = 0.0;
    std::int64_t accepted = 0;
    std::int64_t rejected = 0;
    std::string dump;
};

struct MeanChunk {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::int64_t accepted = 0;
    std::int64_t rejected = 0;
};

} // namespace

EstimateWithError estimate_hs_probability(int n_dim,
                                          const StatePredicate& in_set,
                                          std::int64_t n, std::uint64_t seed,
                                          const McConfig& config)
{
    check_sample_count(n);
    const Stopwatch watch;
    const int chunks = config.chunks > 0 ? config.chunks : default_chunks(n);
    const int threads = resolve_threads(config.threads);
    const bool dumping = config.sample_dump != nullptr;

    auto work = [&](int chunk_index, std::int64_t draws) {
        IndicatorChunk out;
        RngStream stream(seed, static_cast<std::uint64_t>(chunk_index));
        for (std::int64_t k = 0; k < draws; ++k) {
            const DensityMatrix rho = sample_hs_state(n_dim, stream);
            const Spectrum spectrum = spectrum_of(rho);
            const bool hit = in_set(rho, spectrum);
            out.hits += hit ? 1 : 0;
            if (dumping) {
                append_csv_row(out.dump, spectrum, density_ratio(spectrum),
                               true);
            }
        }
        return out;
    };
    const std::vector<IndicatorChunk> parts =
        run_chunks<IndicatorChunk>(n, chunks, threads, work);

    std::int64_t hits = 0;
    std::vector<std::string> dumps;
    for (const IndicatorChunk& part : parts) {
        hits += part.hits;
        if (dumping) {
            dumps.push_back(part.dump);
        }
    }
    write_dump(config.sample_dump, n_dim, dumps);

    EstimateWithError result;
    result.n_samples = n;
    result.seed = seed;
    result.estimate = static_cast<double>(hits) / static_cast<double>(n);
    result.std_error =
        std::sqrt(result.estimate * (1.0 - result.estimate) /
                  static_cast<double>(n));
    result.ci95 = normal_ci(result.estimate, result.std_error);
    result.elapsed_ms = watch.elapsed_ms();
    return result;
}

EstimateWithError estimate_bures_probability(int n_dim,
                                             const StatePredicate& in_set,
                                             std::int64_t n,
                                             std::uint64_t seed,
                                             const McConfig& config)
{
    check_sample_count(n);
    const Stopwatch watch;
    const int chunks = config.chunks > 0 ? config.chunks : default_chunks(n);
    const int threads = resolve_threads(config.threads);
    const bool dumping = config.sample_dump != nullptr;
    const double floor_log = log_density_ratio_floor(n_dim) - 1e-9;

    auto work = [&](int chunk_index, std::int64_t draws) {
        WeightedChunk out;
        RngStream stream(seed, static_cast<std::uint64_t>(chunk_index));
        for (std::int64_t k = 0; k < draws; ++k) {
            const DensityMatrix rho = sample_hs_state(n_dim, stream);
            const Spectrum spectrum = spectrum_of(rho);
            const double log_weight = log_density_ratio(spectrum);
            if (log_weight == kInf) {
                ++out.rejected;
                if (dumping) {
                    append_csv_row(out.dump, spectrum, kInf, false);
                }
                continue;
            }
            if (log_weight < floor_log) {
                throw numeric_error("importance weight fell below the"
                                    " analytic floor");
            }
            const double weight = std::exp(log_weight);
            const bool hit = in_set(rho, spectrum);
            ++out.accepted;
            out.sum_w += weight;
            out.sum_w_sq += weight * weight;
            if (hit) {
                out.sum_hit_w += weight;
                out.sum_hit_w_sq += weight * weight;
            }
            if (dumping) {
                append_csv_row(out.dump, spectrum, weight, true);
            }
        }
        return out;
    };
    const std::vector<WeightedChunk> parts =
        run_chunks<WeightedChunk>(n, chunks, threads, work);

    WeightedChunk total;
    std::vector<std::string> dumps;
    for (const WeightedChunk& part : parts) {
        total.sum_w += part.sum_w;
        total.sum_w_sq += part.sum_w_sq;
        total.sum_hit_w += part.sum_hit_w;
        total.sum_hit_w_sq += part.sum_hit_w_sq;
        total.accepted += part.accepted;
        total.rejected += part.rejected;
        if (dumping) {
            dumps.push_back(part.dump);
        }
    }
    write_dump(config.sample_dump, n_dim, dumps);
    if (total.accepted == 0) {
        throw numeric_error("estimate_bures_probability: every draw was"
                            " singular");
    }

    const double m = static_cast<double>(total.accepted);
    const double mean_w = total.sum_w / m;
    const double mean_hit_w = total.sum_hit_w / m;
    const double ratio = mean_hit_w / mean_w;
    // Delta method for the self-normalized ratio A/W with A = w*indicator:
    // note A*W = A^2 pointwise, so the covariance reuses the hit sum.
    const double var_a = total.sum_hit_w_sq / m - mean_hit_w * mean_hit_w;
    const double var_w = total.sum_w_sq / m - mean_w * mean_w;
    const double cov_aw = total.sum_hit_w_sq / m - mean_hit_w * mean_w;
    const double var_ratio =
        (var_a - 2.0 * ratio * cov_aw + ratio * ratio * var_w) /
        (m * mean_w * mean_w);

    EstimateWithError result;
    result.n_samples = total.accepted;
    result.n_rejected_singular = total.rejected;
    result.seed = seed;
    result.estimate = ratio;
    result.std_error = std::sqrt(std::max(var_ratio, 0.0));
    result.ci95 = normal_ci(result.estimate, result.std_error);
    const double ess = total.sum_w * total.sum_w / total.sum_w_sq;
    if (ess < 0.01 * m) {
        result.warning = "effective sample size below 1% of accepted draws";
    }
    result.elapsed_ms = watch.elapsed_ms();
    return result;
}

EstimateWithError estimate_bures_state_volume(int n_dim, std::int64_t n,
                                              std::uint64_t seed,
                                              const McConfig& config)
{
    if (n_dim < 2 || n_dim > 4) {
        throw domain_error("estimate_bures_state_volume: supported for"
                           " N in {2, 3, 4} only");
    }
    check_sample_count(n);
    const Stopwatch watch;
    const int chunks = config.chunks > 0 ? config.chunks : default_chunks(n);
    const int threads = resolve_threads(config.threads);

    auto work = [&](int chunk_index, std::int64_t draws) {
        MeanChunk out;
        RngStream stream(seed, static_cast<std::uint64_t>(chunk_index));
        for (std::int64_t k = 0; k < draws; ++k) {
            const Spectrum spectrum = sample_simplex_uniform(n_dim, stream);
            const double density = bures_eigen_density(spectrum);
            if (density == kInf) {
                ++out.rejected;
                continue;
            }
            ++out.accepted;
            out.sum += density;
            out.sum_sq += density * density;
        }
        return out;
    };
    const std::vector<MeanChunk> parts =
        run_chunks<MeanChunk>(n, chunks, threads, work);

    MeanChunk total;
    for (const MeanChunk& part : parts) {
        total.sum += part.sum;
        total.sum_sq += part.sum_sq;
        total.accepted += part.accepted;
        total.rejected += part.rejected;
    }
    if (total.accepted < 2) {
        throw numeric_error("estimate_bures_state_volume: not enough accepted"
                            " draws");
    }

    // V_B = Z_N * (1/N!) * integral over the sorted simplex; uniform draws
    // cover the unsorted simplex whose projected Lebesgue volume is
    // 1/(N-1)!, hence the prefactor Z_N / (N! (N-1)!).
    const double log_prefactor = log_flag_volume(n_dim).log_value -
                                 log_gamma(n_dim + 1.0).log_value -
                                 log_gamma(static_cast<double>(n_dim)).log_value;
    const double prefactor = std::exp(log_prefactor);
    const double m = static_cast<double>(total.accepted);
    const double mean = total.sum / m;
    const double var = (total.sum_sq / m - mean * mean) * m / (m - 1.0);

    EstimateWithError result;
    result.n_samples = total.accepted;
    result.n_rejected_singular = total.rejected;
    result.seed = seed;
    result.estimate = prefactor * mean;
    result.std_error = prefactor * std::sqrt(std::max(var, 0.0) / m);
    result.ci95 = normal_ci(result.estimate, result.std_error);
    result.elapsed_ms = watch.elapsed_ms();
    return result;
}

EstimateWithError estimate_vr(int n_dim, const StatePredicate& in_set,
                              Metric metric, std::int64_t n,
                              std::uint64_t seed, const McConfig& config)
{
    EstimateWithError prob =
        metric == Metric::HS
            ? estimate_hs_probability(n_dim, in_set, n, seed, config)
            : estimate_bures_probability(n_dim, in_set, n, seed, config);
    const double d = static_cast<double>(n_dim) * n_dim - 1.0;

    EstimateWithError result = prob;
    if (prob.estimate <= 0.0) {
        result.estimate = 0.0;
        result.std_error = 0.0;
        // One-sided rule-of-three upper confidence limit.
        const double p_upper = 3.0 / static_cast<double>(prob.n_samples);
        result.ci95 = {0.0, std::pow(p_upper, 1.0 / d)};
        result.warning = "zero-probability estimate; one-sided upper limit";
        return result;
    }
    result.estimate = std::exp(std::log(prob.estimate) / d);
    result.std_error =
        result.estimate * prob.std_error / (d * prob.estimate);
    result.ci95 = normal_ci(result.estimate, result.std_error);
    return result;
}

} // namespace qgeom::mc
