// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Every tolerance is pinned in code; seeds are fixed so the
// whole run is reproducible.

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qgeom/bounds.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/measures.hpp"
#include "qgeom/montecarlo.hpp"
#include "qgeom/rng.hpp"
#include "qgeom/specfun.hpp"
#include "qgeom/states.hpp"

using namespace qgeom;
using namespace qgeom::mc;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail)
{
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

// ------------------------------------------------------------------- 1 ---

void criterion_hemisphere()
{
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const int d = n * n - 1;
        const double hemisphere = 0.5 * (d + 1) * std::log(std::numbers::pi) -
                                  d * std::numbers::ln2 -
                                  log_gamma(0.5 * (d + 1)).log_value;
        worst = std::max(worst,
                         std::abs(exact_bures_volume(n).log_value - hemisphere));
    }
    report(1, "Bures volume equals the radius-1/2 hemisphere, N = 2..8",
           worst <= 1e-12, fmt("max |log diff| = %.3g", worst));
}

// ------------------------------------------------------------------- 2 ---

void criterion_constant_table()
{
    struct Row {
        int n;
        double expected;
    };
    const std::vector<Row> table = {
        {4, 0.7572}, {6, 0.7686}, {8, 0.7728}, {10, 0.7748}};
    bool pass = true;
    std::string detail;
    for (const Row& row : table) {
        const double value = vr_lower_constant(row.n);
        pass = pass && std::abs(value - row.expected) <= 0.0005;
        detail += fmt("c(%g)=%.4f ", static_cast<double>(row.n), value);
    }
    const double large = vr_lower_constant(64);
    pass = pass && large > 0.775 && large <= 0.7788;
    detail += fmt("c(64)=%.4f", large);
    report(2, "lower comparison constants match the published table", pass,
           detail);

    // informational: the sequence appears to increase toward e^{-1/4}
    bool increasing = true;
    double previous = 0.0;
    for (int n = 2; n <= 32; ++n) {
        const double value = vr_lower_constant(n);
        increasing = increasing && value > previous;
        previous = value;
    }
    std::printf("[info] lower comparison constant increasing on N = 2..32:"
                " %s (limit e^-1/4 = %.4f)\n",
                increasing ? "yes" : "no", std::exp(-0.25));
}

// ------------------------------------------------------------------- 3 ---

void criterion_envelope_constants()
{
    const double m4 = vr_envelope_ratio_max(4);
    const double m6 = vr_envelope_ratio_max(6);
    const double m8 = vr_envelope_ratio_max(8);
    const bool pass = m4 <= 2.5164 * 1.001 && m6 <= 2.2137 * 1.001 &&
                      m8 <= 2.0478 * 1.001;
    report(3, "upper envelope grid maxima stay below the published constants",
           pass, fmt("max ratio: N4=%.4f N6=%.4f N8=%.4f", m4, m6, m8));
}

// ------------------------------------------------------------------- 4 ---

void criterion_selberg_identities()
{
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
        const double expected = exact_hs_volume(n).log_value -
                                0.5 * std::log(static_cast<double>(n));
        worst = std::max(
            worst,
            std::abs(log_selberg_integral(n, 0.0).log_value - expected));
    }
    const bool identity_ok = worst <= 1e-10;

    // Monte Carlo cross-check of the N = 2, p = 2 value.  The simplex
    // integrand |l1-l2|^{2/3} (l1 l2)^{-2/3} has integrable endpoint
    // singularities; the cubic substitution l = u^2(3-2u) makes the
    // transformed integrand square-integrable so the CLT error bar is
    // honest.  Estimate = Z_2 * (1/2!) * integral over the projected
    // simplex (0,1).
    RngStream stream(20260808, 0);
    const std::int64_t draws = 1000000;
    double sum = 0.0, sum_sq = 0.0;
    for (std::int64_t i = 0; i < draws; ++i) {
        const double u = stream.uniform01_positive();
        const double lambda = u * u * (3.0 - 2.0 * u);
        const double jacobian = 6.0 * u * (1.0 - u);
        const double value =
            std::pow(std::abs(2.0 * lambda - 1.0), 2.0 / 3.0) *
            std::pow(lambda * (1.0 - lambda), -2.0 / 3.0) * jacobian;
        sum += value;
        sum_sq += value * value;
    }
    const double mean = sum / draws;
    const double sd = std::sqrt((sum_sq / draws - mean * mean) / draws);
    const double prefactor = std::numbers::pi; // Z_2 / 2! = 2 pi / 2
    const double mc_value = prefactor * mean;
    const double mc_se = prefactor * sd;
    const double exact = log_selberg_integral(2, 2.0).value();
    const bool mc_ok = std::abs(mc_value - exact) <= 3.0 * mc_se;

    report(4, "Selberg-integral identities (p = 0 closed form, p = 2 vs MC)",
           identity_ok && mc_ok,
           fmt("identity err %.2g; MC %.4f vs exact %.4f", worst, mc_value,
               exact));
}

// ------------------------------------------------------------------- 5 ---

void criterion_mc_bures_volume()
{
    bool pass = true;
    std::string detail;
    for (int n : {2, 3}) {
        const EstimateWithError run =
            estimate_bures_state_volume(n, 1000000, 101);
        const double exact = std::exp(exact_bures_volume(n).log_value);
        const bool in_ci = std::abs(run.estimate - exact) <= 3.0 * run.std_error;
        const double rel = std::abs(run.estimate / exact - 1.0);
        pass = pass && in_ci && rel <= 0.01;
        detail += fmt("N=%g: rel err %.4f%% ", static_cast<double>(n),
                      100.0 * rel);
    }
    report(5, "MC Bures volume of the state body matches the closed form",
           pass, detail);
}

// ------------------------------------------------------------------- 6 ---

void criterion_shrunken_body_optimality()
{
    bool pass = true;
    std::string detail;
    for (int n : {2, 3}) {
        const std::int64_t draws = n == 2 ? 1000000 : 2000000;
        for (double t : {0.25, 0.5}) {
            const EstimateWithError hs =
                estimate_vr(n, sets::k_tube(t), Metric::HS, draws, 404);
            const bool hs_ok = std::abs(hs.estimate - t) <= 3.0 * hs.std_error;
            const EstimateWithError bures =
                estimate_vr(n, sets::k_tube(t), Metric::Bures, draws, 404);
            const bool bures_ok =
                bures.estimate <= 4.0 * t + 3.0 * bures.std_error;
            pass = pass && hs_ok && bures_ok;
            detail += fmt("(N=%g,t=%.2f: hs %.3f", static_cast<double>(n), t,
                          hs.estimate) +
                      fmt(" b %.3f) ", bures.estimate);
        }
    }
    report(6, "shrunken-body VR: HS equals t, Bures below the 4t envelope",
           pass, detail);
}

// ------------------------------------------------------------------- 7 ---

void criterion_sandwich_on_mc()
{
    bool pass = true;
    std::string detail;
    for (int n : {2, 3}) {
        const std::int64_t draws = n == 2 ? 1000000 : 2000000;
        const double log_vb_full = exact_bures_volume(n).log_value;
        const double log_vhs_full = exact_hs_volume(n).log_value;
        const int d = n * n - 1;
        struct Subset {
            const char* name;
            double log_vhs;
            StatePredicate predicate;
        };
        const std::vector<Subset> subsets = {
            {"K.25", d * std::log(0.25) + log_vhs_full, sets::k_tube(0.25)},
            {"K.50", d * std::log(0.5) + log_vhs_full, sets::k_tube(0.5)},
            {"full", log_vhs_full, sets::full()},
        };
        for (const Subset& subset : subsets) {
            const EstimateWithError prob = estimate_bures_probability(
                n, subset.predicate, draws, 505);
            if (prob.estimate <= 0.0) {
                pass = false;
                detail += fmt("(N=%g: no hits) ", static_cast<double>(n));
                continue;
            }
            const double log_vb = std::log(prob.estimate) + log_vb_full;
            const double se_log = prob.std_error / prob.estimate;
            const BoundReport bounds =
                bures_volume_sandwich(n, subset.log_vhs, 2.0);
            const bool ok = log_vb >= *bounds.lower_log - 3.0 * se_log &&
                            log_vb <= *bounds.upper_log + 3.0 * se_log;
            pass = pass && ok;
            detail += fmt("(N=%g ", static_cast<double>(n)) + subset.name +
                      fmt(": %.3f in [%.3f,", log_vb, *bounds.lower_log) +
                      fmt(" %.3f]) ", *bounds.upper_log);
        }
    }
    report(7, "MC Bures volumes sit inside the two-sided sandwich (p = 2)",
           pass, detail);
}

// ------------------------------------------------------------------- 8 ---

void criterion_sampler_and_ppt_stability()
{
    // purity oracle 4/5 at N = 2
    RngStream stream(88, 0);
    const int purity_draws = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < purity_draws; ++i) {
        const Spectrum s = spectrum_of(sample_hs_state(2, stream));
        const double purity = s[0] * s[0] + s[1] * s[1];
        sum += purity;
        sum_sq += purity * purity;
    }
    const double mean = sum / purity_draws;
    const double sd =
        std::sqrt((sum_sq / purity_draws - mean * mean) / purity_draws);
    const bool purity_ok = std::abs(mean - 0.8) <= 3.0 * sd;

    // PPT on two qubits: bit-for-bit reproducibility plus cross-seed CI
    // overlaps, under both measures.  No reference value is asserted.
    const HilbertFactorization f({2, 2});
    bool reproducible = true;
    bool overlaps = true;
    std::string detail = fmt("purity %.4f+-%.4f; ", mean, sd);
    for (const Metric metric : {Metric::HS, Metric::Bures}) {
        std::vector<EstimateWithError> runs;
        // fixed arbitrary seed set; overlap of independent 95% intervals is
        // a statistical event, pinned here by the seeds
        for (std::uint64_t seed : {101u, 202u, 303u, 404u, 505u}) {
            auto estimate = [&](std::uint64_t s) {
                return metric == Metric::HS
                           ? estimate_hs_probability(4, sets::ppt(f), 1000000,
                                                     s)
                           : estimate_bures_probability(4, sets::ppt(f),
                                                        1000000, s);
            };
            const EstimateWithError once = estimate(seed);
            const EstimateWithError twice = estimate(seed);
            reproducible = reproducible && once.estimate == twice.estimate &&
                           once.std_error == twice.std_error &&
                           once.ci95 == twice.ci95;
            runs.push_back(once);
        }
        for (size_t i = 0; i < runs.size(); ++i) {
            for (size_t j = i + 1; j < runs.size(); ++j) {
                overlaps = overlaps &&
                           runs[i].ci95.first <= runs[j].ci95.second &&
                           runs[j].ci95.first <= runs[i].ci95.second;
            }
        }
        detail += fmt(metric == Metric::HS ? "ppt_hs %.4f+-%.4f "
                                           : "ppt_bures %.4f+-%.4f",
                      runs[0].estimate, runs[0].std_error);
    }
    report(8, "HS sampler purity oracle; PPT estimates reproducible & stable",
           purity_ok && reproducible && overlaps, detail);
}

// ------------------------------------------------------------------- 9 ---

bool gamma_properties()
{
    for (double z : {1.0, 2.5, 8.0, 50.0}) {
        const double lhs = log_gamma(z).log_value + log_gamma(z + 0.5).log_value;
        const double rhs = (1.0 - 2.0 * z) * std::numbers::ln2 +
                           0.5 * std::log(std::numbers::pi) +
                           log_gamma(2.0 * z).log_value;
        if (std::abs(lhs - rhs) > 1e-11) {
            return false;
        }
    }
    for (double x : {0.1, 1.0, 10.0, 1000.0}) {
        if (std::abs(log_gamma(x + 1.0).log_value - log_gamma(x).log_value -
                     std::log(x)) > 1e-12) {
            return false;
        }
    }
    // reciprocal envelope; 1e-5 allowance for the 6-digit theta rounding
    for (int i = 1; i <= 1000; ++i) {
        const double x = static_cast<double>(i) / 1001.0;
        const double gamma_x = std::exp(log_gamma(x).log_value);
        if (gamma_x > (1.0 + 1e-14) / x ||
            gamma_x * (1.0 + 1e-5) < 1.0 / (kGammaReciprocalTheta * x)) {
            return false;
        }
    }
    return true;
}

bool ratio_floor_property()
{
    RngStream stream(909, 0);
    for (int n : {2, 3, 4}) {
        const double floor_log = log_density_ratio_floor(n);
        for (int trial = 0; trial < 10000; ++trial) {
            const Spectrum s = sample_simplex_uniform(n, stream);
            if (log_density_ratio(s) < floor_log - 1e-12) {
                return false;
            }
        }
    }
    return true;
}

bool transpose_properties()
{
    RngStream stream(707, 0);
    for (const HilbertFactorization f :
         {HilbertFactorization({2, 2}), HilbertFactorization({2, 3})}) {
        const int n = f.total_dimension();
        for (int trial = 0; trial < 200; ++trial) {
            const DensityMatrix rho = sample_hs_state(n, stream);
            const ComplexMatrix once = partial_transpose(rho, f, 1);
            const ComplexMatrix twice =
                partial_transpose(DensityMatrix::trusted(once), f, 1);
            if ((twice - rho.matrix()).cwiseAbs().maxCoeff() != 0.0) {
                return false;
            }
            const ComplexMatrix u1 =
                sample_haar_unitary(f.factors()[0], stream);
            const ComplexMatrix u2 =
                sample_haar_unitary(f.factors()[1], stream);
            const ComplexMatrix local = tensor_product(u1, u2);
            const DensityMatrix rotated = DensityMatrix::trusted(
                local * rho.matrix() * local.adjoint());
            if (is_ppt(rho, f) != is_ppt(rotated, f)) {
                return false;
            }
        }
    }
    return true;
}

bool reproducibility_contracts()
{
    McConfig pinned;
    pinned.chunks = 8;
    pinned.threads = 1;
    McConfig pinned_mt = pinned;
    pinned_mt.threads = 2;

    const EstimateWithError a =
        estimate_bures_probability(2, sets::k_tube(0.5), 50000, 42, pinned);
    const EstimateWithError b =
        estimate_bures_probability(2, sets::k_tube(0.5), 50000, 42, pinned_mt);
    if (a.estimate != b.estimate || a.std_error != b.std_error ||
        a.n_rejected_singular != b.n_rejected_singular) {
        return false;
    }

    McConfig single;
    single.chunks = 1;
    const EstimateWithError c =
        estimate_hs_probability(2, sets::k_tube(0.5), 100000, 42, single);
    McConfig eight;
    eight.chunks = 8;
    const EstimateWithError d =
        estimate_hs_probability(2, sets::k_tube(0.5), 100000, 42, eight);
    const double combined =
        std::sqrt(c.std_error * c.std_error + d.std_error * d.std_error);
    return std::abs(c.estimate - d.estimate) <= 3.0 * combined;
}

void criterion_property_suites()
{
    const bool gamma_ok = gamma_properties();
    const bool floor_ok = ratio_floor_property();
    const bool transpose_ok = transpose_properties();
    const bool repro_ok = reproducibility_contracts();
    report(9, "module property suites (Gamma, ratio floor, transpose, RNG"
              " contracts)",
           gamma_ok && floor_ok && transpose_ok && repro_ok,
           std::string("gamma=") + (gamma_ok ? "ok" : "FAIL") +
               " floor=" + (floor_ok ? "ok" : "FAIL") +
               " transpose=" + (transpose_ok ? "ok" : "FAIL") +
               " rng=" + (repro_ok ? "ok" : "FAIL"));
}

} // namespace

int main()
{
    criterion_hemisphere();
    criterion_constant_table();
    criterion_envelope_constants();
    criterion_selberg_identities();
    criterion_mc_bures_volume();
    criterion_shrunken_body_optimality();
    criterion_sandwich_on_mc();
    criterion_sampler_and_ppt_stability();
    criterion_property_suites();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
