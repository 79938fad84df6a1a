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

// Command-line front end: exact state-body volumes, analytic bound tables,
// and seeded Monte Carlo estimation with machine-readable output.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgeom/bounds.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/measures.hpp"
#include "qgeom/montecarlo.hpp"
#include "qgeom/specfun.hpp"
#include "qgeom/states.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr double kLinearPrintLimit = 700.0;

qgeom::HilbertFactorization parse_factorization(const std::string& text)
{
    std::vector<int> factors;
    std::string token;
    for (char c : text + "x") {
        if (c == 'x' || c == 'X') {
            if (token.empty()) {
                throw qgeom::validation_error(
                    "factorization: expected digits between 'x' separators");
            }
            factors.push_back(std::stoi(token));
            token.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            token += c;
        } else {
            throw qgeom::validation_error(
                "factorization: only digits and 'x' allowed, e.g. 2x3");
        }
    }
    return qgeom::HilbertFactorization(factors);
}

std::string metric_name(qgeom::Metric metric)
{
    return metric == qgeom::Metric::HS ? "hs" : "bures";
}

void print_kv(std::ostream& out, const std::string& key, const std::string& v)
{
    out << std::left << std::setw(14) << (key + ":") << v << "\n";
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// ---------------------------------------------------------------- exact ---

struct ExactArgs {
    std::string metric = "hs";
    int n = 0;
    std::string format = "text";
};

int run_exact(const ExactArgs& args)
{
    const qgeom::Metric metric =
        args.metric == "hs" ? qgeom::Metric::HS : qgeom::Metric::Bures;
    const qgeom::LogVolume volume = metric == qgeom::Metric::HS
                                        ? qgeom::exact_hs_volume(args.n)
                                        : qgeom::exact_bures_volume(args.n);
    const double radius = qgeom::vrad(volume);
    const bool representable = std::abs(volume.log_value) < kLinearPrintLimit;

    if (args.format == "json") {
        json out;
        out["command"] = "exact";
        out["metric"] = metric_name(metric);
        out["N"] = args.n;
        out["d"] = volume.d;
        out["log_volume"] = volume.log_value;
        out["volume"] = representable ? json(std::exp(volume.log_value))
                                      : json(nullptr);
        out["vrad"] = radius;
        out["notice"] = representable
                            ? json(nullptr)
                            : json("linear volume not representable in"
                                   " double precision; use log_volume");
        std::cout << out.dump() << "\n";
    } else {
        print_kv(std::cout, "metric", metric_name(metric));
        print_kv(std::cout, "N", std::to_string(args.n));
        print_kv(std::cout, "d", std::to_string(volume.d));
        print_kv(std::cout, "log_volume", fmt(volume.log_value));
        if (representable) {
            print_kv(std::cout, "volume", fmt(std::exp(volume.log_value)));
        } else {
            print_kv(std::cout, "volume",
                     "(not representable in double precision; log only)");
        }
        print_kv(std::cout, "vrad", fmt(radius));
    }
    return 0;
}

// ------------------------------------------------------------ constants ---

struct ConstantsArgs {
    std::vector<int> n_list = {2, 4, 6, 8, 10};
    std::string format = "text";
};

int run_constants(const ConstantsArgs& args)
{
    json rows = json::array();
    for (int n : args.n_list) {
        json row;
        row["N"] = n;
        row["lower_const"] = qgeom::vr_lower_constant(n);
        if (n >= 4) {
            row["upper_env_max"] = qgeom::vr_envelope_ratio_max(n);
        } else {
            row["upper_env_max"] = nullptr;
        }
        rows.push_back(row);
    }
    if (args.format == "json") {
        json out;
        out["command"] = "constants";
        out["rows"] = rows;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << std::left << std::setw(6) << "N" << std::setw(16)
                  << "lower_const" << std::setw(16) << "upper_env_max"
                  << "\n";
        for (const json& row : rows) {
            std::cout << std::left << std::setw(6)
                      << row["N"].get<int>() << std::setw(16)
                      << fmt(row["lower_const"].get<double>())
                      << std::setw(16)
                      << (row["upper_env_max"].is_null()
                              ? std::string("n/a")
                              : fmt(row["upper_env_max"].get<double>()))
                      << "\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------- bounds ---

void emit_bound_report(const std::string& mode,
                       const qgeom::BoundReport& report,
                       const std::string& format)
{
    if (format == "json") {
        json out;
        out["command"] = "bounds";
        out["mode"] = mode;
        out["N"] = report.N;
        out["lower_log"] =
            report.lower_log ? json(*report.lower_log) : json(nullptr);
        out["upper_log"] =
            report.upper_log ? json(*report.upper_log) : json(nullptr);
        out["lower"] = report.lower_log ? json(std::exp(*report.lower_log))
                                        : json(nullptr);
        out["upper"] = report.upper_log ? json(std::exp(*report.upper_log))
                                        : json(nullptr);
        out["parameters"] = report.parameters;
        std::cout << out.dump() << "\n";
    } else {
        print_kv(std::cout, "mode", mode);
        print_kv(std::cout, "N", std::to_string(report.N));
        if (report.lower_log) {
            print_kv(std::cout, "lower_log", fmt(*report.lower_log));
            print_kv(std::cout, "lower", fmt(std::exp(*report.lower_log)));
        } else {
            print_kv(std::cout, "lower", "n/a");
        }
        if (report.upper_log) {
            print_kv(std::cout, "upper_log", fmt(*report.upper_log));
            print_kv(std::cout, "upper", fmt(std::exp(*report.upper_log)));
        } else {
            print_kv(std::cout, "upper", "n/a");
        }
        for (const auto& [key, value] : report.parameters) {
            print_kv(std::cout, key, fmt(value));
        }
    }
}

// ------------------------------------------------------------- estimate ---

struct EstimateArgs {
    std::string set = "full";
    std::string metric = "hs";
    std::string quantity = "probability";
    int n = 0;
    std::string factorization;
    double t = 0.0;
    bool has_t = false;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    int chunks = 0;
    std::string format = "json";
};

int run_estimate(const EstimateArgs& args)
{
    int n_dim = args.n;
    std::optional<qgeom::HilbertFactorization> factorization;
    if (!args.factorization.empty()) {
        factorization = parse_factorization(args.factorization);
        n_dim = factorization->total_dimension();
        if (args.n != 0 && args.n != n_dim) {
            throw qgeom::validation_error(
                "estimate: --N contradicts --H; drop --N for PPT runs");
        }
    }
    if (n_dim < 2) {
        throw qgeom::domain_error("estimate: need --N >= 2 or --H");
    }

    qgeom::mc::StatePredicate predicate;
    if (args.set == "full") {
        predicate = qgeom::mc::sets::full();
    } else if (args.set == "ppt") {
        if (!factorization || !factorization->bipartite()) {
            throw qgeom::validation_error(
                "estimate: --set ppt requires a bipartite --H (e.g. 2x2)");
        }
        predicate = qgeom::mc::sets::ppt(*factorization);
    } else if (args.set == "ktube") {
        if (!args.has_t) {
            throw qgeom::validation_error("estimate: --set ktube requires --t");
        }
        predicate = qgeom::mc::sets::k_tube(args.t);
    } else if (args.set == "kface") {
        if (!args.has_t) {
            throw qgeom::validation_error("estimate: --set kface requires --t");
        }
        predicate = qgeom::mc::sets::k_face(args.t);
    } else {
        throw qgeom::validation_error("estimate: unknown set " + args.set);
    }

    const qgeom::Metric metric =
        args.metric == "hs" ? qgeom::Metric::HS : qgeom::Metric::Bures;
    qgeom::mc::McConfig config;
    config.threads = args.threads;
    config.chunks = args.chunks;

    qgeom::mc::EstimateWithError estimate;
    if (args.quantity == "probability") {
        estimate = metric == qgeom::Metric::HS
                       ? qgeom::mc::estimate_hs_probability(
                             n_dim, predicate, args.samples, args.seed, config)
                       : qgeom::mc::estimate_bures_probability(
                             n_dim, predicate, args.samples, args.seed, config);
    } else if (args.quantity == "vr") {
        estimate = qgeom::mc::estimate_vr(n_dim, predicate, metric,
                                          args.samples, args.seed, config);
    } else if (args.quantity == "volume") {
        if (metric != qgeom::Metric::Bures || args.set != "full") {
            throw qgeom::validation_error(
                "estimate: --quantity volume supports --metric bures"
                " --set full only");
        }
        estimate = qgeom::mc::estimate_bures_state_volume(n_dim, args.samples,
                                                          args.seed, config);
    } else {
        throw qgeom::validation_error("estimate: unknown quantity " +
                                      args.quantity);
    }

    if (args.format == "json") {
        json out;
        out["command"] = "estimate";
        out["N"] = n_dim;
        out["metric"] = metric_name(metric);
        out["set"] = args.set;
        if (args.set == "ktube" || args.set == "kface") {
            out["t"] = args.t;
        }
        out["quantity"] = args.quantity;
        out["estimate"] = estimate.estimate;
        out["std_error"] = estimate.std_error;
        out["ci95"] = {estimate.ci95.first, estimate.ci95.second};
        out["n_samples"] = estimate.n_samples;
        out["n_rejected_singular"] = estimate.n_rejected_singular;
        out["seed"] = estimate.seed;
        out["elapsed_ms"] = estimate.elapsed_ms;
        if (!estimate.warning.empty()) {
            out["warning"] = estimate.warning;
        }
        std::cout << out.dump() << "\n";
    } else {
        print_kv(std::cout, "set", args.set);
        print_kv(std::cout, "metric", metric_name(metric));
        print_kv(std::cout, "quantity", args.quantity);
        print_kv(std::cout, "estimate", fmt(estimate.estimate));
        print_kv(std::cout, "std_error", fmt(estimate.std_error));
        print_kv(std::cout, "ci95",
                 "[" + fmt(estimate.ci95.first) + ", " +
                     fmt(estimate.ci95.second) + "]");
        print_kv(std::cout, "n_samples", std::to_string(estimate.n_samples));
        print_kv(std::cout, "n_rejected",
                 std::to_string(estimate.n_rejected_singular));
        print_kv(std::cout, "seed", std::to_string(estimate.seed));
        print_kv(std::cout, "elapsed_ms", std::to_string(estimate.elapsed_ms));
        if (!estimate.warning.empty()) {
            print_kv(std::cout, "warning", estimate.warning);
        }
    }
    return 0;
}

// --------------------------------------------------------------- sample ---

struct SampleArgs {
    int n = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    int chunks = 0;
    std::string out_path;
};

int run_sample(const SampleArgs& args)
{
    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) {
            throw qgeom::validation_error("sample: cannot open " +
                                          args.out_path);
        }
        sink = &file;
    }
    qgeom::mc::McConfig config;
    config.threads = args.threads;
    config.chunks = args.chunks;
    config.sample_dump = sink;
    const qgeom::mc::EstimateWithError run =
        qgeom::mc::estimate_bures_probability(args.n, qgeom::mc::sets::full(),
                                              args.samples, args.seed, config);
    std::cerr << "wrote " << (run.n_samples + run.n_rejected_singular)
              << " rows (" << run.n_rejected_singular << " singular)"
              << std::endl;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact volumes, analytic bounds, and seeded Monte Carlo"
                 " estimates for the geometry of quantum state space"};
    app.require_subcommand(1);

    ExactArgs exact_args;
    CLI::App* exact = app.add_subcommand(
        "exact", "Exact Bures / Hilbert-Schmidt volume of the state body");
    exact->add_option("--metric", exact_args.metric, "hs or bures")
        ->required()
        ->check(CLI::IsMember({"hs", "bures"}));
    exact->add_option("--N", exact_args.n, "Hilbert space dimension (>= 2)")
        ->required();
    exact->add_option("--format", exact_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    ConstantsArgs constants_args;
    CLI::App* constants = app.add_subcommand(
        "constants",
        "Per-N constants of the two-sided volume-radius comparison");
    constants->add_option("--N", constants_args.n_list,
                          "dimensions to tabulate");
    constants->add_option("--format", constants_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Analytic volume-radius bound evaluators");
    bounds->require_subcommand(1);
    std::string bounds_format = "text";

    int comparison_n = 4;
    double comparison_alpha = 1.0;
    CLI::App* comparison = bounds->add_subcommand(
        "vr-comparison", "Two-sided VR comparison at a given alpha = VR_HS");
    comparison->add_option("--N", comparison_n)->required();
    comparison->add_option("--alpha", comparison_alpha)->required();
    comparison->add_option("--format", bounds_format)
        ->check(CLI::IsMember({"text", "json"}));

    int sandwich_n = 2;
    double sandwich_p = 2.0;
    std::optional<double> sandwich_log_vhs;
    CLI::App* sandwich = bounds->add_subcommand(
        "sandwich", "Two-sided Bures volume bounds from a known HS volume");
    sandwich->add_option("--N", sandwich_n)->required();
    sandwich->add_option("--p", sandwich_p, "Hoelder exponent > 1");
    sandwich->add_option("--log-vhs-k", sandwich_log_vhs,
                      "ln V_HS(K); defaults to the full body");
    sandwich->add_option("--format", bounds_format)
        ->check(CLI::IsMember({"text", "json"}));

    int cor_d = 2, cor_n = 2;
    std::optional<double> cor_lo, cor_hi;
    CLI::App* many_small = bounds->add_subcommand(
        "separable-many-small",
        "Separable-set VR envelope, many small subsystems");
    many_small->add_option("--D", cor_d)->required();
    many_small->add_option("--n", cor_n)->required();
    many_small->add_option("--c-lo", cor_lo);
    many_small->add_option("--c-hi", cor_hi);
    many_small->add_option("--format", bounds_format)
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* few_large = bounds->add_subcommand(
        "separable-few-large",
        "Separable-set VR envelope, few large subsystems");
    few_large->add_option("--D", cor_d)->required();
    few_large->add_option("--n", cor_n)->required();
    few_large->add_option("--c-lo", cor_lo);
    few_large->add_option("--c-hi", cor_hi);
    few_large->add_option("--format", bounds_format)
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* ppt_scaling = bounds->add_subcommand(
        "ppt-scaling", "Separable-vs-PPT volume-radius scaling envelopes");
    ppt_scaling->add_option("--D", cor_d)->required();
    ppt_scaling->add_option("--c-lo", cor_lo);
    ppt_scaling->add_option("--c-hi", cor_hi);
    ppt_scaling->add_option("--format", bounds_format)
        ->check(CLI::IsMember({"text", "json"}));

    EstimateArgs estimate_args;
    CLI::App* estimate = app.add_subcommand(
        "estimate", "Seeded Monte Carlo probability / VR / volume estimate");
    estimate->add_option("--set", estimate_args.set)
        ->check(CLI::IsMember({"full", "ppt", "ktube", "kface"}));
    estimate->add_option("--metric", estimate_args.metric)
        ->check(CLI::IsMember({"hs", "bures"}));
    estimate->add_option("--quantity", estimate_args.quantity)
        ->check(CLI::IsMember({"probability", "vr", "volume"}));
    estimate->add_option("--N", estimate_args.n);
    estimate->add_option("--H", estimate_args.factorization,
                         "tensor factorization, e.g. 2x2 or 2x3x2");
    CLI::Option* t_opt = estimate->add_option("--t", estimate_args.t,
                                              "shrink / face parameter in"
                                              " (0,1)");
    estimate->add_option("--samples", estimate_args.samples)->required();
    estimate->add_option("--seed", estimate_args.seed)->required();
    estimate->add_option("--threads", estimate_args.threads,
                         "0 = QGEOM_THREADS env or hardware");
    estimate->add_option("--chunks", estimate_args.chunks,
                         "0 = derived from --samples");
    estimate->add_option("--format", estimate_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand(
        "sample", "Dump HS-ensemble spectra and importance weights as CSV");
    sample->add_option("--N", sample_args.n)->required();
    sample->add_option("--samples", sample_args.samples)->required();
    sample->add_option("--seed", sample_args.seed)->required();
    sample->add_option("--threads", sample_args.threads);
    sample->add_option("--chunks", sample_args.chunks);
    sample->add_option("--out", sample_args.out_path,
                       "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*exact) {
            return run_exact(exact_args);
        }
        if (*constants) {
            return run_constants(constants_args);
        }
        if (*comparison) {
            qgeom::BoundReport report;
            report.N = comparison_n;
            report.lower_log = std::log(qgeom::vr_lower_constant(comparison_n) *
                                        comparison_alpha);
            report.parameters = {{"alpha", comparison_alpha}};
            if (comparison_n >= 4) {
                report.upper_log =
                    std::log(qgeom::vr_upper_envelope(comparison_n, comparison_alpha));
                const qgeom::EnvelopeExponents exps =
                    qgeom::upper_envelope_exponents(comparison_n, comparison_alpha);
                report.parameters["p"] = exps.p;
                report.parameters["beta"] = exps.beta;
            }
            emit_bound_report("vr-comparison", report, bounds_format);
            return 0;
        }
        if (*sandwich) {
            const double log_vhs =
                sandwich_log_vhs.value_or(qgeom::exact_hs_volume(sandwich_n).log_value);
            emit_bound_report(
                "sandwich",
                qgeom::bures_volume_sandwich(sandwich_n, log_vhs, sandwich_p),
                bounds_format);
            return 0;
        }
        if (*many_small) {
            emit_bound_report(
                "separable-many-small",
                qgeom::separable_vr_bounds_many_small(
                    cor_d, cor_n,
                    cor_lo.value_or(qgeom::bound_defaults::kManySmallLower4),
                    cor_hi.value_or(qgeom::bound_defaults::kManySmallUpper4)),
                bounds_format);
            return 0;
        }
        if (*few_large) {
            emit_bound_report(
                "separable-few-large",
                qgeom::separable_vr_bounds_few_large(
                    cor_d, cor_n,
                    cor_lo.value_or(qgeom::bound_defaults::few_large_lower()),
                    cor_hi.value_or(qgeom::bound_defaults::kManySmallUpper4)),
                bounds_format);
            return 0;
        }
        if (*ppt_scaling) {
            emit_bound_report("ppt-scaling",
                              qgeom::separable_vs_ppt_scaling(
                                  cor_d, cor_lo.value_or(1.0),
                                  cor_hi.value_or(1.0)),
                              bounds_format);
            return 0;
        }
        if (*estimate) {
            estimate_args.has_t = t_opt->count() > 0;
            return run_estimate(estimate_args);
        }
        if (*sample) {
            return run_sample(sample_args);
        }
    } catch (const qgeom::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << std::endl;
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << std::endl;
        return kExitNumeric;
    }
    return kExitUsage;
}
