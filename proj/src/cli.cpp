/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qtda/cli.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtda/io.hpp"
#include "qtda/pipeline.hpp"

namespace qtda::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUnreliable = 4;

struct CommonOptions {
    std::string input_path;
    std::optional<std::string> format;
    std::optional<std::string> output_path;
};

void add_input_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("input", opts.input_path, "csv distance matrix or json input file")
        ->required();
    cmd->add_option("--format", opts.format, "input format: csv-matrix or json")
        ->check(CLI::IsMember({"csv-matrix", "json"}));
}

void add_output_option(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--output", opts.output_path, "also write the document to this file");
}

DistanceMatrix load_distances(const CommonOptions& opts) {
    std::optional<io::InputFormat> format;
    if (opts.format)
        format = (*opts.format == "json") ? io::InputFormat::json : io::InputFormat::csv_matrix;
    return io::parse_input(opts.input_path, format).distances();
}

void emit(const ordered_json& doc, const CommonOptions& opts, std::ostream& out) {
    const std::string text = io::serialize_document(doc);
    out << text;
    if (opts.output_path) {
        std::ofstream f(*opts.output_path, std::ios::binary);
        if (!f) throw InvalidInputError("cannot write output file '" + *opts.output_path + "'");
        f << text;
    }
}

ordered_json interval_json(const PersistenceInterval& bar) {
    ordered_json j;
    j["birth"] = io::round_12_digits(bar.birth);
    if (bar.essential())
        j["death"] = nullptr;
    else
        j["death"] = io::round_12_digits(bar.death);
    return j;
}

ordered_json kernel_json(const pipeline::KernelEstimate& k) {
    ordered_json j;
    j["eta"] = io::round_12_digits(k.eta);
    j["simplex_count"] = k.simplex_count;
    j["kernel_dim_raw"] = io::round_12_digits(k.kernel_dim_raw);
    j["kernel_dim"] = k.kernel_dim;
    j["reliable"] = k.reliable;
    return j;
}

int run_betti(const CommonOptions& opts, double scale, int max_dim, std::ostream& out) {
    const DistanceMatrix d = load_distances(opts);
    ordered_json params{{"scale", scale}, {"max_dim", max_dim}};
    ordered_json betti = ordered_json::array();
    for (int k = 0; k <= max_dim; ++k) betti.push_back(betti_at_scale(d, scale, k));
    ordered_json results{{"betti", std::move(betti)}};
    emit(io::make_document("betti", io::matrix_digest(d), std::move(params), std::move(results)),
         opts, out);
    return kExitOk;
}

int run_barcode(const CommonOptions& opts, int max_dim, const std::optional<std::string>& svg_path,
                std::ostream& out) {
    const DistanceMatrix d = load_distances(opts);
    const Barcode bars = barcode(d, max_dim);
    const std::vector<double> criticals = d.critical_scales();

    ordered_json params{{"max_dim", max_dim}};
    ordered_json dims = ordered_json::array();
    for (std::size_t k = 0; k < bars.intervals.size(); ++k) {
        ordered_json entry;
        entry["dimension"] = k;
        ordered_json list = ordered_json::array();
        for (const auto& bar : bars.intervals[k]) list.push_back(interval_json(bar));
        entry["bars"] = std::move(list);

        const BettiCurve curve = betti_curve(d, static_cast<int>(k));
        ordered_json breakpoints = ordered_json::array();
        for (double b : curve.breakpoints) breakpoints.push_back(io::round_12_digits(b));
        entry["curve"] = ordered_json{{"breakpoints", std::move(breakpoints)},
                                      {"values", curve.values}};
        dims.push_back(std::move(entry));
    }
    ordered_json results{{"dimensions", std::move(dims)}};

    if (svg_path) {
        std::ofstream f(*svg_path, std::ios::binary);
        if (!f) throw InvalidInputError("cannot write svg file '" + *svg_path + "'");
        f << io::render_barcode_svg(bars, criticals);
        results["svg"] = *svg_path;
    }
    emit(io::make_document("barcode", io::matrix_digest(d), std::move(params), std::move(results)),
         opts, out);
    return kExitOk;
}

int run_qbetti(const CommonOptions& opts, double scale, int dim, std::optional<int> qpe_bits,
               bool grover, const std::string& readout, std::uint64_t seed, std::ostream& out) {
    const DistanceMatrix d = load_distances(opts);

    pipeline::QtdaConfig config;
    config.phase_register_qubits = qpe_bits;
    config.grover = grover ? pipeline::GroverMode::exact_iterations : pipeline::GroverMode::off;
    config.readout = (readout == "exact") ? pipeline::EtaReadout::exact_projection
                                          : pipeline::EtaReadout::phase_estimation;
    config.rng_seed = seed;

    const pipeline::QuantumBettiResult result = pipeline::betti_via_quantum(d, scale, dim, config);

    ordered_json params{{"scale", scale}, {"dim", dim}, {"readout", readout}, {"grover", grover}};
    if (qpe_bits) params["qpe_bits"] = *qpe_bits;

    ordered_json results;
    results["betti"] = result.betti;
    results["reliable"] = result.reliable;
    results["kernel_dim_k"] = kernel_json(result.kernel_k);
    results["kernel_dim_k_plus_1"] = kernel_json(result.kernel_k_plus_1);
    results["simplex_count_k_plus_1"] = result.simplex_count_k_plus_1;
    if (grover) {
        const pipeline::GroverPreparation prep =
            pipeline::grover_prepare_simplices(d, scale, dim, config);
        results["grover"] = ordered_json{{"iterations", prep.iterations},
                                         {"marked_count", prep.marked_count},
                                         {"marked_probability",
                                          io::round_12_digits(prep.marked_probability)}};
    }
    emit(io::make_document("qbetti", io::matrix_digest(d), std::move(params), std::move(results)),
         opts, out);
    return result.reliable ? kExitOk : kExitUnreliable;
}

int run_demo_three_point(const CommonOptions& opts, std::ostream& out) {
    const pipeline::ThreePointReport report = pipeline::three_point_demo();

    const auto scale_json = [](const pipeline::ScaleReport& s) {
        ordered_json j;
        j["epsilon"] = io::round_12_digits(s.epsilon);
        j["simplices"] = s.simplex_kets;
        j["eta_compiled"] = io::round_12_digits(s.eta_compiled);
        j["eta_general"] = io::round_12_digits(s.eta_general);
        j["kernel_dim_d1"] = s.kernel_d1.kernel_dim;
        j["betti"] = {s.betti0, s.betti1};
        return j;
    };

    ordered_json results;
    results["scale_1"] = scale_json(report.scale1);
    results["scale_2"] = scale_json(report.scale2);
    ordered_json criticals = ordered_json::array();
    for (double c : report.critical_scales) criticals.push_back(io::round_12_digits(c));
    results["critical_scales"] = std::move(criticals);
    results["h0_curve"] = report.h0_curve;
    ordered_json h0 = ordered_json::array();
    for (const auto& bar : report.h0_bars) h0.push_back(interval_json(bar));
    results["h0_bars"] = std::move(h0);
    ordered_json h1 = ordered_json::array();
    for (const auto& bar : report.h1_bars) h1.push_back(interval_json(bar));
    results["h1_bars"] = std::move(h1);

    const std::string digest = io::matrix_digest(pipeline::three_point_distances());
    emit(io::make_document("demo three-point", digest, ordered_json::object(), std::move(results)),
         opts, out);
    return kExitOk;
}

int run_demo_counterexample(const CommonOptions& opts, std::ostream& out) {
    const pipeline::CounterexampleReport report = pipeline::counterexample_demo();
    ordered_json results;
    results["mixed"] = io::round_12_digits(report.mixed_probability);
    results["pure"] = io::round_12_digits(report.pure_probability);
    const std::string digest = io::matrix_digest(pipeline::counterexample_distances());
    emit(io::make_document("demo counterexample", digest, ordered_json::object(),
                           std::move(results)),
         opts, out);
    return kExitOk;
}

int run_proportions(const CommonOptions& opts, int n_min, int n_max, int dim, int grid, int trials,
                    std::uint64_t seed, std::ostream& out) {
    const pipeline::ProportionGrid result =
        pipeline::proportion_monte_carlo(n_min, n_max, dim, grid, trials, seed);

    ordered_json params{{"n_min", n_min}, {"n_max", n_max}, {"dim", dim},
                        {"grid", grid},   {"trials", trials}, {"seed", seed}};
    ordered_json results;
    results["n"] = result.point_counts;
    ordered_json eps = ordered_json::array();
    for (double e : result.epsilon_grid) eps.push_back(io::round_12_digits(e));
    results["epsilon"] = std::move(eps);
    ordered_json means = ordered_json::array();
    ordered_json flags = ordered_json::array();
    for (std::size_t ni = 0; ni < result.point_counts.size(); ++ni) {
        ordered_json mean_row = ordered_json::array();
        ordered_json flag_row = ordered_json::array();
        for (std::size_t e = 0; e < result.epsilon_grid.size(); ++e) {
            mean_row.push_back(io::round_12_digits(
                result.mean_zeta(static_cast<Eigen::Index>(ni), static_cast<Eigen::Index>(e))));
            flag_row.push_back(static_cast<bool>(result.efficient[ni][e]));
        }
        means.push_back(std::move(mean_row));
        flags.push_back(std::move(flag_row));
    }
    results["mean_zeta"] = std::move(means);
    results["efficient"] = std::move(flags);
    results["frontier"] = "n^-6";

    emit(io::make_document("proportions", "-", std::move(params), std::move(results)), opts, out);
    return kExitOk;
}

int run_threshold(const CommonOptions& opts, std::int64_t max_simplices, std::ostream& out) {
    ordered_json params{{"max_simplices", max_simplices}};
    ordered_json table = ordered_json::array();
    for (std::int64_t s = 1; s <= max_simplices; ++s) {
        const pipeline::ErrorThreshold e = pipeline::error_threshold(s);
        table.push_back(ordered_json{{"simplices", s},
                                     {"numerator", e.numerator},
                                     {"denominator", e.denominator},
                                     {"value", io::round_12_digits(e.value())}});
    }
    ordered_json results{{"thresholds", std::move(table)}};
    emit(io::make_document("threshold", "-", std::move(params), std::move(results)), opts, out);
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vietoris-Rips Betti numbers and barcodes, classically and via a simulated "
                 "quantum pipeline"};
    app.require_subcommand(1);

    CommonOptions betti_opts;
    double betti_scale = 0.0;
    int betti_max_dim = 1;
    auto* betti_cmd = app.add_subcommand("betti", "exact Betti numbers at one scale");
    betti_cmd->add_option("--scale", betti_scale, "cutoff distance epsilon")->required();
    betti_cmd->add_option("--max-dim", betti_max_dim, "highest homology dimension (default 1)");
    add_input_options(betti_cmd, betti_opts);
    add_output_option(betti_cmd, betti_opts);

    CommonOptions barcode_opts;
    int barcode_max_dim = 1;
    std::optional<std::string> svg_path;
    auto* barcode_cmd = app.add_subcommand("barcode", "persistence barcode over all scales");
    barcode_cmd->add_option("--max-dim", barcode_max_dim, "highest homology dimension (default 1)");
    barcode_cmd->add_option("--svg", svg_path, "write a barcode plot to this file");
    add_input_options(barcode_cmd, barcode_opts);
    add_output_option(barcode_cmd, barcode_opts);

    CommonOptions qbetti_opts;
    double qbetti_scale = 0.0;
    int qbetti_dim = 0;
    std::optional<int> qpe_bits;
    bool use_grover = false;
    std::string readout = "qpe";
    std::uint64_t qbetti_seed = 0;
    auto* qbetti_cmd =
        app.add_subcommand("qbetti", "Betti number via the simulated quantum pipeline");
    qbetti_cmd->add_option("--scale", qbetti_scale, "cutoff distance epsilon")->required();
    qbetti_cmd->add_option("--dim", qbetti_dim, "homology dimension k")->required();
    qbetti_cmd->add_option("--qpe-bits", qpe_bits, "phase-register qubits (default: auto)");
    qbetti_cmd->add_flag("--grover", use_grover, "prepare simplicial states by amplitude amplification");
    qbetti_cmd->add_option("--readout", readout, "eta readout: qpe or exact")
        ->check(CLI::IsMember({"qpe", "exact"}));
    qbetti_cmd->add_option("--seed", qbetti_seed, "rng seed recorded in the configuration");
    add_input_options(qbetti_cmd, qbetti_opts);
    add_output_option(qbetti_cmd, qbetti_opts);

    CommonOptions demo_opts;
    auto* demo_cmd = app.add_subcommand("demo", "built-in reproductions");
    auto* demo_three = demo_cmd->add_subcommand("three-point", "three points at two scales");
    auto* demo_counter =
        demo_cmd->add_subcommand("counterexample", "mixed-vs-pure kernel projection");
    demo_cmd->require_subcommand(1);
    add_output_option(demo_three, demo_opts);
    add_output_option(demo_counter, demo_opts);

    CommonOptions prop_opts;
    int n_min = 0, n_max = 0, prop_dim = 1, grid = 10, trials = 10;
    std::uint64_t prop_seed = 0;
    auto* prop_cmd = app.add_subcommand("proportions", "Monte Carlo simplex proportions");
    prop_cmd->add_option("--n-min", n_min, "smallest point count")->required();
    prop_cmd->add_option("--n-max", n_max, "largest point count")->required();
    prop_cmd->add_option("--dim", prop_dim, "simplex dimension k")->required();
    prop_cmd->add_option("--grid", grid, "number of scale grid points in (0,1]")->required();
    prop_cmd->add_option("--trials", trials, "trials per cell")->required();
    prop_cmd->add_option("--seed", prop_seed, "rng seed")->required();
    add_output_option(prop_cmd, prop_opts);

    CommonOptions threshold_opts;
    std::int64_t max_simplices = 10;
    auto* threshold_cmd = app.add_subcommand("threshold", "error thresholds 0.5/|S_k|");
    threshold_cmd->add_option("--max-simplices", max_simplices, "table size")->required();
    add_output_option(threshold_cmd, threshold_opts);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (betti_cmd->parsed()) return run_betti(betti_opts, betti_scale, betti_max_dim, out);
        if (barcode_cmd->parsed())
            return run_barcode(barcode_opts, barcode_max_dim, svg_path, out);
        if (qbetti_cmd->parsed())
            return run_qbetti(qbetti_opts, qbetti_scale, qbetti_dim, qpe_bits, use_grover, readout,
                              qbetti_seed, out);
        if (demo_three->parsed()) return run_demo_three_point(demo_opts, out);
        if (demo_counter->parsed()) return run_demo_counterexample(demo_opts, out);
        if (prop_cmd->parsed())
            return run_proportions(prop_opts, n_min, n_max, prop_dim, grid, trials, prop_seed, out);
        if (threshold_cmd->parsed()) return run_threshold(threshold_opts, max_simplices, out);
    } catch (const InvalidInputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    err << "error: no subcommand given\n";
    return kExitInvalidInput;
}

} // namespace qtda::cli
