// selberg_lab: command-line front end for the Selberg-class laboratory.
// Loads an L-function definition, dispatches the module operations, and
// emits JSON reports ({tool_version, config, results} envelope) or
// plot-ready CSV.  All numbers come from library calls; the tool itself
// only parses flags and serializes.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <selberg/selberg.hpp>

namespace {

using json = nlohmann::ordered_json;
using selberg::cplx;

json complex_pair(cplx z) { return json::array({std::real(z), std::imag(z)}); }

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

// Reports are fully built in memory and written in one shot at the end, so
// a failure part-way leaves no partial artifact behind.
void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("output path not writable: " + out_path);
    out << payload;
}

std::string envelope(const json& config, const json& results) {
    json report;
    report["tool_version"] = selberg::TOOL_VERSION;
    report["config"] = config;
    report["results"] = results;
    return report.dump(2) + "\n";
}

std::string csv_header(const json& config) {
    std::ostringstream out;
    out << "# tool_version " << selberg::TOOL_VERSION << "\n";
    out << "# config " << config.dump() << "\n";
    return out.str();
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    if (points < 2 || !(lo < hi))
        throw std::invalid_argument("grid requires at least 2 points and from < to");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

struct Loaded {
    selberg::LFunctionDefinition def;
    selberg::SelbergInvariants inv;
};

Loaded load(const std::string& path) {
    Loaded loaded;
    loaded.def = selberg::load_definition(path);
    loaded.inv = selberg::compute_invariants(loaded.def.gamma);
    return loaded;
}

json condition_json(const selberg::ConditionReport& report) {
    json entry;
    entry["which"] = selberg::to_string(report.which);
    json stats;
    for (const auto& [name, value] : report.stats) stats[name] = value;
    entry["stats"] = stats;
    json table = json::array();
    for (const auto& [x, value] : report.table) table.push_back(json::array({x, value}));
    entry["table"] = table;
    entry["pass"] = report.pass;
    entry["criterion"] = report.criterion;
    return entry;
}

int run_invariants(const std::string& config_path, const std::string& out_path) {
    Loaded loaded = load(config_path);
    json config{{"command", "invariants"}, {"lfunction", config_path}};
    json results;
    results["name"] = loaded.def.name;
    results["degree"] = loaded.inv.degree;
    results["xi"] = complex_pair(loaded.inv.xi);
    results["conductor"] = loaded.inv.conductor;
    results["q1"] = loaded.inv.q1;
    results["omega"] = complex_pair(loaded.def.gamma.omega);
    results["omega1"] = complex_pair(loaded.inv.omega1);
    results["omega1_prime"] = complex_pair(loaded.inv.omega1_prime);
    results["omega2"] = complex_pair(loaded.inv.omega2);
    emit(envelope(config, results), out_path);
    return 0;
}

int run_z_eval(const std::string& config_path, double from, double to, std::size_t grid,
               std::size_t n_max, std::size_t workers, const std::string& format,
               const std::string& out_path) {
    Loaded loaded = load(config_path);
    auto series = selberg::build_coefficients(loaded.def, n_max);
    from = std::max(from, 2.0);
    auto t_grid = linear_grid(from, to, grid);
    auto samples =
        selberg::hardy_z_grid(loaded.def.gamma, loaded.inv, series, t_grid, workers);
    json config{{"command", "z-eval"}, {"lfunction", config_path}, {"from", from},
                {"to", to},            {"grid", grid},             {"workers", workers}};
    if (format == "csv") {
        std::ostringstream out;
        out << csv_header(config);
        out << "t,Z,Re(F),Im(F),theta,cutoff,imag_residual\n";
        for (const auto& s : samples)
            out << format_double(s.t) << ',' << format_double(s.z) << ','
                << format_double(std::real(s.f_value)) << ','
                << format_double(std::imag(s.f_value)) << ',' << format_double(s.theta) << ','
                << s.cutoff << ',' << format_double(s.imag_residual) << "\n";
        emit(out.str(), out_path);
    } else {
        json rows = json::array();
        for (const auto& s : samples) {
            json row;
            row["t"] = s.t;
            row["Z"] = s.z;
            row["F"] = complex_pair(s.f_value);
            row["theta"] = s.theta;
            row["cutoff"] = s.cutoff;
            row["imag_residual"] = s.imag_residual;
            row["accepted"] = s.accepted;
            rows.push_back(row);
        }
        emit(envelope(config, json{{"rows", rows}}), out_path);
    }
    return 0;
}

int run_scan(const std::string& config_path, double from, double to, double refine, double tol,
             std::size_t n_max, const std::string& format, const std::string& out_path) {
    Loaded loaded = load(config_path);
    auto series = selberg::build_coefficients(loaded.def, n_max);
    selberg::StepPolicy step;
    step.refine_factor = refine;
    step.bisection_width = tol;
    auto scan = selberg::scan_sign_changes(loaded.def.gamma, loaded.inv, series, from, to, step);
    json config{{"command", "scan"}, {"lfunction", config_path}, {"from", from},
                {"to", to},          {"refine", refine},         {"tol", tol}};
    if (format == "csv") {
        std::ostringstream out;
        out << csv_header(config);
        out << "zero,t_left,t_right,width\n";
        for (const auto& z : scan.zeros)
            out << format_double(z.refined_zero) << ',' << format_double(z.t_left) << ','
                << format_double(z.t_right) << ',' << format_double(z.refinement_width) << "\n";
        emit(out.str(), out_path);
    } else {
        json zeros = json::array();
        for (const auto& z : scan.zeros) {
            json row;
            row["zero"] = z.refined_zero;
            row["t_left"] = z.t_left;
            row["t_right"] = z.t_right;
            row["width"] = z.refinement_width;
            zeros.push_back(row);
        }
        json results;
        results["count"] = scan.zeros.size();
        results["samples"] = scan.samples;
        results["rejected_samples"] = scan.rejected_samples;
        results["t_start"] = scan.t_start;
        results["zeros"] = zeros;
        emit(envelope(config, results), out_path);
    }
    return 0;
}

int run_integrals(const std::string& config_path, double T, double tol, std::size_t n_max,
                  const std::string& out_path) {
    Loaded loaded = load(config_path);
    auto series = selberg::build_coefficients(loaded.def, n_max);
    auto report = selberg::hardy_integrals(loaded.def.gamma, loaded.inv, series, T, tol);
    json config{{"command", "integrals"}, {"lfunction", config_path}, {"T", T}, {"tol", tol}};
    json results;
    results["T"] = report.T;
    results["I"] = report.integral;
    results["I_abs"] = report.integral_abs;
    results["error_estimate"] = report.quadrature_error_estimate;
    results["samples"] = report.samples;
    emit(envelope(config, results), out_path);
    return 0;
}

int run_lemma1(std::vector<double> t_slices, std::vector<double> alphas, double tol,
               std::size_t points, const std::string& out_path) {
    if (t_slices.empty()) t_slices = {100.0, 1000.0, 10000.0};
    if (alphas.empty()) alphas = {0.0, 0.5, 1.0};
    auto report = selberg::verify_lemma1(t_slices, alphas, tol, points);
    json config{{"command", "lemma1"}, {"t_slices", t_slices}, {"alphas", alphas},
                {"tol", tol},          {"points", points}};
    json blocks = json::array();
    for (const auto& block : report.blocks) {
        json entry;
        entry["regime"] = selberg::to_string(block.regime);
        entry["alpha"] = block.alpha;
        entry["t_slices"] = block.t_slices;
        entry["sup_ratios"] = block.sup_ratios;
        entry["fitted_constant"] = block.fitted_constant;
        entry["stable"] = block.stable;
        blocks.push_back(entry);
    }
    json rows = json::array();
    for (const auto& row : report.rows) {
        json entry;
        entry["alpha"] = row.spec.alpha;
        entry["beta"] = row.spec.beta;
        entry["T"] = row.spec.T;
        entry["T_prime"] = row.spec.T_prime;
        entry["abs_J"] = row.abs_j;
        entry["denominator"] = row.denominator;
        entry["ratio"] = row.ratio;
        rows.push_back(entry);
    }
    json results;
    results["all_stable"] = report.all_stable;
    results["blocks"] = blocks;
    results["rows"] = rows;
    emit(envelope(config, results), out_path);
    return 0;
}

int run_expsum(const std::string& config_path, double alpha, std::size_t n_max,
               const std::string& format, const std::string& out_path) {
    Loaded loaded = load(config_path);
    auto series = selberg::build_coefficients(loaded.def, n_max);
    if (alpha == 0.0) alpha = selberg::critical_alpha(loaded.inv);
    auto checkpoints = selberg::default_decay_checkpoints();
    while (!checkpoints.empty() && checkpoints.back() > series.length()) checkpoints.pop_back();
    auto profile = selberg::decay_profile(series, alpha, checkpoints);
    json config{{"command", "expsum"}, {"lfunction", config_path}, {"alpha", alpha},
                {"n", series.length()}};
    if (format == "csv") {
        std::ostringstream out;
        out << csv_header(config);
        out << "x,ratio\n";
        for (const auto& [x, ratio] : profile.checkpoints)
            out << x << ',' << format_double(ratio) << "\n";
        emit(out.str(), out_path);
    } else {
        json rows = json::array();
        for (const auto& [x, ratio] : profile.checkpoints)
            rows.push_back(json::array({x, ratio}));
        json results;
        results["alpha"] = profile.alpha;
        results["checkpoints"] = rows;
        emit(envelope(config, results), out_path);
    }
    return 0;
}

int run_conditions(const std::string& config_path, const std::string& config2_path,
                   std::size_t n_max, const std::string& out_path) {
    Loaded loaded = load(config_path);
    auto series = selberg::build_coefficients(loaded.def, n_max);
    const double top = std::log10(static_cast<double>(series.length()));
    json config{{"command", "conditions"}, {"lfunction", config_path}, {"n", series.length()}};
    json results = json::array();
    results.push_back(
        condition_json(selberg::condition1_sum(series, selberg::log_grid(3.0, top, 4))));
    results.push_back(
        condition_json(selberg::condition2_min(series, linear_grid(0.0, 50.0, 101), 100, -1)));
    results.push_back(
        condition_json(selberg::condition3_fit(series, selberg::log_grid(3.0, top - 1.0, 9))));
    results.push_back(
        condition_json(selberg::mean_square_check(series, selberg::log_grid(3.0, top, 13))));
    if (!config2_path.empty()) {
        Loaded other = load(config2_path);
        auto series2 = selberg::build_coefficients(other.def, n_max);
        config["lfunction2"] = config2_path;
        results.push_back(condition_json(selberg::selberg_orthogonality(
            series, series2, selberg::log_grid(2.0, top, 17))));
    }
    emit(envelope(config, results), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for degree-2 Selberg-class L-functions"};
    app.require_subcommand(1);

    std::string config_path, config2_path, out_path, format;
    double from = 2.0, to = 50.0, refine = 8.0, alpha = 0.0, t_upper = 50.0;
    double scan_tol = 1e-9, integral_tol = 0.0, lemma_tol = 1e-7;
    std::size_t grid = 101, n_max = 0, cond_n = 1000000, workers = 1, lemma_points = 0;
    std::vector<double> t_slices, alphas;

    auto* invariants = app.add_subcommand("invariants", "Functional-equation invariants");
    invariants->add_option("--config", config_path, "L-function definition file")->required();
    invariants->add_option("--out", out_path, "output file (default stdout)");

    auto* z_eval = app.add_subcommand("z-eval", "Hardy Z on a t grid");
    z_eval->add_option("--config", config_path)->required();
    z_eval->add_option("--from", from, "grid start (clamped to t >= 2)");
    z_eval->add_option("--to", to, "grid end");
    z_eval->add_option("--grid", grid, "number of grid points");
    z_eval->add_option("--n", n_max, "coefficient table length (0 = definition default)");
    z_eval->add_option("--workers", workers, "worker threads for the grid");
    z_eval->add_option("--format", format, "csv (default) or json");
    z_eval->add_option("--out", out_path);

    auto* scan = app.add_subcommand("scan", "Sign-change zero scan");
    scan->add_option("--config", config_path)->required();
    scan->add_option("--from", from);
    scan->add_option("--to", to);
    scan->add_option("--refine", refine, "step refinement factor");
    scan->add_option("--tol", scan_tol, "bisection width (default 1e-9)");
    scan->add_option("--n", n_max);
    scan->add_option("--format", format, "csv (default) or json");
    scan->add_option("--out", out_path);

    auto* integrals = app.add_subcommand("integrals", "I and I_abs over [T, 2T]");
    integrals->add_option("--config", config_path)->required();
    integrals->add_option("--to", t_upper, "T (integration over [T, 2T])");
    integrals->add_option("--tol", integral_tol, "quadrature tolerance (0 = default scale)");
    integrals->add_option("--n", n_max);
    integrals->add_option("--out", out_path);

    auto* lemma1 = app.add_subcommand("lemma1", "Oscillatory-integral regime sweep");
    lemma1->add_option("--t-slices", t_slices, "T slices (default 100,1000,10000)");
    lemma1->add_option("--alphas", alphas, "alpha values (default 0,0.5,1)");
    lemma1->add_option("--tol", lemma_tol, "quadrature tolerance scale (default 1e-7)");
    lemma1->add_option("--points", lemma_points,
                       "equispaced beta fractions per regime (default: calibration set)");
    lemma1->add_option("--out", out_path);

    auto* expsum = app.add_subcommand("expsum", "Exponential-sum decay profile");
    expsum->add_option("--config", config_path)->required();
    expsum->add_option("--alpha", alpha, "rotation (default 1/sqrt(q))");
    expsum->add_option("--n", n_max);
    expsum->add_option("--format", format, "json (default) or csv");
    expsum->add_option("--out", out_path);

    auto* conditions = app.add_subcommand("conditions", "Selberg-class condition diagnostics");
    conditions->add_option("--config", config_path)->required();
    conditions->add_option("--config2", config2_path, "second definition (adds cond4)");
    conditions->add_option("--n", cond_n, "table length (default 10^6)");
    conditions->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
        if (format.empty()) format = expsum->parsed() ? "json" : "csv";
        if (format != "csv" && format != "json")
            throw std::invalid_argument("--format must be csv or json");
        if (workers < 1) throw std::invalid_argument("--workers must be at least 1");
        if (invariants->parsed()) return run_invariants(config_path, out_path);
        if (z_eval->parsed())
            return run_z_eval(config_path, from, to, grid, n_max, workers, format, out_path);
        if (scan->parsed())
            return run_scan(config_path, from, to, refine, scan_tol, n_max, format, out_path);
        if (integrals->parsed())
            return run_integrals(config_path, t_upper, integral_tol, n_max, out_path);
        if (lemma1->parsed())
            return run_lemma1(t_slices, alphas, lemma_tol, lemma_points, out_path);
        if (expsum->parsed()) return run_expsum(config_path, alpha, n_max, format, out_path);
        if (conditions->parsed())
            return run_conditions(config_path, config2_path, cond_n, out_path);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const selberg::tolerance_error& e) {
        std::cerr << "tolerance failure: " << e.what() << "\n";
        return 3;
    } catch (const selberg::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
