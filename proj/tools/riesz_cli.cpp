// Command-line driver: closed-form constants, grid verification of the
// pointwise minorant inequality, the scalar-inequality suite, sharpness
// curves of the extremal family, and randomized ratio search.  All reports
// are JSON; CSV is used only for grid/trace dumps.  Exit codes: 0 all
// checks passed, 1 a check failed, 2 usage or domain error.

#include "riesz/riesz.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using riesz::ordered_json;

struct CommonOpts {
    double p = 1.5;
    double b = 2.0;
    std::uint64_t seed = 42;
    int grid = 0;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "exponent p in [1, 2]")->capture_default_str();
    cmd->add_option("--b", o.b, "projection weight b > 0")->capture_default_str();
    cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
    cmd->add_option("--grid", o.grid, "points per grid axis (0 = built-in defaults)");
    cmd->add_option("--out", o.out, "also write the report to this file");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

riesz::GridSpec grid_spec(const CommonOpts& o) {
    riesz::GridSpec g;
    if (o.grid > 0) {
        g.n_1d = std::max(o.grid, 16);
        g.n_2d = std::min(std::max(o.grid, 16), 300);
        g.n_3d = std::min(std::max(o.grid, 8), 64);
        g.n_aux = std::max(o.grid, 64);
    }
    return g;
}

int emit(const std::string& text, const CommonOpts& o) {
    std::cout << text << "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << text << "\n";
    }
    return 0;
}

bool all_passed(const std::vector<riesz::VerificationReport>& reps) {
    for (const auto& r : reps)
        if (!r.passed) return false;
    return true;
}

ordered_json reports_json(const std::vector<riesz::VerificationReport>& reps) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reps) arr.push_back(riesz::to_json(r));
    return arr;
}

std::vector<double> default_c_values(double p) {
    std::vector<double> cs;
    for (const double f : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999}) cs.push_back(f / p);
    return cs;
}

struct SharpnessResult {
    ordered_json json;
    std::string csv;
    bool passed = false;
    riesz::VerificationReport as_report;
};

SharpnessResult run_sharpness(const riesz::Params& pr, std::vector<double> c_values,
                              std::optional<double> beta_override) {
    if (c_values.empty()) c_values = default_c_values(pr.p);
    const double A = riesz::sharp_constant_A(pr);
    std::vector<std::pair<double, double>> curve;
    if (beta_override) {
        for (const double c : c_values)
            curve.emplace_back(c, std::pow(riesz::Z_of_beta(pr, c, *beta_override) /
                                               riesz::X_of_beta(pr, c, *beta_override),
                                           1.0 / pr.p));
    } else {
        curve = riesz::extremal_ratio_curve(pr, c_values);
    }
    const double final_ratio = curve.back().second;
    const double gap = A - final_ratio;

    SharpnessResult res;
    res.passed = gap <= 5e-3;
    res.json["p"] = pr.p;
    res.json["b"] = pr.b;
    res.json["A"] = A;
    ordered_json arr = ordered_json::array();
    for (const auto& [c, ratio] : curve) {
        ordered_json pt;
        pt["c"] = c;
        pt["ratio"] = ratio;
        arr.push_back(pt);
    }
    res.json["curve"] = arr;
    res.json["final_ratio"] = final_ratio;
    res.json["gap"] = gap;
    res.json["passed"] = res.passed;

    std::ostringstream csv;
    csv << "c,ratio\n";
    char line[96];
    for (const auto& [c, ratio] : curve) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", c, ratio);
        csv << line;
    }
    res.csv = csv.str();

    res.as_report.name = "sharpness_curve";
    res.as_report.domain_description = "A - (Z/X)^(1/p) at the largest requested c";
    res.as_report.num_points = static_cast<long>(curve.size());
    res.as_report.worst_value = gap;
    res.as_report.worst_point = {curve.back().first};
    res.as_report.tolerance = 5e-3;
    res.as_report.passed = res.passed;
    return res;
}

std::vector<riesz::VerificationReport> run_pointwise(const riesz::Params& pr,
                                                     const CommonOpts& o) {
    riesz::SlackGridSpec sg;
    riesz::SubharmonicityGrid hg;
    if (o.grid > 0) {
        sg.n_radial = std::max(4, o.grid / 2);
        sg.n_angular = std::max(8, o.grid);
        hg.n_radial = std::max(8, o.grid);
        hg.n_angular = std::max(8, o.grid);
    }
    std::vector<riesz::VerificationReport> reps;
    reps.push_back(riesz::verify_pointwise_slack(pr, sg));
    if (!riesz::detail::is_degenerate_p2(pr.p))
        reps.push_back(riesz::verify_equality_locus(pr));
    reps.push_back(riesz::subharmonicity_check(pr.p, hg));
    riesz::LineCheckGrid lg;
    lg.seed = o.seed;
    reps.push_back(riesz::plurisubharmonicity_check(pr.p, 100, lg));
    return reps;
}

void dump_trace(const std::string& path, const riesz::Params& pr, double c) {
    using riesz::Complex;
    const auto variant = riesz::detail::is_degenerate_p2(pr.p)
                             ? riesz::ExtremalVariant::p2_degenerate
                             : riesz::ExtremalVariant::rbar_weighted;
    const riesz::ExtremalSpec spec(pr, c, variant);
    std::ofstream f(path);
    f << "t,re_f,im_f,abs_f\n";
    char line[160];
    const int n = 2048;
    for (int j = 0; j < n; ++j) {
        const double t = -riesz::kPi + 2.0 * riesz::kPi * (j + 0.5) / n;  // avoids t = 0
        const Complex v = riesz::eval_extremal_boundary(spec, t);
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", t, v.real(), v.imag(),
                      std::abs(v));
        f << line;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp weighted conjugate-function inequality toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::vector<double> c_values;
    std::optional<double> beta_override;
    int trials = 1000;
    int degree = 8;
    int iterations = 24;
    std::string mode = "random";
    std::string dump_slack_path;
    std::string dump_trace_path;

    CLI::App* cmd_constants = app.add_subcommand("constants", "closed-form constant set");
    add_common(cmd_constants, o);

    CLI::App* cmd_pointwise =
        app.add_subcommand("verify-pointwise", "grid checks of the pointwise inequality");
    add_common(cmd_pointwise, o);
    cmd_pointwise->add_option("--dump-slack", dump_slack_path, "write slack landscape CSV");

    CLI::App* cmd_lemmas =
        app.add_subcommand("verify-lemmas", "scalar inequality suite");
    add_common(cmd_lemmas, o);

    CLI::App* cmd_sharp = app.add_subcommand("sharpness", "extremal family ratio curve");
    add_common(cmd_sharp, o);
    cmd_sharp->add_option("--c", c_values, "c values (each with c*p < 1)");
    double beta_flag = -1.0;
    auto* beta_opt = cmd_sharp->add_option("--beta", beta_flag, "override mixing weight");
    cmd_sharp->add_option("--dump-trace", dump_trace_path,
                          "write boundary trace CSV at the largest c");

    CLI::App* cmd_search = app.add_subcommand("search", "randomized ratio search");
    add_common(cmd_search, o);
    cmd_search->add_option("--mode", mode, "random|ascend|curve")
        ->check(CLI::IsMember({"random", "ascend", "curve"}))
        ->capture_default_str();
    cmd_search->add_option("--trials", trials, "random trials")->capture_default_str();
    cmd_search->add_option("--degree", degree, "coefficient degree")->capture_default_str();
    cmd_search->add_option("--iterations", iterations, "ascent sweeps")->capture_default_str();

    CLI::App* cmd_all = app.add_subcommand("report-all", "run everything, one JSON report");
    add_common(cmd_all, o);
    cmd_all->add_option("--trials", trials, "random trials")->capture_default_str();
    cmd_all->add_option("--degree", degree, "coefficient degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool csv = o.format == "csv";
    try {
        const riesz::Params pr(o.p, o.b);

        if (cmd_constants->parsed()) {
            if (csv) {
                std::cerr << "error: constants supports --format json only\n";
                return 2;
            }
            return emit(riesz::to_json(riesz::compute_constants(pr)).dump(2), o);
        }

        if (cmd_pointwise->parsed()) {
            if (csv) {
                std::cerr << "error: verify-pointwise reports are JSON; use --dump-slack "
                             "for the CSV landscape\n";
                return 2;
            }
            if (!dump_slack_path.empty()) {
                std::ofstream f(dump_slack_path);
                riesz::SlackGridSpec sg;
                sg.n_radial = 8;
                sg.n_angular = 16;
                riesz::write_slack_csv(f, pr, sg);
            }
            const auto reps = run_pointwise(pr, o);
            ordered_json j;
            j["p"] = pr.p;
            j["b"] = pr.b;
            j["reports"] = reports_json(reps);
            const int rc = emit(j.dump(2), o);
            return rc != 0 ? rc : (all_passed(reps) ? 0 : 1);
        }

        if (cmd_lemmas->parsed()) {
            if (csv) {
                std::cerr << "error: verify-lemmas supports --format json only\n";
                return 2;
            }
            const auto reps = riesz::run_lemma_suite(pr, grid_spec(o));
            ordered_json j;
            j["p"] = pr.p;
            j["b"] = pr.b;
            j["reports"] = reports_json(reps);
            const int rc = emit(j.dump(2), o);
            return rc != 0 ? rc : (all_passed(reps) ? 0 : 1);
        }

        if (cmd_sharp->parsed()) {
            for (const double c : c_values)
                if (!(c > 0.0 && c * pr.p < 1.0)) {
                    std::cerr << "error: each c must satisfy 0 < c*p < 1\n";
                    return 2;
                }
            if (beta_opt->count() > 0) {
                if (!(beta_flag >= 0.0 && beta_flag <= 1.0)) {
                    std::cerr << "error: --beta must lie in [0, 1]\n";
                    return 2;
                }
                beta_override = beta_flag;
            }
            const SharpnessResult res = run_sharpness(pr, c_values, beta_override);
            if (!dump_trace_path.empty()) {
                const double c_last =
                    c_values.empty() ? default_c_values(pr.p).back() : c_values.back();
                dump_trace(dump_trace_path, pr, c_last);
            }
            const int rc = emit(csv ? res.csv : res.json.dump(2), o);
            return rc != 0 ? rc : (res.passed ? 0 : 1);
        }

        if (cmd_search->parsed()) {
            if (mode == "curve") {
                const SharpnessResult res = run_sharpness(pr, {}, std::nullopt);
                const int rc = emit(csv ? res.csv : res.json.dump(2), o);
                return rc != 0 ? rc : (res.passed ? 0 : 1);
            }
            if (csv) {
                std::cerr << "error: search reports are JSON\n";
                return 2;
            }
            ordered_json j;
            j["p"] = pr.p;
            j["b"] = pr.b;
            j["mode"] = mode;
            bool ok = false;
            if (mode == "random") {
                const auto out = riesz::random_never_exceeds(pr, trials, degree, o.seed);
                j["report"] = riesz::to_json(out.report);
                j["best_ratio"] = out.best_ratio;
                j["best_pair"] = riesz::to_json(out.best);
                ok = out.report.passed;
            } else {
                const auto [pair, ratio] = riesz::ascend_ratio(pr, degree, iterations, o.seed);
                const double bound = riesz::sharp_constant_A(pr) * (1.0 + 1e-6);
                j["best_ratio"] = ratio;
                j["A"] = riesz::sharp_constant_A(pr);
                j["within_bound"] = ratio <= bound;
                j["best_pair"] = riesz::to_json(pair);
                ok = ratio <= bound;
            }
            const int rc = emit(j.dump(2), o);
            return rc != 0 ? rc : (ok ? 0 : 1);
        }

        if (cmd_all->parsed()) {
            if (csv) {
                std::cerr << "error: report-all supports --format json only\n";
                return 2;
            }
            std::vector<riesz::VerificationReport> reps = run_pointwise(pr, o);
            const auto lemma_reps = riesz::run_lemma_suite(pr, grid_spec(o));
            reps.insert(reps.end(), lemma_reps.begin(), lemma_reps.end());
            const SharpnessResult sharp = run_sharpness(pr, {}, std::nullopt);
            reps.push_back(sharp.as_report);
            reps.push_back(riesz::random_never_exceeds(pr, trials, degree, o.seed).report);
            ordered_json j = riesz::to_json(riesz::compute_constants(pr));
            j["reports"] = reports_json(reps);
            const int rc = emit(j.dump(2), o);
            return rc != 0 ? rc : (all_passed(reps) ? 0 : 1);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const riesz::degenerate_p2_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
