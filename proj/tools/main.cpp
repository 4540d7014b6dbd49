// Command-line front end: fit the logistic model, simulate the measure
// distribution, and emit interval reports, confidence-region polylines, and
// SVG figures.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskregion/dataset.hpp"
#include "riskregion/design.hpp"
#include "riskregion/errors.hpp"
#include "riskregion/measures.hpp"
#include "riskregion/mle.hpp"
#include "riskregion/oracle.hpp"
#include "riskregion/regions.hpp"
#include "riskregion/report.hpp"
#include "riskregion/svg.hpp"
#include "riskregion/version.hpp"

namespace {

using namespace riskregion;

constexpr int kBoundaryPoints = 256;

struct Options {
    std::string data_path;
    std::string formula_text;
    int draws = 1000;
    std::uint64_t seed = 1;
    std::vector<double> levels = {0.5, 0.95};
    std::vector<std::string> measures;
    std::string out_dir = ".";
    std::vector<std::string> formats;
    int boot = 1000;
};

struct Pipeline {
    GroupedDataset dataset;
    ModelFormula formula;
    FitResult fit;
    StrataWeights weights;
};

Pipeline run_fit(const Options& opt) {
    Pipeline p;
    p.dataset = load_dataset(opt.data_path);
    p.formula = parse_formula(opt.formula_text, p.dataset.covariate_names);
    p.fit = fit_logistic(build_design(p.dataset, p.formula));
    p.weights = covariate_distribution(p.dataset);
    return p;
}

bool wants(const Options& opt, const std::string& format) {
    return std::find(opt.formats.begin(), opt.formats.end(), format) != opt.formats.end();
}

std::string out_path(const Options& opt, const std::string& name) {
    return (std::filesystem::path(opt.out_dir) / name).string();
}

void ensure_out_dir(const Options& opt) {
    std::filesystem::create_directories(opt.out_dir);
}

RunInfo make_run_info(const Options& opt) {
    return {opt.data_path, opt.formula_text, opt.seed, opt.draws};
}

void validate_levels(const Options& opt) {
    for (double level : opt.levels)
        if (!(level > 0.0 && level < 1.0))
            throw CLI::ValidationError("--level", "levels must lie strictly in (0, 1)");
}

std::vector<MeasurePlane> requested_planes(const Options& opt) {
    std::vector<MeasurePlane> planes;
    if (opt.measures.empty()) {
        planes.assign(kAllPlanes.begin(), kAllPlanes.end());
    } else {
        for (const auto& name : opt.measures) planes.push_back(plane_from_name(name));
    }
    return planes;
}

std::string plane_file_token(MeasurePlane plane) {
    std::string token = plane_name(plane);
    std::replace(token.begin(), token.end(), '-', '_');
    return token;
}

void print_fit_summary(const Pipeline& p) {
    std::printf("converged in %d iterations (max |score| = %.2e)\n", p.fit.iterations,
                p.fit.score_max_abs);
    std::printf("%-12s %10s %10s\n", "parameter", "estimate", "std.err");
    for (Eigen::Index i = 0; i < p.fit.pi_hat.size(); ++i)
        std::printf("%-12s %10.4f %10.4f\n",
                    p.fit.parameter_names[static_cast<std::size_t>(i)].c_str(), p.fit.pi_hat[i],
                    std::sqrt(p.fit.covariance(i, i)));
}

void print_interval_summary(const IntervalReport& report) {
    std::printf("%-8s %10s", "measure", "estimate");
    for (auto it = report.levels.rbegin(); it != report.levels.rend(); ++it)
        std::printf("  lo%-6g", *it * 100);
    for (double level : report.levels) std::printf("  up%-6g", level * 100);
    std::printf("\n");
    for (std::size_t m = 0; m < kMeasureNames.size(); ++m) {
        std::printf("%-8s %10.4f", kMeasureNames[m], measure_component(report.point, m));
        for (std::size_t l = report.levels.size(); l-- > 0;)
            std::printf("  %8.4f", report.bounds[m][l].lower);
        for (std::size_t l = 0; l < report.levels.size(); ++l)
            std::printf("  %8.4f", report.bounds[m][l].upper);
        std::printf("\n");
    }
}

int cmd_fit(const Options& opt) {
    const Pipeline p = run_fit(opt);
    ensure_out_dir(opt);
    if (wants(opt, "json"))
        write_file_atomic(out_path(opt, "fit.json"),
                          fit_report_json(p.fit, p.dataset, make_run_info(opt)).dump(2) + "\n");
    if (wants(opt, "csv")) write_file_atomic(out_path(opt, "fit.csv"), fit_report_csv(p.fit));
    print_fit_summary(p);
    return 0;
}

int cmd_intervals(const Options& opt) {
    const Pipeline p = run_fit(opt);
    const MeasureDraws draws = simulate_measures(p.fit, p.weights, p.formula, opt.draws, opt.seed);
    const IntervalReport report =
        quantile_intervals(draws, opt.levels, point_measures(p.fit, p.weights, p.formula));
    ensure_out_dir(opt);
    if (wants(opt, "json"))
        write_file_atomic(out_path(opt, "intervals.json"),
                          interval_report_json(report, make_run_info(opt)).dump(2) + "\n");
    if (wants(opt, "csv"))
        write_file_atomic(out_path(opt, "intervals.csv"), interval_report_csv(report));
    print_interval_summary(report);
    return 0;
}

int cmd_region(const Options& opt) {
    const Pipeline p = run_fit(opt);
    const std::vector<MeasurePlane> planes = requested_planes(opt);
    const MeasureDraws draws = simulate_measures(p.fit, p.weights, p.formula, opt.draws, opt.seed);
    const MeasureSet point = point_measures(p.fit, p.weights, p.formula);
    const IntervalReport report = quantile_intervals(draws, opt.levels, point);

    std::vector<double> levels = opt.levels;
    std::sort(levels.begin(), levels.end());
    std::vector<RegionPolyline> log_regions;
    for (double level : levels)
        log_regions.push_back(
            ellipse_boundary(log_odds_ellipse(draws, level), kBoundaryPoints));

    ensure_out_dir(opt);
    std::vector<std::vector<RegionPolyline>> regions_by_plane;
    for (MeasurePlane plane : planes) {
        std::vector<RegionPolyline> regions;
        for (const auto& log_poly : log_regions) regions.push_back(map_region(log_poly, plane));
        if (wants(opt, "csv"))
            write_file_atomic(out_path(opt, "region_" + plane_file_token(plane) + ".csv"),
                              region_csv(regions));
        if (wants(opt, "svg")) {
            std::vector<Eigen::Vector2d> scatter;
            scatter.reserve(draws.rows.size());
            for (const auto& row : draws.rows) scatter.push_back(plane_coords(row, plane));
            write_file_atomic(out_path(opt, "figure_" + plane_file_token(plane) + ".svg"),
                              figure_svg(plane, scatter, regions, plane_coords(point, plane)));
        }
        regions_by_plane.push_back(std::move(regions));
    }
    if (wants(opt, "json")) {
        write_file_atomic(out_path(opt, "regions.json"),
                          regions_json(regions_by_plane, point, make_run_info(opt)).dump(2) +
                              "\n");
        write_file_atomic(out_path(opt, "intervals.json"),
                          interval_report_json(report, make_run_info(opt)).dump(2) + "\n");
    }
    if (wants(opt, "csv"))
        write_file_atomic(out_path(opt, "intervals.csv"), interval_report_csv(report));
    print_interval_summary(report);
    std::printf("wrote %zu plane(s) to %s\n", regions_by_plane.size(), opt.out_dir.c_str());
    return 0;
}

int cmd_bootstrap(const Options& opt) {
    const Pipeline p = run_fit(opt);
    const BootstrapDraws boot = bootstrap_measures(p.dataset, p.formula, opt.boot, opt.seed);
    MeasureDraws draws;
    draws.rows = boot.rows;
    draws.seed = boot.seed;
    draws.n_draws = static_cast<int>(boot.rows.size());
    const IntervalReport report =
        quantile_intervals(draws, opt.levels, point_measures(p.fit, p.weights, p.formula));
    ensure_out_dir(opt);
    RunInfo info = make_run_info(opt);
    info.n_draws = boot.n_boot;
    write_file_atomic(out_path(opt, "bootstrap.json"),
                      bootstrap_report_json(boot, report, info).dump(2) + "\n");
    std::printf("bootstrap: %d resamples, %d failures\n", boot.n_boot, boot.failures);
    print_interval_summary(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint (baseline, treatment effect) estimation from grouped binary data"};
    app.set_version_flag("--version", riskregion::kToolVersion);
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool with_sim) {
        cmd->add_option("--data", opt.data_path, "CSV data file (x1,...,xk,z,events,trials)")
            ->required();
        cmd->add_option("--formula", opt.formula_text,
                        "model formula, e.g. 'z + x1 + x2 + z:x2'")
            ->required();
        cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
        if (with_sim) {
            cmd->add_option("--draws", opt.draws, "number of simulated parameter draws")
                ->capture_default_str()
                ->check(CLI::Range(100, 100000000));
            cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
            cmd->add_option("--level", opt.levels, "confidence level (repeatable)")
                ->capture_default_str();
        }
    };

    CLI::App* fit = app.add_subcommand("fit", "fit the logistic model and report the estimates");
    add_common(fit, false);
    fit->add_option("--format", opt.formats, "output formats: json, csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* intervals =
        app.add_subcommand("intervals", "quantile confidence intervals of each measure");
    add_common(intervals, true);
    intervals->add_option("--format", opt.formats, "output formats: json, csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* region =
        app.add_subcommand("region", "confidence regions, intervals, and figures");
    add_common(region, true);
    region->add_option("--measure", opt.measures,
                       "measure plane: or, rd, rr, af, log-or (repeatable; default all)")
        ->check(CLI::IsMember({"or", "rd", "rr", "af", "log-or"}));
    region->add_option("--format", opt.formats, "output formats: json, csv, svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));

    CLI::App* boot = app.add_subcommand("bootstrap-oracle",
                                        "nonparametric bootstrap comparator (test harness)");
    boot->group("");  // hidden
    add_common(boot, false);
    boot->add_option("--boot", opt.boot, "number of bootstrap resamples")
        ->capture_default_str()
        ->check(CLI::Range(100, 10000000));
    boot->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    boot->add_option("--level", opt.levels, "confidence level (repeatable)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        validate_levels(opt);
        if (fit->parsed()) {
            if (opt.formats.empty()) opt.formats = {"json", "csv"};
            return cmd_fit(opt);
        }
        if (intervals->parsed()) {
            if (opt.formats.empty()) opt.formats = {"json", "csv"};
            return cmd_intervals(opt);
        }
        if (region->parsed()) {
            if (opt.formats.empty()) opt.formats = {"json", "csv", "svg"};
            return cmd_region(opt);
        }
        if (boot->parsed()) return cmd_bootstrap(opt);
    } catch (const riskregion::parse_error& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 2;
    } catch (const riskregion::formula_error& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 2;
    } catch (const riskregion::degenerate_region_error& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 4;
    } catch (const riskregion::fit_error& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 3;
    } catch (const riskregion::oracle_error& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 3;
    } catch (const riskregion::not_positive_definite_error& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << riskregion::kToolName << ": error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
