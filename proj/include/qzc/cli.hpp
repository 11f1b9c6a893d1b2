// cli.hpp — run-config plumbing shared by the command-line tool and tests
//
// The CLI is dimensionless-first: give --R and everything is in units of
// kappa (tau = kappa t). Absolute rates are available through --kappa and
// --g-total, which conflict with --R.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include "qzc/dynamics.hpp"
#include "qzc/emit.hpp"
#include "qzc/errors.hpp"
#include "qzc/model.hpp"
#include "qzc/presets.hpp"
#include "qzc/sweep.hpp"
#include "qzc/validate.hpp"
#include "qzc/zeno.hpp"

namespace qzc {

struct RunConfig {
    enum class Mode { trajectory, stationary, zeno, figures, validate };
    enum class Format { csv, svg };

    Mode mode = Mode::trajectory;

    std::optional<double> R, kappa, g_total;
    double r1 = M_SQRT1_2;
    double s = 0.0;
    double phi = 0.0;

    double tau_max = 10.0;
    int samples = 501;

    double kappa_T = 0.01;
    int n_measurements = 100;

    int grid_r1 = 101, grid_s = 101;

    std::string figure_id;
    Format output = Format::csv;
    std::string out_path; // empty or "-" = stdout
    std::optional<int> workers;
};

namespace detail {

inline SystemParams resolve_params(const RunConfig& cfg) {
    if (cfg.R && (cfg.kappa || cfg.g_total))
        throw validation_error("--R conflicts with --kappa/--g-total; give one or the other");
    if (cfg.R) return make_system_params_from_ratio(*cfg.R, cfg.r1);
    if (cfg.kappa && cfg.g_total) {
        if (*cfg.kappa == 0.0)
            throw validation_error("kappa must be > 0 here; the lossless limit is only "
                                   "meaningful for direct survival-amplitude evaluation");
        return make_system_params(*cfg.kappa, *cfg.g_total, cfg.r1);
    }
    throw validation_error("system parameters missing: give --R, or both --kappa and --g-total");
}

inline int parse_grid_shape(const std::string& text, int& n_r1, int& n_s) {
    const auto x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= text.size())
        throw validation_error("--grid expects AxB (e.g. 101x101), got '" + text + "'");
    try {
        n_r1 = std::stoi(text.substr(0, x));
        n_s = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        throw validation_error("--grid expects integer AxB, got '" + text + "'");
    }
    return 0;
}

} // namespace detail

// Executes one run. Output goes to cfg.out_path, or to `out` when the path
// is empty or "-". Returns the process exit code: 0 success, 1 invalid
// input, 2 numerical failure.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        std::ostream* os = &out;
        if (!cfg.out_path.empty() && cfg.out_path != "-") {
            file.open(cfg.out_path, std::ios::binary);
            if (!file)
                throw validation_error("cannot open output file '" + cfg.out_path + "'");
            os = &file;
        }
        const int workers = resolve_workers(cfg.workers);

        switch (cfg.mode) {
        case RunConfig::Mode::trajectory: {
            const auto p = detail::resolve_params(cfg);
            const auto st = initial_state(cfg.s, cfg.phi, cfg.r1);
            if (!(cfg.tau_max > 0.0))
                throw validation_error("--tau-max must be > 0, got " + std::to_string(cfg.tau_max));
            const auto tr = trajectory(p, st, cfg.tau_max / p.kappa, cfg.samples);
            if (cfg.output == RunConfig::Format::csv) {
                write_trajectory_csv(*os, tr, p.kappa);
            } else {
                Series ser;
                ser.label = "C";
                ser.x.resize(tr.times.size());
                for (std::size_t i = 0; i < tr.times.size(); ++i) ser.x[i] = p.kappa * tr.times[i];
                ser.y = tr.concurrence;
                write_series_svg(*os, {ser});
            }
            break;
        }
        case RunConfig::Mode::stationary: {
            if (cfg.output == RunConfig::Format::svg)
                throw validation_error("stationary grids are csv-only; svg applies to line plots");
            const auto grid = render_stationary_grid(cfg.phi, cfg.grid_r1, cfg.grid_s, workers);
            write_stationary_csv(*os, grid);
            break;
        }
        case RunConfig::Mode::zeno: {
            const auto p = detail::resolve_params(cfg);
            const auto st = initial_state(cfg.s, cfg.phi, cfg.r1);
            if (!(cfg.kappa_T > 0.0))
                throw validation_error("--kappa-T must be > 0, got " + std::to_string(cfg.kappa_T));
            if (cfg.n_measurements < 1)
                throw validation_error("--n-measurements must be >= 1, got " +
                                       std::to_string(cfg.n_measurements));
            const double T = cfg.kappa_T / p.kappa;
            const double lz = zeno_rate(p, T);
            std::vector<ZenoRow> rows(static_cast<std::size_t>(cfg.n_measurements) + 1);
            rows[0] = ZenoRow{0.0, concurrence_from_amplitudes(st.c01, st.c02),
                              std::norm(st.beta_plus), lz};
            parallel_for(static_cast<std::size_t>(cfg.n_measurements), workers, [&](std::size_t i) {
                const ZenoSchedule sched{T, static_cast<long>(i) + 1};
                rows[i + 1] = ZenoRow{p.kappa * sched.total_time(),
                                      zeno_concurrence(st, p, sched),
                                      zeno_survival(st, p, sched), lz};
            });
            if (cfg.output == RunConfig::Format::csv) {
                write_zeno_csv(*os, rows);
            } else {
                Series ser;
                ser.label = "C";
                for (const auto& r : rows) {
                    ser.x.push_back(r.tau);
                    ser.y.push_back(r.concurrence);
                }
                write_series_svg(*os, {ser});
            }
            break;
        }
        case RunConfig::Mode::figures: {
            if (cfg.figure_id.empty()) {
                std::string known;
                for (const auto& p : figure_presets()) {
                    if (!known.empty()) known += ", ";
                    known += p.id;
                }
                throw validation_error("--id required; known ids: " + known);
            }
            const auto& preset = find_figure_preset(cfg.figure_id);
            if (preset.kind == FigurePreset::Kind::stationary) {
                if (cfg.output == RunConfig::Format::svg)
                    throw validation_error("preset '" + preset.id +
                                           "' is a grid and is emitted as csv only");
                write_stationary_csv(
                    *os, render_stationary_grid(preset.phi, preset.grid_r1, preset.grid_s, workers));
            } else {
                const auto series = render_figure_series(preset, workers);
                if (cfg.output == RunConfig::Format::csv)
                    write_series_csv(*os, series);
                else
                    write_series_svg(*os, series);
            }
            break;
        }
        case RunConfig::Mode::validate: {
            const auto checks = run_validation_checks();
            bool all = true;
            for (const auto& c : checks) {
                all = all && c.passed;
                (*os) << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.detail.empty()) (*os) << "  (" << c.detail << ")";
                (*os) << '\n';
            }
            (*os) << (all ? "all checks passed" : "some checks FAILED") << " ("
                  << checks.size() << " total)\n";
            if (!all) return 2;
            break;
        }
        }
        os->flush();
        return 0;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace qzc
