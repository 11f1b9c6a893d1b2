// presets.hpp — canned parameter bundles for the published figure panels

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qzc/dynamics.hpp"
#include "qzc/emit.hpp"
#include "qzc/errors.hpp"
#include "qzc/model.hpp"
#include "qzc/sweep.hpp"
#include "qzc/zeno.hpp"

namespace qzc {

struct FigurePreset {
    enum class Kind { stationary, trajectories, zeno };

    std::string id;
    Kind kind = Kind::trajectories;

    // stationary: Cs over (r1, s) at fixed phi
    double phi = 0.0;
    int grid_r1 = 101, grid_s = 101;

    // trajectories: C(tau) for each r1 at fixed (R, s, phi)
    double R = 1.0;
    double s = 0.0;
    std::vector<double> r1_values;
    double tau_max = 10.0;
    int samples = 1001;

    // zeno: free curve plus one measured curve per kappa*T
    double r1 = M_SQRT1_2;
    std::vector<double> kappa_T_values;
};

inline const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = [] {
        std::vector<FigurePreset> v;
        const std::vector<double> r1_set{0.87, M_SQRT1_2, 0.0, 1.0};

        const auto stationary = [&](const char* id, double phi) {
            FigurePreset p;
            p.id = id;
            p.kind = FigurePreset::Kind::stationary;
            p.phi = phi;
            v.push_back(p);
        };
        const auto family = [&](const char* id, double R, double s, double phi, double tau_max,
                                int samples) {
            FigurePreset p;
            p.id = id;
            p.kind = FigurePreset::Kind::trajectories;
            p.R = R;
            p.s = s;
            p.phi = phi;
            p.r1_values = r1_set;
            p.tau_max = tau_max;
            p.samples = samples;
            v.push_back(p);
        };
        const auto zeno = [&](const char* id, double R, std::vector<double> kts, double tau_max) {
            FigurePreset p;
            p.id = id;
            p.kind = FigurePreset::Kind::zeno;
            p.R = R;
            p.s = 0.0;
            p.phi = 0.0;
            p.r1 = M_SQRT1_2;
            p.kappa_T_values = std::move(kts);
            p.tau_max = tau_max;
            p.samples = 1001;
            v.push_back(p);
        };

        stationary("fig1a", 0.0);
        stationary("fig1b", M_PI);
        family("fig2a", 0.1, 1.0, 0.0, 400.0, 801);
        family("fig2b", 0.1, 0.0, 0.0, 400.0, 801);
        family("fig2c", 0.1, 1.0, M_PI, 400.0, 801);
        family("fig2d", 0.1, 0.0, M_PI, 400.0, 801);
        family("fig3a", 10.0, 1.0, 0.0, 10.0, 2001);
        family("fig3b", 10.0, 0.0, 0.0, 10.0, 2001);
        family("fig3c", 10.0, 1.0, M_PI, 10.0, 2001);
        family("fig3d", 10.0, 0.0, M_PI, 10.0, 2001);
        zeno("fig4a", 10.0, {0.01, 0.005, 0.001}, 1.0);
        zeno("fig4b", 0.1, {5.0, 1.0, 0.1}, 100.0);
        return v;
    }();
    return presets;
}

inline const FigurePreset& find_figure_preset(const std::string& id) {
    for (const auto& p : figure_presets())
        if (p.id == id) return p;
    std::string known;
    for (const auto& p : figure_presets()) {
        if (!known.empty()) known += ", ";
        known += p.id;
    }
    throw validation_error("unknown figure id '" + id + "'; known ids: " + known);
}

inline std::string short_label(const char* prefix, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%.8g", prefix, v);
    return buf;
}

// Cs on an inclusive (r1, s) product grid at fixed phi; rows r1-major.
inline StationaryGrid render_stationary_grid(double phi, int n_r1, int n_s, int workers) {
    if (n_r1 < 2 || n_s < 2)
        throw validation_error("stationary grid needs at least 2 points per axis, got " +
                               std::to_string(n_r1) + "x" + std::to_string(n_s));
    StationaryGrid grid;
    grid.r1.resize(static_cast<std::size_t>(n_r1));
    grid.s.resize(static_cast<std::size_t>(n_s));
    for (int i = 0; i < n_r1; ++i)
        grid.r1[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n_r1 - 1);
    for (int j = 0; j < n_s; ++j)
        grid.s[static_cast<std::size_t>(j)] = -1.0 + 2.0 * static_cast<double>(j) / (n_s - 1);
    grid.cs.resize(grid.r1.size() * grid.s.size());

    parallel_for(grid.r1.size(), workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < grid.s.size(); ++j) {
            const auto st = initial_state(grid.s[j], phi, grid.r1[i]);
            grid.cs[i * grid.s.size() + j] = stationary_concurrence(st, grid.r1[i]);
        }
    });
    return grid;
}

inline std::vector<Series> render_figure_series(const FigurePreset& p, int workers) {
    std::vector<Series> out;
    if (p.kind == FigurePreset::Kind::stationary)
        throw validation_error("preset '" + p.id + "' is a grid; render it as csv");

    if (p.kind == FigurePreset::Kind::trajectories) {
        out.resize(p.r1_values.size());
        parallel_for(p.r1_values.size(), workers, [&](std::size_t k) {
            const double r1 = p.r1_values[k];
            const auto params = make_system_params_from_ratio(p.R, r1);
            const auto st = initial_state(p.s, p.phi, r1);
            const auto tr = trajectory(params, st, p.tau_max, p.samples);
            Series ser;
            ser.label = short_label("r1=", r1);
            ser.x = tr.times; // kappa = 1, so t is already tau
            ser.y = tr.concurrence;
            out[k] = std::move(ser);
        });
        return out;
    }

    // zeno panel: unmeasured trajectory plus one measured curve per kappa*T
    const auto params = make_system_params_from_ratio(p.R, p.r1);
    const auto st = initial_state(p.s, p.phi, p.r1);
    out.resize(1 + p.kappa_T_values.size());
    {
        const auto tr = trajectory(params, st, p.tau_max, p.samples);
        out[0].label = "free";
        out[0].x = tr.times;
        out[0].y = tr.concurrence;
    }
    const double c0 = concurrence_from_amplitudes(st.c01, st.c02);
    parallel_for(p.kappa_T_values.size(), workers, [&](std::size_t k) {
        const double T = p.kappa_T_values[k]; // kappa = 1
        Series ser;
        ser.label = short_label("kappaT=", T);
        const long rounds = static_cast<long>(std::floor(p.tau_max / T + 1e-9));
        ser.x.reserve(static_cast<std::size_t>(rounds) + 1);
        ser.y.reserve(static_cast<std::size_t>(rounds) + 1);
        ser.x.push_back(0.0);
        ser.y.push_back(c0);
        for (long n = 1; n <= rounds; ++n) {
            ser.x.push_back(T * static_cast<double>(n));
            ser.y.push_back(zeno_concurrence(st, params, ZenoSchedule{T, n}));
        }
        out[k + 1] = std::move(ser);
    });
    return out;
}

} // namespace qzc
