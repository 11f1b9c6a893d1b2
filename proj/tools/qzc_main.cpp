// qzc_main.cpp — command-line front end

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qzc/cli.hpp"

namespace {

void add_system_flags(CLI::App* cmd, qzc::RunConfig& cfg) {
    cmd->add_option("--R", cfg.R, "coupling-to-loss ratio g_total/kappa (kappa normalised to 1)");
    cmd->add_option("--kappa", cfg.kappa, "cavity decay rate (requires --g-total)");
    cmd->add_option("--g-total", cfg.g_total, "collective coupling (requires --kappa)");
    cmd->add_option("--r1", cfg.r1, "relative coupling of atom 1, in [0,1]")
        ->capture_default_str();
}

void add_init_flags(CLI::App* cmd, qzc::RunConfig& cfg) {
    cmd->add_option("--s", cfg.s, "initial population imbalance, in [-1,1]")
        ->capture_default_str();
    cmd->add_option("--phi", cfg.phi, "initial relative phase (radians)")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, qzc::RunConfig& cfg) {
    cmd->add_option("--output", [&cfg](const std::vector<std::string>& vals) {
            if (vals.empty()) return false;
            if (vals[0] == "csv")
                cfg.output = qzc::RunConfig::Format::csv;
            else if (vals[0] == "svg")
                cfg.output = qzc::RunConfig::Format::svg;
            else
                return false;
            return true;
        },
        "output format: csv or svg (default csv)");
    cmd->add_option("--out", cfg.out_path, "output path ('-' or omitted = stdout)");
    cmd->add_option("--workers", cfg.workers,
                    "worker threads for sweeps (default: QZC_WORKERS or 1)");
}

} // namespace

int main(int argc, char** argv) {
    qzc::RunConfig cfg;
    CLI::App app{"entanglement dynamics of two atoms in a lossy cavity"};
    app.require_subcommand(1);

    auto* traj = app.add_subcommand("trajectory", "concurrence and amplitudes over time");
    add_system_flags(traj, cfg);
    add_init_flags(traj, cfg);
    traj->add_option("--tau-max", cfg.tau_max, "time span in units of 1/kappa")
        ->capture_default_str();
    traj->add_option("--samples", cfg.samples, "number of samples (>= 2)")->capture_default_str();
    add_output_flags(traj, cfg);
    traj->callback([&] { cfg.mode = qzc::RunConfig::Mode::trajectory; });

    auto* stat = app.add_subcommand("stationary", "late-time concurrence over (r1, s)");
    add_init_flags(stat, cfg);
    std::string grid_shape = "101x101";
    stat->add_option("--grid", grid_shape, "grid as AxB: A points in r1, B points in s")
        ->capture_default_str();
    add_output_flags(stat, cfg);
    stat->callback([&] { cfg.mode = qzc::RunConfig::Mode::stationary; });

    auto* zeno = app.add_subcommand("zeno", "concurrence under repeated measurement");
    add_system_flags(zeno, cfg);
    add_init_flags(zeno, cfg);
    zeno->add_option("--kappa-T", cfg.kappa_T, "measurement spacing, dimensionless kappa*T")
        ->capture_default_str();
    zeno->add_option("--n-measurements", cfg.n_measurements, "number of measurement rounds")
        ->capture_default_str();
    add_output_flags(zeno, cfg);
    zeno->callback([&] { cfg.mode = qzc::RunConfig::Mode::zeno; });

    auto* figs = app.add_subcommand("figures", "emit data for a published figure panel");
    figs->add_option("--id", cfg.figure_id, "preset id (fig1a..fig4b)");
    add_output_flags(figs, cfg);
    figs->callback([&] { cfg.mode = qzc::RunConfig::Mode::figures; });

    auto* val = app.add_subcommand("validate", "run every documented invariant check");
    add_output_flags(val, cfg);
    val->callback([&] { cfg.mode = qzc::RunConfig::Mode::validate; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // help/version exit 0; any parse failure is exit 1
    }

    if (cfg.mode == qzc::RunConfig::Mode::stationary) {
        try {
            qzc::detail::parse_grid_shape(grid_shape, cfg.grid_r1, cfg.grid_s);
        } catch (const qzc::validation_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }

    return qzc::run(cfg, std::cout, std::cerr);
}
