// rabiwave: quantum dynamics of multichain qubit lattices coupled to a
// single quantized field mode.
//
// Subcommands:
//   run       integrate a config or bundled scenario and write CSV artifacts
//   spectrum  file-to-file Fourier transform of a time-series CSV
//   validate  parse and check a config, reporting field-precise errors
//   scenarios list the bundled scenario files

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rabiwave/config.hpp"
#include "rabiwave/csv.hpp"
#include "rabiwave/runner.hpp"

namespace rw = rabiwave;

int main(int argc, char** argv) {
    CLI::App app{"Rabi wave-packet dynamics of multichain qubit lattices"};
    app.require_subcommand(1);

    // run
    std::string run_config, run_mode = "discrete", run_out = ".";
    rw::RunFlags flags;
    std::string window_name = "rectangular";
    double dt_override = 0.0, t_end_override = 0.0;
    auto* run_cmd = app.add_subcommand("run", "integrate and write CSV outputs");
    run_cmd->add_option("config", run_config,
                        "config file path or bundled scenario name")->required();
    run_cmd->add_option("--mode", run_mode, "discrete | continuum | compare")
        ->check(CLI::IsMember({"discrete", "continuum", "compare"}));
    run_cmd->add_option("--out", run_out, "output directory");
    run_cmd->add_flag("--dump-field", flags.dump_field,
                      "also dump the full amplitude field (large)");
    run_cmd->add_flag("--unnormalized-inversion", flags.unnormalized_inversion,
                      "report the raw population difference");
    run_cmd->add_flag("--spectrum", flags.with_spectrum,
                      "also write the spectrum of the inversion series");
    run_cmd->add_option("--window", window_name, "rectangular | hann")
        ->check(CLI::IsMember({"rectangular", "hann"}));
    auto* dt_opt = run_cmd->add_option("--dt", dt_override, "override time step");
    auto* te_opt = run_cmd->add_option("--t-end", t_end_override, "override end time");

    // spectrum
    std::string spec_in, spec_out, spec_window = "rectangular";
    auto* spec_cmd =
        app.add_subcommand("spectrum", "Fourier-transform a t,value CSV");
    spec_cmd->add_option("input", spec_in, "time-series CSV")->required();
    spec_cmd->add_option("output", spec_out, "spectrum CSV")->required();
    spec_cmd->add_option("--window", spec_window, "rectangular | hann")
        ->check(CLI::IsMember({"rectangular", "hann"}));

    // validate
    std::string val_config;
    auto* val_cmd = app.add_subcommand("validate", "lint a config file");
    val_cmd->add_option("config", val_config,
                        "config file path or bundled scenario name")->required();

    auto* list_cmd = app.add_subcommand("scenarios", "list bundled scenarios");

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) {
        if (*dt_opt) flags.dt_override = dt_override;
        if (*te_opt) flags.t_end_override = t_end_override;
        flags.window = window_name == "hann" ? rw::SpectrumWindow::Hann
                                             : rw::SpectrumWindow::Rectangular;
        rw::RunMode mode = rw::RunMode::Discrete;
        if (run_mode == "continuum") mode = rw::RunMode::Continuum;
        else if (run_mode == "compare") mode = rw::RunMode::Compare;
        const rw::RunResult res = rw::run(run_config, mode, run_out, flags);
        if (res.exit_code != rw::kExitOk)
            std::cerr << "error: " << res.message << '\n';
        else
            for (const auto& f : res.outputs) std::cout << run_out << '/' << f << '\n';
        return res.exit_code;
    }

    if (spec_cmd->parsed()) {
        try {
            std::ifstream is(spec_in, std::ios::binary);
            if (!is) throw std::runtime_error("cannot read " + spec_in);
            const rw::TimeSeries ts = rw::read_time_series_csv(is);
            const rw::Spectrum sp = rw::spectrum(
                ts, spec_window == "hann" ? rw::SpectrumWindow::Hann
                                          : rw::SpectrumWindow::Rectangular);
            std::ofstream os(spec_out, std::ios::binary);
            if (!os) throw std::runtime_error("cannot write " + spec_out);
            rw::write_spectrum_csv(os, sp);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return rw::kExitConfigError;
        }
        return rw::kExitOk;
    }

    if (val_cmd->parsed()) {
        try {
            bool was_scenario = false;
            const std::string text = rw::load_config_text(val_config, was_scenario);
            rw::parse_config(text);
            std::cout << "ok\n";
        } catch (const rw::ConfigError& e) {
            std::cerr << "invalid config: " << e.what() << '\n';
            return rw::kExitConfigError;
        }
        return rw::kExitOk;
    }

    if (list_cmd->parsed()) {
        for (const auto& s : rw::scenarios())
            std::cout << s.name << "\t" << s.description << '\n';
        return rw::kExitOk;
    }
    return rw::kExitOk;
}
