#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rabiwave/observables.hpp"

namespace rabiwave {

inline constexpr const char* kToolVersion = "0.1.0";

// exit codes shared by the library runner and the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalAbort = 3;

enum class RunMode { Discrete, Continuum, Compare };

struct RunFlags {
    bool dump_field = false;
    bool unnormalized_inversion = false;
    bool with_spectrum = false;
    SpectrumWindow window = SpectrumWindow::Rectangular;
    std::optional<double> dt_override;
    std::optional<double> t_end_override;
};

struct RunResult {
    int exit_code = kExitOk;
    std::string message;
    std::vector<std::string> outputs;  // files written, relative to out_dir
};

/// Bundled parameter sets. `fig1` is the collapse/revival scenario
/// (ξ1 = 10g, ξ2 = 7g, Δ = 2(ξ1−ξ2)+ξ2a²k², ka = 0.5, σ = 20a, λ = 0.05g,
/// coherent light with <n> = 4); `fig2` is the same run piped through the
/// spectrum transform; `twolevel` is the single-site Rabi check.
struct Scenario {
    std::string name;
    std::string description;
    std::string config_text;
    bool with_spectrum = false;
};

const std::vector<Scenario>& scenarios();
const Scenario* find_scenario(const std::string& name);

/// Loads `source` as a config file path, or as a bundled scenario name when
/// no such file exists. Returns the raw config text.
std::string load_config_text(const std::string& source, bool& was_scenario);

/// Full pipeline behind `rabiwave run`: parse + validate, simulate in the
/// requested mode, write inversion/norm CSVs, optional field dump and
/// spectrum, a compare report in Compare mode, and manifest.json. Never
/// throws; failures come back as exit_code + message.
RunResult run(const std::string& config_source, RunMode mode,
              const std::string& out_dir, const RunFlags& flags = {});

}  // namespace rabiwave
