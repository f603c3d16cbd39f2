#include "rabiwave/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rabiwave/config.hpp"
#include "rabiwave/csv.hpp"
#include "rabiwave/dynamics_continuum.hpp"
#include "rabiwave/dynamics_discrete.hpp"

namespace rabiwave {

namespace {

namespace fs = std::filesystem;

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

const char* mode_name(RunMode m) {
    switch (m) {
        case RunMode::Discrete: return "discrete";
        case RunMode::Continuum: return "continuum";
        case RunMode::Compare: return "compare";
    }
    return "?";
}

const char* kFig1Config = R"(# Collapse/revival of the integral inversion (coherent light, <n> = 4)
# Detuning omega0 - omega = 2*(xi1 - xi2) + xi2*(a*k)^2 = 7.75 g
n_chains = 1
n_sites = 2048
site_spacing = 1
g = 1
omega = 0
omega0 = 7.75
wavenumber = 0.5
xi1 = 10
xi2 = 7
lambda = 0.05
mean_photons = 4
l_max = auto
sigma = 20
x0 = 1024
dt = 0.001
t_end = 40
sample_stride = 10
)";

const char* kTwoLevelConfig = R"(# Single-site vacuum Rabi check: W(t) = cos(2 g t)
n_chains = 1
n_sites = 1
site_spacing = 1
g = 1
omega = 1
omega0 = 1
wavenumber = 0
xi1 = 0
xi2 = 0
lambda = 0
mean_photons = 0
l_max = auto
sigma = 1
x0 = 0
dt = 0.001
t_end = 20
sample_stride = 10
)";

const char* kResonantConfig = R"(# Resonant packet (omega = omega0) for the discrete/continuum cross-check
n_chains = 1
n_sites = 512
site_spacing = 1
g = 1
omega = 10
omega0 = 10
wavenumber = 0.2
xi1 = 10
xi2 = 7
lambda = 0.05
mean_photons = 4
l_max = auto
sigma = 20
x0 = 256
dt = 0.001
t_end = 10
sample_stride = 100
)";

struct SeriesPair {
    TimeSeries inversion;
    TimeSeries norm;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << content;
}

}  // namespace

const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> table = {
        {"fig1",
         "collapse and revival of the integral inversion (xi1=10g, xi2=7g, "
         "ka=0.5, sigma=20a, lambda=0.05g, <n>=4, detuned by 7.75g)",
         kFig1Config, false},
        {"fig2", "fig1 followed by the Fourier spectrum of the inversion",
         kFig1Config, true},
        {"twolevel", "single site, vacuum field: W(t) = cos(2gt)",
         kTwoLevelConfig, false},
        {"resonant",
         "resonant (omega = omega0) packet for discrete/continuum comparison",
         kResonantConfig, false},
    };
    return table;
}

const Scenario* find_scenario(const std::string& name) {
    for (const auto& s : scenarios())
        if (s.name == name) return &s;
    return nullptr;
}

std::string load_config_text(const std::string& source, bool& was_scenario) {
    std::error_code ec;
    if (fs::exists(source, ec)) {
        std::ifstream is(source, std::ios::binary);
        if (!is) throw ConfigError("", "cannot read config file: " + source);
        std::ostringstream ss;
        ss << is.rdbuf();
        was_scenario = false;
        return ss.str();
    }
    if (const Scenario* s = find_scenario(source)) {
        was_scenario = true;
        return s->config_text;
    }
    throw ConfigError("", "no such config file or bundled scenario: " + source);
}

RunResult run(const std::string& config_source, RunMode mode,
              const std::string& out_dir, const RunFlags& flags) {
    RunResult result;
    try {
        bool was_scenario = false;
        const std::string config_text = load_config_text(config_source, was_scenario);
        SystemParams p = parse_config(config_text);
        if (flags.dt_override) p.dt = *flags.dt_override;
        if (flags.t_end_override) p.t_end = *flags.t_end_override;
        p.validate();

        RunFlags effective = flags;
        if (was_scenario && find_scenario(config_source)->with_spectrum)
            effective.with_spectrum = true;

        fs::create_directories(out_dir);
        const fs::path dir(out_dir);
        const bool normalized = !effective.unnormalized_inversion;

        auto emit_series = [&](const SeriesPair& sp, const std::string& suffix) {
            std::ostringstream inv, nrm;
            write_time_series_csv(inv, sp.inversion);
            write_time_series_csv(nrm, sp.norm);
            write_file(dir / ("inversion" + suffix + ".csv"), inv.str());
            write_file(dir / ("norm" + suffix + ".csv"), nrm.str());
            result.outputs.push_back("inversion" + suffix + ".csv");
            result.outputs.push_back("norm" + suffix + ".csv");
        };

        auto run_discrete = [&](const std::string& suffix) {
            SeriesPair sp;
            sp.inversion.label = "inversion";
            sp.norm.label = "norm";
            std::ofstream dump;
            if (effective.dump_field) {
                dump.open(dir / ("field_discrete" + std::string(".csv")),
                          std::ios::binary);
                dump << kFieldDumpHeader << '\n';
                result.outputs.push_back("field_discrete.csv");
            }
            integrate(initial_state(p), p,
                      [&](double t, const AmplitudeField& f) {
                          sp.inversion.times.push_back(t);
                          sp.inversion.values.push_back(inversion(f, normalized));
                          sp.norm.times.push_back(t);
                          sp.norm.values.push_back(total_norm(f));
                          if (dump.is_open()) write_field_rows(dump, t, f);
                      });
            emit_series(sp, suffix);
            return sp;
        };

        auto run_continuum = [&](const std::string& suffix) {
            SeriesPair sp;
            sp.inversion.label = "inversion";
            sp.norm.label = "norm";
            std::vector<double> x_grid(static_cast<size_t>(p.n_sites));
            for (int m = 0; m < p.n_sites; ++m)
                x_grid[static_cast<size_t>(m)] = m * p.site_spacing;
            std::ofstream dump;
            if (effective.dump_field) {
                dump.open(dir / ("field_continuum" + std::string(".csv")),
                          std::ios::binary);
                dump << kFieldDumpHeader << '\n';
                result.outputs.push_back("field_continuum.csv");
            }
            const double t_step = p.dt * p.sample_stride;
            const long samples = static_cast<long>(std::floor(p.t_end / t_step + 1e-9));
            for (long i = 0; i <= samples; ++i) {
                const double t = i * t_step;
                const ContinuumField f = evaluate_field(x_grid, t, p);
                sp.inversion.times.push_back(t);
                sp.inversion.values.push_back(inversion(f, normalized));
                sp.norm.times.push_back(t);
                sp.norm.values.push_back(total_norm(f));
                if (dump.is_open()) write_field_rows(dump, t, f);
            }
            emit_series(sp, suffix);
            return sp;
        };

        TimeSeries spectrum_input;
        if (mode == RunMode::Discrete) {
            spectrum_input = run_discrete("").inversion;
        } else if (mode == RunMode::Continuum) {
            spectrum_input = run_continuum("").inversion;
        } else {
            const SeriesPair d = run_discrete("_discrete");
            const SeriesPair c = run_continuum("_continuum");
            spectrum_input = d.inversion;
            double sum_sq = 0.0, ref_sq = 0.0;
            const size_t count =
                std::min(d.inversion.values.size(), c.inversion.values.size());
            for (size_t i = 0; i < count; ++i) {
                const double diff = d.inversion.values[i] - c.inversion.values[i];
                sum_sq += diff * diff;
                ref_sq += d.inversion.values[i] * d.inversion.values[i];
            }
            const double rms = std::sqrt(sum_sq / static_cast<double>(count));
            const double rel = ref_sq > 0.0 ? rms / std::sqrt(ref_sq / count) : 0.0;
            std::ostringstream report;
            report << "samples," << count << '\n'
                   << "rms_difference," << format_number(rms) << '\n'
                   << "relative_rms," << format_number(rel) << '\n';
            write_file(dir / "compare_report.csv", report.str());
            result.outputs.push_back("compare_report.csv");
        }

        if (effective.with_spectrum) {
            const Spectrum spec = spectrum(spectrum_input, effective.window);
            std::ostringstream os;
            write_spectrum_csv(os, spec);
            write_file(dir / "spectrum.csv", os.str());
            result.outputs.push_back("spectrum.csv");
        }

        nlohmann::ordered_json manifest;
        manifest["tool_version"] = kToolVersion;
        manifest["mode"] = mode_name(mode);
        manifest["config_source"] = config_source;
        manifest["config_checksum"] = hex64(fnv1a64(config_text));
        manifest["resolved_config"] = serialize_config(p);
        manifest["flags"] = {
            {"dump_field", effective.dump_field},
            {"unnormalized_inversion", effective.unnormalized_inversion},
            {"with_spectrum", effective.with_spectrum},
            {"window",
             effective.window == SpectrumWindow::Hann ? "hann" : "rectangular"},
        };
        manifest["outputs"] = result.outputs;
        write_file(dir / "manifest.json", manifest.dump(2) + "\n");
        result.outputs.push_back("manifest.json");
        result.message = "ok";
    } catch (const ConfigError& e) {
        result.exit_code = kExitConfigError;
        result.message = e.what();
    } catch (const EdgeContactError& e) {
        result.exit_code = kExitNumericalAbort;
        result.message = e.what();
    } catch (const std::exception& e) {
        result.exit_code = kExitNumericalAbort;
        result.message = e.what();
    }
    return result;
}

}  // namespace rabiwave
