#include "rabiwave/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rabiwave {

int auto_l_max(double mean_photons, double tail_tolerance) {
    if (mean_photons < 0.0)
        throw ConfigError("mean_photons", "must be >= 0");
    if (mean_photons == 0.0) return 1;
    // Poisson pmf recurrence; tail = 1 - cdf.
    double pmf = std::exp(-mean_photons);
    double cdf = pmf;
    int l = 0;
    while (1.0 - cdf >= tail_tolerance) {
        ++l;
        pmf *= mean_photons / l;
        cdf += pmf;
        if (l > 10000)
            throw ConfigError("mean_photons", "photon truncation did not converge");
    }
    return std::max(l, 1);
}

CoherentAmplitudes coherent_amplitudes(double mean_photons, int l_max) {
    if (mean_photons < 0.0)
        throw ConfigError("mean_photons", "must be >= 0");
    if (l_max < 1)
        throw ConfigError("l_max", "must be >= 1");
    CoherentAmplitudes out;
    out.c.resize(static_cast<size_t>(l_max) + 1);
    // c(l)^2 is Poisson(<n>); build via the stable pmf recurrence.
    double pmf = std::exp(-mean_photons);
    double sum = 0.0;
    for (int l = 0; l <= l_max; ++l) {
        out.c[static_cast<size_t>(l)] = std::sqrt(pmf);
        sum += pmf;
        pmf *= mean_photons / (l + 1);
    }
    out.truncation_error = std::max(0.0, 1.0 - sum);
    return out;
}

Circulant build_coupling(const std::vector<double>& xi) {
    const int n = static_cast<int>(xi.size());
    if (n < 1) throw ConfigError("xi", "needs at least one entry");
    for (int d = 1; d < n; ++d) {
        if (std::abs(xi[static_cast<size_t>(d)] - xi[static_cast<size_t>(n - d)]) > 1e-12)
            throw ConfigError("xi", "must be symmetric under d <-> n-d");
    }
    std::vector<std::complex<double>> coeffs(xi.begin(), xi.end());
    return Circulant(std::move(coeffs));
}

int SystemParams::resolved_l_max() const {
    if (l_max) return *l_max;
    return auto_l_max(mean_photons);
}

void SystemParams::validate() const {
    if (n_chains < 1) throw ConfigError("n_chains", "must be >= 1");
    if (n_sites < 1) throw ConfigError("n_sites", "must be >= 1");
    if (site_spacing <= 0.0) throw ConfigError("site_spacing", "must be > 0");
    if (g < 0.0) throw ConfigError("g", "must be >= 0");
    if (lambda < 0.0) throw ConfigError("lambda", "must be >= 0");
    if (mean_photons < 0.0) throw ConfigError("mean_photons", "must be >= 0");
    if (sigma <= 0.0) throw ConfigError("sigma", "must be > 0");
    if (dt <= 0.0) throw ConfigError("dt", "must be > 0");
    if (t_end <= 0.0) throw ConfigError("t_end", "must be > 0");
    if (sample_stride < 1) throw ConfigError("sample_stride", "must be >= 1");
    if (h_max && *h_max <= 0.0) throw ConfigError("h_max", "must be > 0");
    if (h_step && *h_step <= 0.0) throw ConfigError("h_step", "must be > 0");

    if (static_cast<int>(xi1.size()) != n_chains)
        throw ConfigError("xi1", "needs exactly n_chains entries");
    if (static_cast<int>(xi2.size()) != n_chains)
        throw ConfigError("xi2", "needs exactly n_chains entries");
    build_coupling(xi1);
    build_coupling(xi2);

    const int lm = resolved_l_max();
    if (lm < 1) throw ConfigError("l_max", "must be >= 1");
    if (l_max) {
        // user-supplied truncation still has to be reported when too small;
        // coherent_amplitudes carries the deficit, here we only sanity-check.
        if (coherent_amplitudes(mean_photons, lm).truncation_error > 1e-3)
            throw ConfigError("l_max", "truncates more than 1e-3 of the photon weight");
    }

    if (!chain_profile.empty()) {
        if (static_cast<int>(chain_profile.size()) != n_chains)
            throw ConfigError("chain_profile", "needs exactly n_chains entries");
        double norm = 0.0;
        for (const auto& u : chain_profile) norm += std::norm(u);
        if (std::abs(norm - 1.0) > 1e-8)
            throw ConfigError("chain_profile", "must have unit norm");
    }

    double max_xi = 0.0;
    for (double x : xi1) max_xi = std::max(max_xi, std::abs(x));
    for (double x : xi2) max_xi = std::max(max_xi, std::abs(x));
    const double rate = std::max({std::abs(omega0), std::abs(omega),
                                  g * std::sqrt(static_cast<double>(lm) + 1.0),
                                  4.0 * max_xi});
    if (dt * rate >= 0.1)
        throw ConfigError("dt", "stability guard violated: dt*max(omega0, omega, "
                                "g*sqrt(l_max+1), 4*max|xi|) must be < 0.1");
}

AmplitudeField::AmplitudeField(int n_chains_, int n_sites_, int l_max_)
    : n_chains(n_chains_), n_sites(n_sites_), l_max(l_max_) {
    const size_t total = static_cast<size_t>(l_max + 1) * n_chains * n_sites;
    a.assign(total, 0.0);
    b.assign(total, 0.0);
}

AmplitudeField initial_state(const SystemParams& p) {
    p.validate();
    const int n = p.n_chains;
    const int M = p.n_sites;
    const int lm = p.resolved_l_max();
    const double a = p.site_spacing;

    if (M > 1) {
        const double margin = 5.0 * p.sigma;
        if (p.x0 < margin || p.x0 > (M - 1) * a - margin)
            throw ConfigError("x0", "packet center must be >= 5*sigma away from "
                                    "both lattice edges");
    }

    const auto coh = coherent_amplitudes(p.mean_photons, lm);

    std::vector<std::complex<double>> u = p.chain_profile;
    if (u.empty())
        u.assign(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));

    // Site envelope: continuum-normalized Gaussian times sqrt(a), so the
    // lattice sum of |.|^2 equals the continuum integral.
    std::vector<double> env(static_cast<size_t>(M));
    if (M == 1) {
        env[0] = 1.0;
    } else {
        const double norm = std::sqrt(a) / std::pow(std::numbers::pi * p.sigma * p.sigma, 0.25);
        for (int m = 0; m < M; ++m) {
            const double x = m * a - p.x0;
            env[static_cast<size_t>(m)] = norm * std::exp(-x * x / (2.0 * p.sigma * p.sigma));
        }
    }

    AmplitudeField f(n, M, lm);
    for (int l = 0; l <= lm; ++l)
        for (int j = 0; j < n; ++j) {
            const std::complex<double> w = coh.c[static_cast<size_t>(l)] * u[static_cast<size_t>(j)];
            for (int m = 0; m < M; ++m)
                f.A(j, m, l) = w * env[static_cast<size_t>(m)];
        }
    return f;
}

}  // namespace rabiwave
