#include "rabiwave/dynamics_continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rabiwave {

namespace {

using cplx = std::complex<double>;

cplx chain_mode_weight(int q, const SystemParams& p) {
    const int n = p.n_chains;
    std::vector<cplx> u = p.chain_profile;
    if (u.empty())
        u.assign(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j)
        acc += u[static_cast<size_t>(j)] * unit_root(static_cast<long long>(q) * j, n);
    return acc / static_cast<double>(n);
}

}  // namespace

ModeDispersion mode_dispersion(int q, const SystemParams& p) {
    if (q < 0 || q >= p.n_chains)
        throw ConfigError("q", "mode index out of range");
    const auto e1 = build_coupling(p.xi1).eigenvalues();
    const auto e2 = build_coupling(p.xi2).eigenvalues();
    ModeDispersion d;
    d.q = q;
    d.kq_xi1 = e1[static_cast<size_t>(q)].real();
    d.kq_xi2 = e2[static_cast<size_t>(q)].real();
    d.k = p.wavenumber;
    d.a = p.site_spacing;
    return d;
}

Mat2 propagate_mode(const ModeDispersion& d, int l, double h, double t, double g) {
    const double th1 = d.theta1(h);
    const double th2 = d.theta2(h);
    const double G = g * std::sqrt(static_cast<double>(l) + 1.0);
    const double mean = 0.5 * (th1 + th2);
    const double half_delta = 0.5 * (th1 - th2);
    const double rabi = std::sqrt(half_delta * half_delta + G * G);

    const cplx common{std::cos(mean * t), std::sin(mean * t)};  // e^{it·mean}
    const double c = std::cos(rabi * t);
    // sin(Ωt)/Ω with the Ω -> 0 limit
    const double s_over =
        rabi * t == 0.0 || rabi < 1e-300 ? t : std::sin(rabi * t) / rabi;

    Mat2 u;
    u.aa = common * cplx(c, s_over * half_delta);
    u.bb = common * cplx(c, -s_over * half_delta);
    u.ab = common * cplx(0.0, -s_over * G);
    u.ba = u.ab;
    return u;
}

HGrid default_h_grid(const SystemParams& p, double x_extent) {
    const double H = p.h_max ? *p.h_max : p.wavenumber / 2.0 + 8.0 / p.sigma;
    double dh = p.h_step
                    ? *p.h_step
                    : std::min(std::numbers::pi / (4.0 * std::max(x_extent, 1.0)),
                               1.0 / (8.0 * p.sigma));
    HGrid grid;
    grid.count = static_cast<int>(std::ceil(2.0 * H / dh)) + 1;
    grid.dh = 2.0 * H / (grid.count - 1);
    grid.h_min = -H;

    // truncation diagnostic: spectral Gaussian weight left outside [-H, H]
    const double support_edge = std::abs(-p.wavenumber / 2.0) + 8.0 / p.sigma;
    if (H < support_edge - 1e-12)
        throw ConfigError("h_max", "h grid truncates the packet's spectral support");
    return grid;
}

SpectralAmplitude initial_transform(int q, int l, const SystemParams& p) {
    const auto coh = coherent_amplitudes(p.mean_photons, p.resolved_l_max());
    SpectralAmplitude th;
    const double norm = std::pow(std::numbers::pi * p.sigma * p.sigma, -0.25) *
                        p.sigma / std::sqrt(2.0 * std::numbers::pi);
    const double arg = -p.wavenumber * p.x0 / 2.0;
    th.weight = chain_mode_weight(q, p) * coh.c[static_cast<size_t>(l)] * norm *
                cplx{std::cos(arg), std::sin(arg)};
    th.center = -p.wavenumber / 2.0;
    th.inv_width_sq = p.sigma * p.sigma;
    return th;
}

ContinuumField evaluate_field(const std::vector<double>& x_grid, double t,
                              const SystemParams& p) {
    if (std::abs(p.omega - p.omega0) > 1e-12)
        throw ConfigError("omega",
                          "analytic continuum mode requires exact resonance omega == omega0");
    const int n = p.n_chains;
    const int lm = p.resolved_l_max();
    const int nx = static_cast<int>(x_grid.size());

    double x_extent = 0.0;
    for (double x : x_grid) x_extent = std::max(x_extent, std::abs(x - p.x0));
    const HGrid grid = default_h_grid(p, x_extent);

    ContinuumField f;
    f.n_chains = n;
    f.l_max = lm;
    f.x = x_grid;
    f.a.assign(static_cast<size_t>(lm + 1) * n * nx, 0.0);
    f.b.assign(f.a.size(), 0.0);

    std::vector<cplx> phi_a(static_cast<size_t>(grid.count));
    std::vector<cplx> phi_b(static_cast<size_t>(grid.count));

    for (int q = 0; q < n; ++q) {
        const ModeDispersion disp = mode_dispersion(q, p);
        for (int l = 0; l <= lm; ++l) {
            const SpectralAmplitude theta = initial_transform(q, l, p);
            if (std::abs(theta.weight) < 1e-300) continue;

            // Phi-frame mode amplitudes on the h grid (initial B is zero)
            for (int i = 0; i < grid.count; ++i) {
                const double h = grid.at(i);
                const cplx th = theta.eval(h) * grid.dh;
                const Mat2 u = propagate_mode(disp, l, h, t, p.g);
                phi_a[static_cast<size_t>(i)] = u.aa * th;
                phi_b[static_cast<size_t>(i)] = u.ba * th;
            }

            // Fourier synthesis per x; inverse chain-DFT accumulates chains
            for (int ix = 0; ix < nx; ++ix) {
                const double xr = x_grid[static_cast<size_t>(ix)] - p.x0;
                cplx ph{std::cos(grid.h_min * xr), std::sin(grid.h_min * xr)};
                const cplx step{std::cos(grid.dh * xr), std::sin(grid.dh * xr)};
                cplx acc_a = 0.0, acc_b = 0.0;
                for (int i = 0; i < grid.count; ++i) {
                    acc_a += phi_a[static_cast<size_t>(i)] * ph;
                    acc_b += phi_b[static_cast<size_t>(i)] * ph;
                    ph *= step;
                }
                for (int j = 0; j < n; ++j) {
                    const cplx wj = unit_root(-static_cast<long long>(q) * j, n);
                    f.A(j, ix, l) += wj * acc_a;
                    f.B(j, ix, l) += wj * acc_b;
                }
            }
        }
    }

    // Phi -> Psi: decay envelope and the inverse sigma_z phase of the frame
    const double decay = std::exp(-p.lambda * t / 2.0);
    for (int ix = 0; ix < nx; ++ix) {
        const double arg = -(p.omega0 * t - p.wavenumber * x_grid[static_cast<size_t>(ix)]) / 2.0;
        const cplx pa = decay * cplx{std::cos(arg), std::sin(arg)};
        const cplx pb = decay * cplx{std::cos(arg), -std::sin(arg)};
        for (int l = 0; l <= lm; ++l)
            for (int j = 0; j < n; ++j) {
                f.A(j, ix, l) *= pa;
                f.B(j, ix, l) *= pb;
            }
    }
    return f;
}

}  // namespace rabiwave
