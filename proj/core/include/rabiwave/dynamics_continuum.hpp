#pragma once

#include <complex>
#include <vector>

#include "rabiwave/model.hpp"

namespace rabiwave {

/// Quadratic dispersions of chain eigenmode q:
///   θ1_q(h) = k_q([ξ1])·(2 − a²(h + k/2)²)
///   θ2_q(h) = k_q([ξ2])·(2 − a²(h − k/2)²)
/// Real for symmetric couplings.
struct ModeDispersion {
    int q = 0;
    double kq_xi1 = 0.0;  // eigenvalue of the excited-state coupling circulant
    double kq_xi2 = 0.0;  // eigenvalue of the ground-state coupling circulant
    double k = 0.0;
    double a = 1.0;

    double theta1(double h) const {
        const double u = a * (h + k / 2.0);
        return kq_xi1 * (2.0 - u * u);
    }
    double theta2(double h) const {
        const double u = a * (h - k / 2.0);
        return kq_xi2 * (2.0 - u * u);
    }
};

ModeDispersion mode_dispersion(int q, const SystemParams& p);

struct Mat2 {
    std::complex<double> aa, ab, ba, bb;
};

/// Closed-form exp{it·H} for the 2×2 mode Hamiltonian
///   H = [[θ1_q(h), −g√(l+1)], [−g√(l+1), θ2_q(h)]]
/// (a generalized Rabi rotation: effective detuning θ1−θ2, coupling g√(l+1)).
/// Valid only at exact resonance ω = ω0, where the coupling block is static.
Mat2 propagate_mode(const ModeDispersion& d, int l, double h, double t, double g);

/// Uniform quadrature grid in h covering the packet's spectral support.
struct HGrid {
    double h_min = 0.0;
    double dh = 0.0;
    int count = 0;

    double at(int i) const { return h_min + i * dh; }
};

/// H = k/2 + 8/sigma, spacing <= min(pi/(4 x_extent), 1/(8 sigma)), where
/// x_extent is the largest |x − x0| the field will be evaluated at.
HGrid default_h_grid(const SystemParams& p, double x_extent);

/// Lab-frame amplitudes Ψ on a spatial grid, continuum-normalized
/// (∫|Ψ|²dx rather than the lattice sum). Same (l, j) block structure as
/// AmplitudeField.
struct ContinuumField {
    int n_chains = 0;
    int l_max = 0;
    std::vector<double> x;
    std::vector<std::complex<double>> a;
    std::vector<std::complex<double>> b;

    size_t idx(int j, int ix, int l) const {
        return (static_cast<size_t>(l) * n_chains + j) * x.size() + ix;
    }
    std::complex<double>& A(int j, int ix, int l) { return a[idx(j, ix, l)]; }
    std::complex<double>& B(int j, int ix, int l) { return b[idx(j, ix, l)]; }
    const std::complex<double>& A(int j, int ix, int l) const { return a[idx(j, ix, l)]; }
    const std::complex<double>& B(int j, int ix, int l) const { return b[idx(j, ix, l)]; }
};

/// Spectral amplitude Θ^l_q(h, 0) of the analytic Gaussian initial packet:
/// an h-Gaussian of width 1/σ centered at −k/2 (relative to the packet
/// center x0), weighted by c(l) and the chain-mode projection û_q
/// (chain DFT with 1/n normalization).
struct SpectralAmplitude {
    std::complex<double> weight;  // û_q · c(l) · (πσ²)^{-1/4} σ/√(2π) · e^{-ik x0/2}
    double center = 0.0;          // −k/2
    double inv_width_sq = 0.0;    // σ²

    std::complex<double> eval(double h) const {
        const double u = h - center;
        return weight * std::exp(-0.5 * inv_width_sq * u * u);
    }
};

SpectralAmplitude initial_transform(int q, int l, const SystemParams& p);

/// Evaluates the analytic continuum solution at time t on x_grid:
/// h-quadrature of Θ(h)·exp{itH_q(h,l)}·e^{ih(x−x0)} per (q, l), inverse
/// chain-DFT over q, then the map back from the Φ frame (decay envelope
/// e^{−λt/2} and the σ_z phase). Requires ω = ω0.
ContinuumField evaluate_field(const std::vector<double>& x_grid, double t,
                              const SystemParams& p);

}  // namespace rabiwave
