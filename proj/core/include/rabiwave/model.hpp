#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rabiwave/circulant.hpp"

namespace rabiwave {

/// Raised for any parameter/config contract violation. `field` names the
/// offending key when one is identifiable.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what),
          field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// All physical and numerical parameters of a run. ħ = 1 throughout; the
/// default unit system has g = 1 and a = 1, so rates are in units of g and
/// lengths in units of a.
struct SystemParams {
    int n_chains = 1;          // n
    int n_sites = 1;           // M
    double site_spacing = 1.0; // a
    double omega0 = 0.0;       // qubit transition frequency
    double omega = 0.0;        // field mode frequency
    double g = 1.0;            // qubit-field coupling
    double wavenumber = 0.0;   // k
    std::vector<double> xi1;   // excited-state couplings over chain distance d
    std::vector<double> xi2;   // ground-state couplings over chain distance d
    double lambda = 0.0;       // relaxation rate
    double mean_photons = 0.0; // <n> of the coherent initial state
    std::optional<int> l_max;  // photon truncation; empty = auto from the tail
    double sigma = 1.0;        // initial packet width
    double x0 = 0.0;           // initial packet center
    double dt = 1e-3;
    double t_end = 1.0;
    int sample_stride = 1;

    /// Continuum-mode quadrature overrides; empty = derived from k, sigma and
    /// the evaluation extent.
    std::optional<double> h_max;
    std::optional<double> h_step;

    /// Optional chain profile u_j of the initial state; empty = uniform
    /// 1/sqrt(n). Must have n_chains entries and unit norm when given.
    std::vector<std::complex<double>> chain_profile;

    /// l_max after auto-resolution (tail weight < 1e-8).
    int resolved_l_max() const;

    /// Throws ConfigError on any violated invariant (coupling symmetry,
    /// truncation tail, dt stability guard, positivity).
    void validate() const;
};

/// Coherent-state photon amplitudes c(l) = e^{-<n>/2} <n>^{l/2} / sqrt(l!),
/// l = 0..l_max, plus the Poisson weight left beyond the truncation.
struct CoherentAmplitudes {
    std::vector<double> c;
    double truncation_error = 0.0;
};

CoherentAmplitudes coherent_amplitudes(double mean_photons, int l_max);

/// Smallest l_max whose Poisson tail weight is below `tail_tolerance`.
int auto_l_max(double mean_photons, double tail_tolerance = 1e-8);

/// Circulant of coupling energies; coeffs[d] = xi[d]. Rejects xi that is not
/// symmetric under d <-> n-d (the evolution would be non-Hermitian).
Circulant build_coupling(const std::vector<double>& xi);

/// Full state of the lattice+field system. A(j,m,l) multiplies |a_mj, l>;
/// B(j,m,l) is stored at block index l but multiplies |b_mj, l+1>: the RWA
/// couples exactly those pairs, and block l never talks to block l'.
struct AmplitudeField {
    int n_chains = 0;
    int n_sites = 0;
    int l_max = 0;
    std::vector<std::complex<double>> a;
    std::vector<std::complex<double>> b;

    AmplitudeField() = default;
    AmplitudeField(int n_chains, int n_sites, int l_max);

    // block-major layout: m contiguous within a (l, j) row
    size_t idx(int j, int m, int l) const {
        return (static_cast<size_t>(l) * n_chains + j) * n_sites + m;
    }
    std::complex<double>& A(int j, int m, int l) { return a[idx(j, m, l)]; }
    std::complex<double>& B(int j, int m, int l) { return b[idx(j, m, l)]; }
    const std::complex<double>& A(int j, int m, int l) const { return a[idx(j, m, l)]; }
    const std::complex<double>& B(int j, int m, int l) const { return b[idx(j, m, l)]; }

    size_t size() const { return a.size(); }
    bool same_shape(const AmplitudeField& o) const {
        return n_chains == o.n_chains && n_sites == o.n_sites && l_max == o.l_max;
    }
};

/// Gaussian wave packet in the excited component, coherent photon weights,
/// B identically zero. Discrete amplitudes carry sqrt(a) so the lattice sum
/// reproduces the continuum norm. For n_sites == 1 the site factor is 1
/// (single-qubit scenarios). Rejects packets closer than 5 sigma to an edge.
AmplitudeField initial_state(const SystemParams& p);

}  // namespace rabiwave
