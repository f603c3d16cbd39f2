#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "rabiwave/model.hpp"

namespace rabiwave {

/// The wave packet touched the open lattice ends; amplitudes there exceeded
/// 1e-4 of the field maximum and the run is physically invalid.
class EdgeContactError : public std::runtime_error {
public:
    explicit EdgeContactError(double t);
    double time() const { return time_; }

private:
    double time_;
};

enum class EdgeContactPolicy { Abort, Warn };

struct IntegrationReport {
    bool edge_contact = false;
    double edge_contact_time = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<AmplitudeField> snapshots;
    SystemParams params;
};

/// Right-hand side of the coupled amplitude equations on the finite lattice.
///
///   dA[j][m][l]/dt = -(i/2)ω0 A - (λ/2) A
///                    + i Σ_r ξ1_{dist(j,r)} (A[r][m-1][l] + A[r][m+1][l])
///                    - i g √(l+1) B[j][m][l] e^{+i(k m a - ω t)}
///   dB[j][m][l]/dt = +(i/2)ω0 B - (λ/2) B
///                    + i Σ_r ξ2_{dist(j,r)} (B[r][m-1][l] + B[r][m+1][l])
///                    - i g √(l+1) A[j][m][l] e^{-i(k m a - ω t)}
///
/// dist(j,r) is the cyclic chain distance; sites beyond the lattice ends
/// contribute zero. The ω0 split is the σ_z form (-ω0/2 on A, +ω0/2 on B) and
/// relaxation is a uniform -λ/2 envelope on both components, so with λ = 0
/// every photon block evolves unitarily on its own.
void rhs(const AmplitudeField& state, double t, const SystemParams& p,
         AmplitudeField& deriv);

using SampleObserver = std::function<void(double t, const AmplitudeField&)>;

/// Fixed-step classical RK4 from t = 0 to t_end. The observer fires at t = 0
/// and then every sample_stride steps; deterministic for a given build and
/// parameter set. Edge contact is checked at each sample: Abort throws
/// EdgeContactError, Warn records it in the report and continues.
IntegrationReport integrate(AmplitudeField state, const SystemParams& p,
                            const SampleObserver& on_sample,
                            EdgeContactPolicy policy = EdgeContactPolicy::Abort);

/// Convenience wrapper storing every sampled snapshot. Only for small runs;
/// memory is snapshots * field size.
Trajectory integrate(const AmplitudeField& initial, const SystemParams& p,
                     EdgeContactPolicy policy = EdgeContactPolicy::Abort);

}  // namespace rabiwave
