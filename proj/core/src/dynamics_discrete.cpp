#include "rabiwave/dynamics_discrete.hpp"

#include <cmath>
#include <string>

namespace rabiwave {

namespace {

using cplx = std::complex<double>;

inline cplx cmul(cplx x, cplx y) {
    // branch-free complex multiply (keeps gcc from emitting __muldc3)
    return {x.real() * y.real() - x.imag() * y.imag(),
            x.real() * y.imag() + x.imag() * y.real()};
}

// e^{ikma} per site; shared by every block and time step
std::vector<cplx> site_phases(const SystemParams& p) {
    std::vector<cplx> ph(static_cast<size_t>(p.n_sites));
    for (int m = 0; m < p.n_sites; ++m) {
        const double arg = p.wavenumber * m * p.site_spacing;
        ph[static_cast<size_t>(m)] = {std::cos(arg), std::sin(arg)};
    }
    return ph;
}

// d/dt of one (l, j) row's local part: phase rotation, decay, field coupling
void local_row(const cplx* __restrict src, const cplx* __restrict other,
               const cplx* __restrict ph, cplx diag, cplx w, bool conj_phase,
               int M, cplx* __restrict out) {
    for (int m = 0; m < M; ++m) {
        cplx wp = cmul(w, ph[m]);
        if (conj_phase) wp = {-wp.real(), wp.imag()};  // -conj(w*ph)
        out[m] = cmul(diag, src[m]) + cmul(wp, other[m]);
    }
}

// out[m] += c * (src[m-1] + src[m+1]) with open ends
void hop_row(const cplx* __restrict src, cplx c, int M, cplx* __restrict out) {
    if (M == 1) return;
    out[0] += cmul(c, src[1]);
    for (int m = 1; m < M - 1; ++m) out[m] += cmul(c, src[m - 1] + src[m + 1]);
    out[M - 1] += cmul(c, src[M - 2]);
}

struct RhsEngine {
    const SystemParams& p;
    std::vector<cplx> ph;

    explicit RhsEngine(const SystemParams& params)
        : p(params), ph(site_phases(params)) {}

    void operator()(const AmplitudeField& s, double t, AmplitudeField& d) const {
        const int n = p.n_chains;
        const int M = p.n_sites;
        const int lm = s.l_max;
        const cplx ca(-p.lambda / 2.0, -p.omega0 / 2.0);
        const cplx cb(-p.lambda / 2.0, +p.omega0 / 2.0);
        const cplx field_phase{std::cos(p.omega * t), -std::sin(p.omega * t)};

        for (int l = 0; l <= lm; ++l) {
            // w = -i g sqrt(l+1) e^{-i omega t}
            const double gs = p.g * std::sqrt(static_cast<double>(l) + 1.0);
            const cplx w = cmul(cplx(0.0, -gs), field_phase);
            for (int j = 0; j < n; ++j) {
                const size_t row = s.idx(j, 0, l);
                local_row(&s.a[row], &s.b[row], ph.data(), ca, w, false, M, &d.a[row]);
                local_row(&s.b[row], &s.a[row], ph.data(), cb, w, true, M, &d.b[row]);
                for (int r = 0; r < n; ++r) {
                    int dist = r - j;
                    if (dist < 0) dist += n;
                    const size_t src = s.idx(r, 0, l);
                    const double x1 = p.xi1[static_cast<size_t>(dist)];
                    const double x2 = p.xi2[static_cast<size_t>(dist)];
                    if (x1 != 0.0) hop_row(&s.a[src], cplx(0.0, x1), M, &d.a[row]);
                    if (x2 != 0.0) hop_row(&s.b[src], cplx(0.0, x2), M, &d.b[row]);
                }
            }
        }
    }
};

void axpy(std::vector<cplx>& y, double alpha, const std::vector<cplx>& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void set_sum(std::vector<cplx>& y, const std::vector<cplx>& base, double alpha,
             const std::vector<cplx>& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] = base[i] + alpha * x[i];
}

bool edge_contact(const AmplitudeField& f) {
    const int M = f.n_sites;
    if (M <= 4) return false;
    double global = 0.0, edge = 0.0;
    for (int l = 0; l <= f.l_max; ++l)
        for (int j = 0; j < f.n_chains; ++j) {
            const size_t row = f.idx(j, 0, l);
            for (int m = 0; m < M; ++m) {
                const double va = std::abs(f.a[row + static_cast<size_t>(m)]);
                const double vb = std::abs(f.b[row + static_cast<size_t>(m)]);
                const double v = std::max(va, vb);
                global = std::max(global, v);
                if (m < 2 || m >= M - 2) edge = std::max(edge, v);
            }
        }
    return edge > 1e-4 * global;
}

}  // namespace

EdgeContactError::EdgeContactError(double t)
    : std::runtime_error("wave packet reached the open lattice boundary at t = " +
                         std::to_string(t) + "; results past this point are invalid"),
      time_(t) {}

void rhs(const AmplitudeField& state, double t, const SystemParams& p,
         AmplitudeField& deriv) {
    if (!state.same_shape(deriv))
        throw std::invalid_argument("rhs: state/deriv shape mismatch");
    RhsEngine engine(p);
    engine(state, t, deriv);
}

IntegrationReport integrate(AmplitudeField state, const SystemParams& p,
                            const SampleObserver& on_sample,
                            EdgeContactPolicy policy) {
    p.validate();
    RhsEngine engine(p);
    IntegrationReport report;

    AmplitudeField k1 = state, k2 = state, k3 = state, k4 = state, tmp = state;
    const double dt = p.dt;
    const long steps = static_cast<long>(std::ceil(p.t_end / dt - 1e-9));

    auto sample = [&](long step) {
        const double t = step * dt;
        if (!report.edge_contact && edge_contact(state)) {
            if (policy == EdgeContactPolicy::Abort) throw EdgeContactError(t);
            report.edge_contact = true;
            report.edge_contact_time = t;
        }
        if (on_sample) on_sample(t, state);
    };

    sample(0);
    for (long step = 0; step < steps; ++step) {
        const double t = step * dt;
        engine(state, t, k1);
        set_sum(tmp.a, state.a, dt / 2.0, k1.a);
        set_sum(tmp.b, state.b, dt / 2.0, k1.b);
        engine(tmp, t + dt / 2.0, k2);
        set_sum(tmp.a, state.a, dt / 2.0, k2.a);
        set_sum(tmp.b, state.b, dt / 2.0, k2.b);
        engine(tmp, t + dt / 2.0, k3);
        set_sum(tmp.a, state.a, dt, k3.a);
        set_sum(tmp.b, state.b, dt, k3.b);
        engine(tmp, t + dt, k4);

        axpy(k1.a, 2.0, k2.a);
        axpy(k1.b, 2.0, k2.b);
        axpy(k1.a, 2.0, k3.a);
        axpy(k1.b, 2.0, k3.b);
        axpy(k1.a, 1.0, k4.a);
        axpy(k1.b, 1.0, k4.b);
        axpy(state.a, dt / 6.0, k1.a);
        axpy(state.b, dt / 6.0, k1.b);

        if ((step + 1) % p.sample_stride == 0 || step + 1 == steps) sample(step + 1);
    }
    return report;
}

Trajectory integrate(const AmplitudeField& initial, const SystemParams& p,
                     EdgeContactPolicy policy) {
    Trajectory traj;
    traj.params = p;
    integrate(initial, p,
              [&](double t, const AmplitudeField& f) {
                  traj.times.push_back(t);
                  traj.snapshots.push_back(f);
              },
              policy);
    return traj;
}

}  // namespace rabiwave
