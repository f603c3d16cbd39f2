#include "rabiwave/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rabiwave {

namespace {

std::pair<double, double> population_split(const std::vector<std::complex<double>>& a,
                                           const std::vector<std::complex<double>>& b) {
    double pa = 0.0, pb = 0.0;
    for (const auto& v : a) pa += std::norm(v);
    for (const auto& v : b) pb += std::norm(v);
    return {pa, pb};
}

double inversion_from(double pa, double pb, bool normalized) {
    if (normalized) {
        const double total = pa + pb;
        if (total <= 0.0)
            throw std::invalid_argument("inversion: zero-norm state");
        return (pa - pb) / total;
    }
    return pa - pb;
}

}  // namespace

double inversion(const AmplitudeField& state, bool normalized) {
    const auto [pa, pb] = population_split(state.a, state.b);
    return inversion_from(pa, pb, normalized);
}

double inversion(const ContinuumField& field, bool normalized) {
    const auto [pa, pb] = population_split(field.a, field.b);
    return inversion_from(pa, pb, normalized);
}

double total_norm(const AmplitudeField& state) {
    const auto [pa, pb] = population_split(state.a, state.b);
    return pa + pb;
}

double total_norm(const ContinuumField& field) {
    if (field.x.size() < 2) throw std::invalid_argument("total_norm: need a grid");
    const double dx = field.x[1] - field.x[0];
    const auto [pa, pb] = population_split(field.a, field.b);
    return (pa + pb) * dx;
}

Spectrum spectrum(const TimeSeries& series, SpectrumWindow window) {
    const size_t N = series.values.size();
    if (N < 16)
        throw std::invalid_argument("spectrum: need at least 16 samples");
    if (series.times.size() != N)
        throw std::invalid_argument("spectrum: times/values length mismatch");
    const double dt = series.times[1] - series.times[0];
    if (dt <= 0.0) throw std::invalid_argument("spectrum: times must increase");
    for (size_t i = 1; i < N; ++i) {
        const double step = series.times[i] - series.times[i - 1];
        if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw std::invalid_argument("spectrum: non-uniform sampling");
    }

    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(N);

    std::vector<double> x(N);
    for (size_t i = 0; i < N; ++i) {
        double w = 1.0;
        if (window == SpectrumWindow::Hann)
            w = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                      static_cast<double>(N - 1)));
        x[i] = (series.values[i] - mean) * w;
    }

    // direct DFT with exact twiddle reduction (k*i mod N); N is small here
    std::vector<double> cos_tab(N), sin_tab(N);
    for (size_t r = 0; r < N; ++r) {
        const double ang = -2.0 * std::numbers::pi * static_cast<double>(r) /
                           static_cast<double>(N);
        cos_tab[r] = std::cos(ang);
        sin_tab[r] = std::sin(ang);
    }

    const size_t half = N / 2;
    Spectrum out;
    out.frequencies.resize(half + 1);
    out.amplitudes.resize(half + 1);
    for (size_t k = 0; k <= half; ++k) {
        double re = 0.0, im = 0.0;
        for (size_t i = 0; i < N; ++i) {
            const size_t r = (k * i) % N;
            re += x[i] * cos_tab[r];
            im += x[i] * sin_tab[r];
        }
        out.frequencies[k] = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             (static_cast<double>(N) * dt);
        out.amplitudes[k] = std::hypot(re, im);
    }
    return out;
}

std::vector<double> soliton_profile(int n0, double xi, double v, double t,
                                    int site_begin, int site_end) {
    if (xi <= 0.0) throw std::invalid_argument("soliton_profile: xi must be > 0");
    if (site_end < site_begin)
        throw std::invalid_argument("soliton_profile: empty site range");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(site_end - site_begin));
    for (int n = site_begin; n < site_end; ++n) {
        const double u = static_cast<double>(n - n0) / xi - v * t;
        const double sech = 1.0 / std::cosh(u);
        // cos(nπ/2) taken exactly: 1, 0, -1, 0 cycle
        double cosf = 0.0;
        const int r = ((n % 4) + 4) % 4;
        if (r == 0) cosf = 1.0;
        else if (r == 2) cosf = -1.0;
        out.push_back(sech * sech / xi * cosf);
    }
    return out;
}

double coherence_length(double gap, double fermi_velocity) {
    if (gap <= 0.0) throw std::invalid_argument("coherence_length: gap must be > 0");
    if (fermi_velocity <= 0.0)
        throw std::invalid_argument("coherence_length: fermi velocity must be > 0");
    return fermi_velocity / gap;
}

}  // namespace rabiwave
