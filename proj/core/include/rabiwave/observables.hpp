#pragma once

#include <string>
#include <vector>

#include "rabiwave/dynamics_continuum.hpp"
#include "rabiwave/model.hpp"

namespace rabiwave {

struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string label;
};

struct Spectrum {
    std::vector<double> frequencies;  // angular, nonnegative ascending
    std::vector<double> amplitudes;   // DFT magnitudes
};

enum class SpectrumWindow { Rectangular, Hann };

/// Integral inversion W = Σ(|A|² − |B|²) / Σ(|A|² + |B|²) over sites, chains
/// and photon blocks; in [−1, 1]. Normalizing by the instantaneous norm keeps
/// relaxation from masquerading as inversion decay. Throws on a zero-norm
/// state. Set normalized = false for the raw population difference.
double inversion(const AmplitudeField& state, bool normalized = true);
double inversion(const ContinuumField& field, bool normalized = true);

double total_norm(const AmplitudeField& state);
/// Continuum norm: grid sum of the densities times dx (uniform grid).
double total_norm(const ContinuumField& field);

/// One-sided magnitude spectrum of the mean-removed series. Frequencies are
/// angular, 2π·bin/(N·Δt) for bins 0..N/2. Requires uniform sampling and at
/// least 16 samples.
Spectrum spectrum(const TimeSeries& series,
                  SpectrumWindow window = SpectrumWindow::Rectangular);

/// SSH soliton shape |φ(n)|² = (1/ξ)·sech²[(n−n0)a/ξ − v t]·cos(nπ/2),
/// evaluated per site over [site_begin, site_end). a = 1 site units; the
/// cos(nπ/2) factor zeroes odd sites exactly.
std::vector<double> soliton_profile(int n0, double xi, double v, double t,
                                    int site_begin, int site_end);

/// Coherence length ξ = ħ·v_F/Δ with ħ = 1 units.
double coherence_length(double gap, double fermi_velocity);

}  // namespace rabiwave
