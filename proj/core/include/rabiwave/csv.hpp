#pragma once

#include <iosfwd>
#include <string>

#include "rabiwave/dynamics_continuum.hpp"
#include "rabiwave/observables.hpp"

namespace rabiwave {

/// Fixed 12-significant-digit formatting used for every CSV body so that
/// identical runs produce byte-identical files.
std::string format_number(double v);

/// Header `t,value`.
void write_time_series_csv(std::ostream& os, const TimeSeries& series);
TimeSeries read_time_series_csv(std::istream& is);

/// Header `omega,amplitude`.
void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum);

/// Field dump, one row per (t, j, m, l) in that nesting order:
/// `t,j,m,l,re_a,im_a,re_b,im_b`. write_field_rows appends the rows for one
/// sampled time; the caller owns the header.
extern const char* kFieldDumpHeader;
void write_field_rows(std::ostream& os, double t, const AmplitudeField& f);
/// Continuum fields dump on the same schema (amplitudes scaled by sqrt(dx)
/// to match the discrete normalization; m is the grid index).
void write_field_rows(std::ostream& os, double t, const ContinuumField& f);

}  // namespace rabiwave
