#include "rabiwave/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rabiwave {

const char* kFieldDumpHeader = "t,j,m,l,re_a,im_a,re_b,im_b";

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_time_series_csv(std::ostream& os, const TimeSeries& series) {
    os << "t,value\n";
    for (size_t i = 0; i < series.times.size(); ++i)
        os << format_number(series.times[i]) << ','
           << format_number(series.values[i]) << '\n';
}

TimeSeries read_time_series_csv(std::istream& is) {
    TimeSeries out;
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,", 0) != 0)
        throw std::runtime_error("time series CSV: missing t,value header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("time series CSV: malformed row: " + line);
        out.times.push_back(std::stod(line.substr(0, comma)));
        out.values.push_back(std::stod(line.substr(comma + 1)));
    }
    return out;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum) {
    os << "omega,amplitude\n";
    for (size_t i = 0; i < spectrum.frequencies.size(); ++i)
        os << format_number(spectrum.frequencies[i]) << ','
           << format_number(spectrum.amplitudes[i]) << '\n';
}

void write_field_rows(std::ostream& os, double t, const AmplitudeField& f) {
    const std::string ts = format_number(t);
    for (int j = 0; j < f.n_chains; ++j)
        for (int m = 0; m < f.n_sites; ++m)
            for (int l = 0; l <= f.l_max; ++l) {
                const auto& a = f.A(j, m, l);
                const auto& b = f.B(j, m, l);
                os << ts << ',' << j << ',' << m << ',' << l << ','
                   << format_number(a.real()) << ',' << format_number(a.imag()) << ','
                   << format_number(b.real()) << ',' << format_number(b.imag()) << '\n';
            }
}

void write_field_rows(std::ostream& os, double t, const ContinuumField& f) {
    const std::string ts = format_number(t);
    const double scale =
        f.x.size() > 1 ? std::sqrt(f.x[1] - f.x[0]) : 1.0;
    for (int j = 0; j < f.n_chains; ++j)
        for (size_t m = 0; m < f.x.size(); ++m)
            for (int l = 0; l <= f.l_max; ++l) {
                const auto a = f.A(j, static_cast<int>(m), l) * scale;
                const auto b = f.B(j, static_cast<int>(m), l) * scale;
                os << ts << ',' << j << ',' << m << ',' << l << ','
                   << format_number(a.real()) << ',' << format_number(a.imag()) << ','
                   << format_number(b.real()) << ',' << format_number(b.imag()) << '\n';
            }
}

}  // namespace rabiwave
