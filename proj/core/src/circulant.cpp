#include "rabiwave/circulant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rabiwave {

std::complex<double> unit_root(long long num, long long den) {
    long long r = num % den;
    if (r < 0) r += den;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

Circulant::Circulant(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("Circulant: order must be >= 1");
}

Circulant Circulant::zero(int n) {
    if (n < 1) throw std::invalid_argument("Circulant: order must be >= 1");
    return Circulant(std::vector<cplx>(static_cast<size_t>(n)));
}

Circulant Circulant::identity(int n) {
    Circulant c = zero(n);
    c.coeffs_[0] = 1.0;
    return c;
}

Circulant Circulant::generator(int n) {
    Circulant c = zero(n);
    c.coeffs_[static_cast<size_t>(1 % n)] = 1.0;
    return c;
}

std::vector<Circulant> Circulant::projectors(int n) {
    if (n < 1) throw std::invalid_argument("Circulant: order must be >= 1");
    std::vector<Circulant> out;
    out.reserve(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        std::vector<cplx> coeffs(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            coeffs[static_cast<size_t>(j)] =
                unit_root(-static_cast<long long>(q) * j, n) / static_cast<double>(n);
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

Circulant Circulant::synthesize(const std::vector<cplx>& eigvals) {
    const int n = static_cast<int>(eigvals.size());
    if (n < 1) throw std::invalid_argument("Circulant: order must be >= 1");
    std::vector<cplx> coeffs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (int q = 0; q < n; ++q)
            acc += eigvals[static_cast<size_t>(q)] *
                   unit_root(-static_cast<long long>(q) * j, n);
        coeffs[static_cast<size_t>(j)] = acc / static_cast<double>(n);
    }
    return Circulant(std::move(coeffs));
}

std::vector<Circulant::cplx> Circulant::eigenvalues() const {
    const int n = order();
    std::vector<cplx> eig(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += coeffs_[static_cast<size_t>(j)] *
                   unit_root(static_cast<long long>(q) * j, n);
        eig[static_cast<size_t>(q)] = acc;
    }
    return eig;
}

Circulant& Circulant::operator+=(const Circulant& rhs) {
    if (order() != rhs.order())
        throw std::invalid_argument("Circulant: order mismatch");
    for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

Circulant& Circulant::operator-=(const Circulant& rhs) {
    if (order() != rhs.order())
        throw std::invalid_argument("Circulant: order mismatch");
    for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

Circulant operator+(Circulant lhs, const Circulant& rhs) { return lhs += rhs; }
Circulant operator-(Circulant lhs, const Circulant& rhs) { return lhs -= rhs; }

Circulant operator*(const Circulant& lhs, const Circulant& rhs) {
    const int n = lhs.order();
    if (n != rhs.order())
        throw std::invalid_argument("Circulant: order mismatch");
    std::vector<Circulant::cplx> out(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Circulant::cplx acc = 0.0;
        for (int r = 0; r < n; ++r) {
            int d = j - r;
            if (d < 0) d += n;
            acc += lhs.coeffs_[static_cast<size_t>(r)] *
                   rhs.coeffs_[static_cast<size_t>(d)];
        }
        out[static_cast<size_t>(j)] = acc;
    }
    return Circulant(std::move(out));
}

Circulant operator*(Circulant::cplx scale, const Circulant& rhs) {
    std::vector<Circulant::cplx> out = rhs.coeffs_;
    for (auto& c : out) c *= scale;
    return Circulant(std::move(out));
}

double max_abs_diff(const Circulant& a, const Circulant& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("Circulant: order mismatch");
    double m = 0.0;
    for (int j = 0; j < a.order(); ++j)
        m = std::max(m, std::abs(a.coeff(j) - b.coeff(j)));
    return m;
}

}  // namespace rabiwave
