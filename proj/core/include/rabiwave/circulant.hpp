#pragma once

#include <complex>
#include <vector>

namespace rabiwave {

/// Element of the commutative ring C ⊕ C ⊕ ... ⊕ C (n copies), stored as the
/// generating row of the n×n circulant matrix it represents: coeffs()[j] is
/// the coefficient of the j-th power of the cyclic-shift generator. The dense
/// matrix never materializes here; row r of it is row 0 shifted right by r.
class Circulant {
public:
    using cplx = std::complex<double>;

    explicit Circulant(std::vector<cplx> coeffs);

    static Circulant zero(int n);
    static Circulant identity(int n);

    /// Cyclic-shift generator: ones on the first superdiagonal and in the
    /// lower-left corner. generator(1) is the 1×1 identity.
    static Circulant generator(int n);

    /// The n spectral projectors π_q, q = 0..n−1: idempotent, mutually
    /// annihilating, summing to the identity.
    static std::vector<Circulant> projectors(int n);

    /// Inverse of eigenvalues(): builds the unique Circulant with the given
    /// spectrum (ordered by mode index q).
    static Circulant synthesize(const std::vector<cplx>& eigvals);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int j) const { return coeffs_[static_cast<size_t>(j)]; }

    /// k_q = Σ_j coeffs[j]·exp(+2πi·q·j/n), ordered by q ascending.
    /// No 1/n factor; spectral projections apply it explicitly.
    std::vector<cplx> eigenvalues() const;

    Circulant& operator+=(const Circulant& rhs);
    Circulant& operator-=(const Circulant& rhs);

    friend Circulant operator+(Circulant lhs, const Circulant& rhs);
    friend Circulant operator-(Circulant lhs, const Circulant& rhs);
    /// Ring product = cyclic convolution of coefficient rows. Commutative.
    friend Circulant operator*(const Circulant& lhs, const Circulant& rhs);
    friend Circulant operator*(cplx scale, const Circulant& rhs);

private:
    std::vector<cplx> coeffs_;
};

/// Max elementwise |difference| of the coefficient rows.
double max_abs_diff(const Circulant& a, const Circulant& b);

/// exp(2πi·num/den) evaluated with the angle reduced exactly, so roots of
/// unity are as accurate as the libm sin/cos.
std::complex<double> unit_root(long long num, long long den);

}  // namespace rabiwave
