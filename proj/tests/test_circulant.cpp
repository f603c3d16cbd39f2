#include <doctest.h>

#include "dense_oracle.hpp"
#include "rabiwave/circulant.hpp"

using rabiwave::Circulant;
using oracle::cplx;

TEST_CASE("generator corner cases") {
    CHECK_THROWS(Circulant::generator(0));
    const Circulant g1 = Circulant::generator(1);
    CHECK(g1.coeff(0) == cplx(1.0));

    // dense form of generator(4): ones at (0,1),(1,2),(2,3),(3,0)
    const auto d = oracle::to_dense(Circulant::generator(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(d[r][c] == (c == (r + 1) % 4 ? cplx(1.0) : cplx(0.0)));
}

TEST_CASE("generator(3)^3 is the identity (dense oracle)") {
    const auto g = oracle::to_dense(Circulant::generator(3));
    const auto g3 = oracle::dense_mul(oracle::dense_mul(g, g), g);
    CHECK(oracle::dense_max_diff(g3, oracle::to_dense(Circulant::identity(3))) ==
          doctest::Approx(0.0).epsilon(1e-15));

    const Circulant g3c = Circulant::generator(3) * Circulant::generator(3) *
                          Circulant::generator(3);
    CHECK(max_abs_diff(g3c, Circulant::identity(3)) < 1e-15);
}

TEST_CASE("multiply matches the dense product and commutes") {
    std::mt19937 rng(7);
    const Circulant a = oracle::random_circulant(5, rng);
    const Circulant b = oracle::random_circulant(5, rng);

    CHECK(max_abs_diff(Circulant::identity(5) * a, a) < 1e-15);
    CHECK(max_abs_diff(a * b, b * a) < 1e-12);
    CHECK(oracle::dense_max_diff(oracle::to_dense(a * b),
                                 oracle::dense_mul(oracle::to_dense(a),
                                                   oracle::to_dense(b))) < 1e-12);
    CHECK(max_abs_diff(Circulant::generator(2) * Circulant::generator(2),
                       Circulant::identity(2)) < 1e-15);
    CHECK_THROWS(a * Circulant::identity(4));
}

TEST_CASE("ring axioms against the dense oracle, n = 1..8") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 8; ++n) {
        const Circulant a = oracle::random_circulant(n, rng);
        const Circulant b = oracle::random_circulant(n, rng);
        const Circulant c = oracle::random_circulant(n, rng);
        CHECK(max_abs_diff((a * b) * c, a * (b * c)) < 1e-10);
        CHECK(max_abs_diff(a * (b + c), a * b + a * c) < 1e-10);
        CHECK(max_abs_diff(a * b, b * a) < 1e-10);
    }
}

TEST_CASE("eigenvalues: identity, generator, symmetric coupling") {
    const auto ei = Circulant::identity(3).eigenvalues();
    for (const auto& e : ei) CHECK(std::abs(e - cplx(1.0)) < 1e-15);

    // generator(4) -> 1, i, -1, -i ordered by mode index
    const auto eg = Circulant::generator(4).eigenvalues();
    CHECK(std::abs(eg[0] - cplx(1, 0)) < 1e-14);
    CHECK(std::abs(eg[1] - cplx(0, 1)) < 1e-14);
    CHECK(std::abs(eg[2] - cplx(-1, 0)) < 1e-14);
    CHECK(std::abs(eg[3] - cplx(0, -1)) < 1e-14);

#ifdef RABIWAVE_HAVE_EIGEN
    CHECK(oracle::spectrum_match_error(eg, oracle::dense_eigenvalues(
                                               Circulant::generator(4))) < 1e-12);
#endif

    // nearest-neighbor symmetric coupling: xi0 + 2 xi1 cos(2 pi q / n), real
    const double xi0 = 0.3, xi1 = 0.7;
    const int n = 6;
    std::vector<cplx> coeffs(n, 0.0);
    coeffs[0] = xi0;
    coeffs[1] = xi1;
    coeffs[n - 1] = xi1;
    const Circulant cpl{coeffs};
    const auto ec = cpl.eigenvalues();
    for (int q = 0; q < n; ++q) {
        CHECK(std::abs(ec[q].imag()) < 1e-14);
        CHECK(ec[q].real() ==
              doctest::Approx(xi0 + 2 * xi1 * std::cos(2 * std::numbers::pi * q / n))
                  .epsilon(1e-12));
    }
#ifdef RABIWAVE_HAVE_EIGEN
    CHECK(oracle::spectrum_match_error(ec, oracle::dense_eigenvalues(cpl)) < 1e-10);
#endif
}

TEST_CASE("spectral homomorphism on random pairs") {
    std::mt19937 rng(23);
    for (int n = 1; n <= 8; ++n) {
        const Circulant a = oracle::random_circulant(n, rng);
        const Circulant b = oracle::random_circulant(n, rng);
        const auto ea = a.eigenvalues();
        const auto eb = b.eigenvalues();
        const auto eab = (a * b).eigenvalues();
        for (int q = 0; q < n; ++q)
            CHECK(std::abs(eab[q] - ea[q] * eb[q]) < 1e-10);
    }
}

TEST_CASE("projector algebra") {
    CHECK(Circulant::projectors(1).size() == 1);
    CHECK(max_abs_diff(Circulant::projectors(1)[0], Circulant::identity(1)) < 1e-15);

    for (int n : {3, 4, 7}) {
        const auto pi = Circulant::projectors(n);
        Circulant sum = Circulant::zero(n);
        for (const auto& p : pi) {
            sum += p;
            CHECK(max_abs_diff(p * p, p) < 1e-12);  // idempotent
        }
        CHECK(max_abs_diff(sum, Circulant::identity(n)) < 1e-12);  // complete
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                if (q != r)
                    CHECK(max_abs_diff(pi[q] * pi[r], Circulant::zero(n)) < 1e-12);
    }
}

TEST_CASE("projectors select single eigenvalues") {
    // z * pi_q = k_q * pi_q
    std::mt19937 rng(5);
    const int n = 5;
    const Circulant z = oracle::random_circulant(n, rng);
    const auto eig = z.eigenvalues();
    const auto pi = Circulant::projectors(n);
    for (int q = 0; q < n; ++q)
        CHECK(max_abs_diff(z * pi[q], eig[q] * pi[q]) < 1e-12);
}

TEST_CASE("synthesize inverts eigenvalues") {
    CHECK(max_abs_diff(Circulant::synthesize({1, 1, 1}), Circulant::identity(3)) <
          1e-15);
    CHECK(max_abs_diff(
              Circulant::synthesize({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
              Circulant::generator(4)) < 1e-14);

    std::mt19937 rng(42);
    const Circulant x = oracle::random_circulant(6, rng);
    CHECK(max_abs_diff(Circulant::synthesize(x.eigenvalues()), x) < 1e-12);
}
