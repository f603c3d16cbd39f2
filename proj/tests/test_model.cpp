#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dense_oracle.hpp"
#include "rabiwave/model.hpp"

using namespace rabiwave;

namespace {

SystemParams packet_params() {
    SystemParams p;
    p.n_chains = 1;
    p.n_sites = 1024;
    p.xi1 = {0.0};
    p.xi2 = {0.0};
    p.mean_photons = 4.0;
    p.sigma = 20.0;
    p.x0 = 512.0;
    p.dt = 1e-3;
    p.t_end = 1.0;
    return p;
}

}  // namespace

TEST_CASE("build_coupling: scalar, ring of three, pair") {
    const double xi = 0.37;

    const Circulant c1 = build_coupling({xi});
    CHECK(c1.coeff(0) == std::complex<double>(xi));

    // n=3, xi=[0, xi, xi] -> eigenvalues [2xi, -xi, -xi]
    const auto e3 = build_coupling({0.0, xi, xi}).eigenvalues();
    CHECK(e3[0].real() == doctest::Approx(2 * xi).epsilon(1e-12));
    CHECK(e3[1].real() == doctest::Approx(-xi).epsilon(1e-12));
    CHECK(e3[2].real() == doctest::Approx(-xi).epsilon(1e-12));

    // n=2, xi=[0, xi] -> eigenvalues [xi, -xi]
    const auto e2 = build_coupling({0.0, xi}).eigenvalues();
    CHECK(e2[0].real() == doctest::Approx(xi).epsilon(1e-12));
    CHECK(e2[1].real() == doctest::Approx(-xi).epsilon(1e-12));

#ifdef RABIWAVE_HAVE_EIGEN
    CHECK(oracle::spectrum_match_error(
              e3, oracle::dense_eigenvalues(build_coupling({0.0, xi, xi}))) < 1e-12);
#endif

    CHECK_THROWS_AS(build_coupling({0.0, 1.0, 2.0}), ConfigError);
}

TEST_CASE("build_coupling eigenvalues are real for symmetric xi") {
    for (int n : {2, 5, 8}) {
        std::vector<double> xi(static_cast<size_t>(n));
        std::mt19937 rng(static_cast<unsigned>(n));
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (int d = 0; d <= n / 2; ++d) {
            xi[static_cast<size_t>(d)] = dist(rng);
            xi[static_cast<size_t>((n - d) % n)] = xi[static_cast<size_t>(d)];
        }
        for (const auto& e : build_coupling(xi).eigenvalues())
            CHECK(std::abs(e.imag()) < 1e-12);
    }
}

TEST_CASE("coherent amplitudes") {
    const auto vac = coherent_amplitudes(0.0, 4);
    CHECK(vac.c[0] == 1.0);
    for (int l = 1; l <= 4; ++l) CHECK(vac.c[l] == 0.0);
    CHECK(vac.truncation_error == 0.0);

    // c(4)^2 for <n>=4 is the Poisson pmf 4^4 e^-4 / 4!
    const auto coh = coherent_amplitudes(4.0, 30);
    const double expected = std::pow(4.0, 4) * std::exp(-4.0) / 24.0;
    CHECK(coh.c[4] * coh.c[4] == doctest::Approx(expected).epsilon(1e-12));

    double sum = 0.0;
    for (double c : coh.c) sum += c * c;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    // short truncation reports its deficit
    const auto trunc = coherent_amplitudes(4.0, 4);
    double partial = 0.0;
    for (double c : trunc.c) partial += c * c;
    CHECK(trunc.truncation_error == doctest::Approx(1.0 - partial).epsilon(1e-12));
    CHECK(trunc.truncation_error > 0.1);
}

TEST_CASE("auto_l_max leaves a Poisson tail below 1e-8") {
    const int lm = auto_l_max(4.0);
    CHECK(coherent_amplitudes(4.0, lm).truncation_error < 1e-8);
    CHECK(coherent_amplitudes(4.0, lm - 1).truncation_error >= 1e-8);
    CHECK(auto_l_max(0.0) == 1);
}

TEST_CASE("initial state: Gaussian packet, unit norm, empty B") {
    const SystemParams p = packet_params();
    const AmplitudeField f = initial_state(p);

    for (const auto& v : f.b) CHECK(v == std::complex<double>(0.0));

    double norm = 0.0;
    for (const auto& v : f.a) norm += std::norm(v);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));

    // successive-site ratio matches the Gaussian envelope
    const int m0 = 490;
    const double x1 = m0 - p.x0, x2 = m0 + 1 - p.x0;
    const double expected =
        std::exp((x2 * x2 - x1 * x1) / (2 * p.sigma * p.sigma));
    CHECK(std::abs(f.A(0, m0, 3) / f.A(0, m0 + 1, 3)) ==
          doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("initial state rejects packets near the lattice edge") {
    SystemParams p = packet_params();
    p.x0 = 50.0;  // < 5 sigma from the left edge
    CHECK_THROWS_AS(initial_state(p), ConfigError);
}

TEST_CASE("uniform chain profile occupies only mode q = 0") {
    SystemParams p = packet_params();
    p.n_chains = 4;
    p.xi1 = {0.0, 0.0, 0.0, 0.0};
    p.xi2 = p.xi1;
    const AmplitudeField f = initial_state(p);

    const int l = 4, m = 512;
    for (int q = 1; q < 4; ++q) {
        std::complex<double> proj = 0.0;
        for (int j = 0; j < 4; ++j)
            proj += f.A(j, m, l) * unit_root(static_cast<long long>(q) * j, 4);
        CHECK(std::abs(proj) / 4.0 < 1e-12);
    }
}

TEST_CASE("parameter validation catches bad inputs") {
    SystemParams p = packet_params();
    CHECK_NOTHROW(p.validate());

    SystemParams bad = p;
    bad.dt = 1.0;  // violates the stability guard with <n>=4 photons
    bad.mean_photons = 4.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    bad = p;
    bad.xi1 = {1.0, 2.0};
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    bad = p;
    bad.l_max = 2;  // truncates far too much of <n>=4
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    bad = p;
    bad.chain_profile = {{0.5, 0.0}};  // not unit norm
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}
