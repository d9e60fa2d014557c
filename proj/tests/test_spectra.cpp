// test_spectra.cpp — Eigenvalue analysis, convergence scans, sweeps

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaudin/spectra.hpp"
#include "gaudin/sampling.hpp"
#include "oracles.hpp"

using namespace gaudin;

namespace {

// exp of an antihermitian generator via its spectral decomposition
Matrix unitary_exp(const Matrix& generator) {
    Eigen::ComplexEigenSolver<Matrix> solver(generator, true);
    const Matrix u = solver.eigenvectors();
    Eigen::VectorXcd phases = solver.eigenvalues();
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(phases(i));
    return u * phases.asDiagonal() * u.inverse();
}

} // namespace

TEST_CASE("diagonal hamiltonian eigenvalues are its diagonal") {
    const SpaceSpec space(8, {0.5});
    const ChargeSet charges =
        closed_form_charges(space, GenRepParams(0.9, 0.9, 0.0, 0.0, 0.4, 1.0));
    const SpectrumResult result = eigenvalues(charges.H0);

    std::vector<Complex> expected;
    for (Eigen::Index i = 0; i < space.dim(); ++i)
        expected.push_back(charges.H0.matrix()(i, i));
    std::sort(expected.begin(), expected.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });

    REQUIRE(result.eigenvalues.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(std::abs(result.eigenvalues[i] - expected[i]) < 1e-12);
}

TEST_CASE("jaynes-cummings spectrum matches the sector oracle") {
    const int n_max = 20;
    const SpaceSpec space(n_max, {0.5});
    const TCParams p(1.0, 0.35, 0.4);
    const SpectrumResult result = eigenvalues(tc_hamiltonian(space, p));

    const auto expected = oracle::jc_sector_spectrum(n_max, p.omega, p.delta, p.g);
    REQUIRE(result.eigenvalues.size() == expected.size());
    REQUIRE(result.eigenvalues.size() == 42);
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        worst = std::max(worst, std::abs(result.eigenvalues[i] - expected[i]));
    CHECK(worst < 1e-10);
}

TEST_CASE("hermitian-family spectra are real") {
    SampleRng rng(1234);
    const SpaceSpec space(12, {0.5});
    for (int trial = 0; trial < 5; ++trial) {
        const HermitianDraw draw = random_hermitian_draw(rng);
        const ChargeSet charges = closed_form_charges(space, draw.params);
        const QOp h = physical_hamiltonian(charges.H0, charges.H1, draw.kappa);
        const SpectrumResult result = eigenvalues(h);
        double radius = 0.0;
        for (const Complex& e : result.eigenvalues)
            radius = std::max(radius, std::abs(e));
        CHECK(result.max_imag <= 1e-9 * std::max(radius, 1.0));
    }
}

TEST_CASE("spectrum of the adjoint is the conjugate spectrum") {
    SampleRng rng(4321);
    const SpaceSpec space(10, {0.5});
    const ChargeSet charges = closed_form_charges(space, random_gen_params(rng));
    const QOp h = physical_hamiltonian(charges.H0, charges.H1, rng.in_disk(1.0));

    auto spectrum = eigenvalues(h).eigenvalues;
    auto adjoint_spectrum = eigenvalues(h.adjoint()).eigenvalues;
    for (Complex& e : adjoint_spectrum)
        e = std::conj(e);
    std::sort(adjoint_spectrum.begin(), adjoint_spectrum.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    double worst = 0.0;
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        worst = std::max(worst, std::abs(spectrum[i] - adjoint_spectrum[i]));
    CHECK(worst < 1e-9);
}

TEST_CASE("excitation-conserving spectrum is the union of sector spectra") {
    // low sectors of the number-conserving tc model are exactly the 2x2 blocks
    const int n_max = 10;
    const SpaceSpec space(n_max, {0.5});
    const TCParams p(1.1, -0.25, 0.5);
    const auto full = eigenvalues(tc_hamiltonian(space, p)).eigenvalues;
    const auto sectors = oracle::jc_sector_spectrum(n_max, p.omega, p.delta, p.g);

    for (std::size_t i = 0; i < sectors.size(); ++i)
        CHECK(std::abs(full[i] - sectors[i]) < 1e-11);
}

TEST_CASE("bogoliubov similarity leaves the spectrum invariant") {
    // canonical squeeze: alpha = cosh r, beta = sinh r, det = 1
    const int n_max = 30;
    const double r = 0.1, rho = 0.3, kappa = 0.6;
    const SpaceSpec space(n_max, {0.5});
    const double ch = std::cosh(r), sh = std::sinh(r);

    const ChargeSet squeezed =
        closed_form_charges(space, GenRepParams(ch, ch, sh, sh, rho, 1.0));
    const QOp h = physical_hamiltonian(squeezed.H0, squeezed.H1, kappa);

    // explicit rotation by exp(r/2 (a†² - a²)) is a matrix similarity
    const auto ops = make_operators(space);
    const Matrix generator =
        0.5 * r * (ops.a_dag.matrix() * ops.a_dag.matrix() -
                   ops.a.matrix() * ops.a.matrix());
    const Matrix s = unitary_exp(generator);
    const QOp rotated(space, s * h.matrix() * s.inverse(), h.degree());

    const auto direct = eigenvalues(h).eigenvalues;
    const auto conjugated = eigenvalues(rotated).eigenvalues;
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i)
        worst = std::max(worst, std::abs(direct[i] - conjugated[i]));
    CHECK(worst < 1e-8);

    // and the canonical transformation maps onto the unsqueezed model where
    // truncation has converged: the low end of both spectra coincides
    const ChargeSet reference =
        closed_form_charges(space, GenRepParams(1.0, 1.0, 0.0, 0.0, rho, 1.0));
    const auto ref = eigenvalues(
        physical_hamiltonian(reference.H0, reference.H1, kappa)).eigenvalues;
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(direct[i] - ref[i]) < 1e-8);
}

TEST_CASE("dimension cap and scan preconditions") {
    const SpaceSpec space(8, {0.5});
    const QOp h = number_operator(space);
    CHECK_THROWS_AS(eigenvalues(h, 10), DimensionCap);

    auto build = [](int n_max) {
        return number_operator(SpaceSpec(n_max, {0.5}));
    };
    CHECK_THROWS_AS(convergence_scan(build, {8}, 4), std::invalid_argument);
    CHECK_THROWS_AS(convergence_scan(build, {12, 8}, 4), std::invalid_argument);
}

TEST_CASE("number-conserving model is cutoff-independent in low sectors") {
    const TCParams p(1.0, 0.3, 0.5);
    auto build = [&](int n_max) {
        return tc_hamiltonian(SpaceSpec(n_max, {0.5}), p);
    };
    const auto rows = convergence_scan(build, {12, 16, 20}, 6);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].drift < 1e-12);
    CHECK(rows[2].drift < 1e-12);
    CHECK(rows[1].converged);
    CHECK(rows[2].converged);
}

TEST_CASE("weakly counter-rotating model converges with the cutoff") {
    const GenRepParams p(1.0, 1.0, 0.05, 0.05, 0.25, 1.0);
    auto build = [&](int n_max) {
        const SpaceSpec space(n_max, {0.5});
        const ChargeSet charges = closed_form_charges(space, p);
        return physical_hamiltonian(charges.H0, charges.H1, 0.7);
    };
    const auto rows = convergence_scan(build, {16, 24, 32}, 10);
    REQUIRE(rows.size() == 3);
    // regression baselines: drifts observed near 8e-12 and 2e-14
    CHECK(rows[1].drift < 1e-9);
    CHECK(rows[2].drift < rows[1].drift);
    CHECK(rows[2].drift <= 1e-6);
    CHECK(rows[2].converged);
}

TEST_CASE("commuting family report") {
    SampleRng rng(777);
    const SpaceSpec space(10, {0.5});
    const ChargeSet charges = closed_form_charges(space, random_gen_params(rng));

    const auto family =
        commuting_family_report({charges.H0, charges.H1, charges.C2}, 1e-10);
    CHECK(family.pass);

    const TCParams p(1.0, 0.3, 0.6);
    const auto tc = commuting_family_report(
        {number_operator(space), tc_hamiltonian(space, p)}, 1e-12);
    CHECK(tc.pass);

    const auto ops = make_operators(space);
    const auto bad = commuting_family_report({ops.a_dag * ops.a, ops.a}, 1e-10);
    CHECK_FALSE(bad.pass);

    CHECK_THROWS_AS(commuting_family_report({charges.H0}, 1e-10), std::invalid_argument);
    const ChargeSet other = closed_form_charges(SpaceSpec(9, {0.5}), random_gen_params(rng));
    CHECK_THROWS_AS(commuting_family_report({charges.H0, other.H0}, 1e-10), SpaceMismatch);
}

TEST_CASE("parameter sweep") {
    SampleRng rng(888);
    const SpaceSpec space(10, {0.5});

    std::vector<SweepPoint> grid;
    for (int i = 0; i < 6; ++i) {
        const HermitianDraw draw = random_hermitian_draw(rng);
        grid.push_back({draw.params, Complex(draw.kappa, 0.0)});
    }

    SUBCASE("hermitian grid flags every record hermitian") {
        const auto records = parameter_sweep(space, grid);
        REQUIRE(records.size() == 6);
        for (const auto& record : records) {
            CHECK(record.hermitian);
            CHECK(record.max_imag <= 1e-9);
            CHECK(record.error.empty());
        }
    }

    SUBCASE("single-point grid") {
        const auto records = parameter_sweep(space, {grid.front()});
        CHECK(records.size() == 1);
        CHECK(records.front().grid_index == 0);
    }

    SUBCASE("deterministic across worker counts") {
        const auto serial = parameter_sweep(space, grid, 0, 6, 1e-10,
                                            kDefaultDimensionCap, 1);
        const auto parallel = parameter_sweep(space, grid, 0, 6, 1e-10,
                                              kDefaultDimensionCap, 4);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].max_imag == parallel[i].max_imag);
            REQUIRE(serial[i].lowest.size() == parallel[i].lowest.size());
            for (std::size_t j = 0; j < serial[i].lowest.size(); ++j)
                CHECK(serial[i].lowest[j] == parallel[i].lowest[j]);
        }
    }

    SUBCASE("dimension cap is recorded, not thrown") {
        const auto records = parameter_sweep(space, grid, 0, 6, 1e-10, /*cap=*/4);
        for (const auto& record : records)
            CHECK_FALSE(record.error.empty());
    }

    SUBCASE("resume from a chunk index") {
        const auto full = parameter_sweep(space, grid);
        const auto tail = parameter_sweep(space, grid, 4);
        REQUIRE(tail.size() == 2);
        CHECK(tail[0].grid_index == 4);
        CHECK(tail[0].max_imag == full[4].max_imag);
    }
}
