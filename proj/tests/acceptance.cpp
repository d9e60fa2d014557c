// acceptance.cpp — End-to-end acceptance suite. One pass/fail line per
// criterion; the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <unistd.h>

#include "gaudin/laurent.hpp"
#include "gaudin/models.hpp"
#include "gaudin/sampling.hpp"
#include "gaudin/spectra.hpp"
#include "oracles.hpp"
#include "subprocess.hpp"

using namespace gaudin;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", value);
    return buf;
}

// ---- criterion 1: cYBE over 100 random triples ----------------------------

Outcome criterion_cybe() {
    const auto start = std::chrono::steady_clock::now();
    SampleRng rng(1001);
    double worst = 0.0;
    bool pass = true;
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = rng.spectral_points({}, 3);
        const IdentityReport report = check_cybe(pts[0], pts[1], pts[2], 1e-13);
        worst = std::max(worst, report.residual);
        pass = pass && report.pass;
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 1.0;
    return {pass, "max residual " + sci(worst) + " (tol 1e-13), " + sci(elapsed) + " s"};
}

// ---- criterion 2: fundamental identity + loop-algebra relations -----------

double identity_suite_worst(int n_max, bool& pass) {
    SampleRng rng(1002);
    double worst = 0.0;
    const SpaceSpec single(n_max, {0.5});
    const SpaceSpec pair(n_max, {0.5, 0.5});

    for (int draw = 0; draw < 50; ++draw) {
        const LaxFamily tc = tc_representation(single, random_tc_params(rng));
        const LaxFamily gen = gen_representation(single, random_gen_params(rng));
        const auto eps = random_epsilons(rng, 2);
        const LaxFamily inhom =
            inhom_representation(pair, InhomSpec(random_tc_params(rng), eps));

        for (const LaxFamily* family : {&tc, &gen, &inhom}) {
            std::vector<Complex> poles;
            for (const Pole& p : family->poles())
                poles.push_back(p.location);
            const auto pts = rng.spectral_points(poles, 2);
            const auto fundamental =
                check_fundamental_identity(*family, pts[0], pts[1], 1e-10);
            const auto relations = check_gaudin_relations(*family, pts[0], pts[1], 1e-10);
            worst = std::max({worst, fundamental.residual, relations.residual});
            pass = pass && fundamental.pass && relations.pass;
        }
    }
    return worst;
}

Outcome criterion_identities() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    const double worst = identity_suite_worst(10, pass);
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 30.0;
    return {pass, "50 pairs x 3 representations, worst residual " + sci(worst) +
                      " (tol 1e-10), " + sci(elapsed) + " s"};
}

// ---- criterion 3: generating-function commutativity -----------------------

double commutativity_worst(int n_max, bool& pass) {
    SampleRng rng(1003);
    double worst = 0.0;
    const SpaceSpec single(n_max, {0.5});
    const SpaceSpec pair(n_max, {0.5, 0.5});

    const LaxFamily tc = tc_representation(single, TCParams(1.0, 0.35, 0.7));
    const LaxFamily gen = gen_representation(single, random_gen_params(rng));
    const auto eps = random_epsilons(rng, 2);
    const LaxFamily inhom =
        inhom_representation(pair, InhomSpec(TCParams(1.2, -0.3, 0.8), eps));

    for (const LaxFamily* family : {&tc, &gen, &inhom}) {
        std::vector<Complex> poles;
        for (const Pole& p : family->poles())
            poles.push_back(p.location);
        for (int draw = 0; draw < 20; ++draw) {
            const auto pts = rng.spectral_points(poles, 2);
            const auto report =
                check_generating_commutativity(*family, pts[0], pts[1], 1e-9);
            worst = std::max(worst, report.residual);
            pass = pass && report.pass;
        }
    }
    return worst;
}

Outcome criterion_commutativity() {
    bool pass = true;
    const double worst = commutativity_worst(12, pass);
    return {pass, "20 pairs per representation at n_max 12, worst residual " +
                      sci(worst) + " (tol 1e-9)"};
}

// ---- criterion 4: Laurent fit vs closed-form charges -----------------------

double reconciliation_worst(int n_max, bool& pass) {
    SampleRng rng(1004);
    double worst = 0.0;
    for (double s : {0.5, 1.0}) {
        const SpaceSpec space(n_max, {s});
        for (int draw = 0; draw < 20; ++draw) {
            const GenRepParams p = random_gen_params(rng);
            const ChargeSet closed = closed_form_charges(space, p);
            const LaurentDecomp fit = laurent_fit(gen_representation(space, p), 1e-8);

            const std::pair<const QOp*, QOp> pairs[] = {
                {&fit.poly[2], QOp::scalar(space, closed.lambda2_coeff)},
                {&fit.poly[1], QOp::scalar(space, closed.lambda1_coeff)},
                {&fit.poly[0], closed.H0},
                {fit.pole_coeff(0.0, 1), closed.H1},
                {fit.pole_coeff(0.0, 2), closed.C2},
            };
            for (const auto& [fitted, expected] : pairs) {
                const GuardedComparison cmp = guarded_equal(*fitted, expected, 1e-8);
                worst = std::max(worst, cmp.residual);
                pass = pass && cmp.pass;
            }
        }
    }
    return worst;
}

Outcome criterion_reconciliation() {
    bool pass = true;
    const double worst = reconciliation_worst(10, pass);
    return {pass, "20 draws x {spin-1/2, spin-1}, worst coefficient residual " +
                      sci(worst) + " (tol 1e-8)"};
}

// ---- criterion 5: commuting charges ----------------------------------------

double charges_commute_worst(int n_max, bool& pass) {
    SampleRng rng(1005);
    const SpaceSpec space(n_max, {0.5});
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        const ChargeSet c = closed_form_charges(space, random_gen_params(rng));
        const auto report = commuting_family_report({c.H0, c.H1, c.C2}, 1e-10);
        worst = std::max(worst, report.residual);
        pass = pass && report.pass;
    }
    for (int draw = 0; draw < 20; ++draw) {
        const TCParams p = random_tc_params(rng);
        const auto report = commuting_family_report(
            {number_operator(space), tc_hamiltonian(space, p)}, 1e-12);
        worst = std::max(worst, report.residual);
        pass = pass && report.pass;
    }
    return worst;
}

Outcome criterion_commuting_charges() {
    bool pass = true;
    const double worst = charges_commute_worst(10, pass);
    return {pass, "{H0,H1,C2} at 1e-10 and [H_N,H_TC] at 1e-12, worst residual " +
                      sci(worst)};
}

// ---- criterion 6: tc residue identity ---------------------------------------

double residue_identity_worst(int n_max, bool& pass) {
    SampleRng rng(1006);
    const SpaceSpec space(n_max, {0.5});
    double worst = 0.0;
    for (int draw = 0; draw < 5; ++draw) {
        const TCParams p = random_tc_params(rng);
        const double g2 = p.g * p.g;
        const QOp expected =
            (2.0 / g2) * (tc_hamiltonian(space, p) - p.omega * number_operator(space));
        const LaurentDecomp fit = laurent_fit(tc_representation(space, p), 1e-8);
        const QOp* residue = fit.pole_coeff(Complex(p.delta, 0.0), 1);
        pass = pass && residue != nullptr;
        if (!residue)
            continue;
        const GuardedComparison cmp = guarded_equal(*residue, expected, 1e-8);
        worst = std::max(worst, cmp.residual);
        pass = pass && cmp.pass;
    }
    return worst;
}

Outcome criterion_residue() {
    bool pass = true;
    const double worst = residue_identity_worst(10, pass);
    return {pass, "fitted residue at delta vs (2/g^2)(H_TC - omega H_N), worst " +
                      sci(worst) + " (tol 1e-8)"};
}

// ---- criterion 7: Hermitian sub-family and a non-Hermitian witness ----------

Outcome criterion_hermitian_family() {
    SampleRng rng(1007);
    const SpaceSpec space(12, {0.5});
    bool pass = true;
    double worst_ratio = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        const HermitianDraw draw_params = random_hermitian_draw(rng);
        const ChargeSet c = closed_form_charges(space, draw_params.params);
        const QOp h = physical_hamiltonian(c.H0, c.H1, draw_params.kappa);
        pass = pass && is_hermitian(h, 1e-10);

        const SpectrumResult spectrum = eigenvalues(h);
        double radius = 0.0;
        for (const Complex& e : spectrum.eigenvalues)
            radius = std::max(radius, std::abs(e));
        const double ratio = spectrum.max_imag / std::max(radius, 1e-300);
        worst_ratio = std::max(worst_ratio, ratio);
        pass = pass && ratio <= 1e-9;
    }

    // a generic complex draw leaves the real axis; regression-pinned spectrum
    const SpaceSpec witness_space(14, {0.5});
    const GenRepParams witness(Complex(1.0, 0.4), Complex(0.8, -0.2),
                               Complex(0.5, 0.3), Complex(0.0, 0.2),
                               Complex(0.3, 0.1), Complex(1.0, 0.0));
    const ChargeSet c = closed_form_charges(witness_space, witness);
    const SpectrumResult spectrum =
        eigenvalues(physical_hamiltonian(c.H0, c.H1, Complex(0.8, 0.0)));
    pass = pass && spectrum.max_imag > 1e-3;
    pass = pass && spectrum.max_imag > 8.7 && spectrum.max_imag < 8.9;

    return {pass, "20 Hermitian draws, worst |Im|/radius " + sci(worst_ratio) +
                      " (tol 1e-9); witness max |Im| " + sci(spectrum.max_imag)};
}

// ---- criterion 8: Jaynes-Cummings sector oracle -----------------------------

Outcome criterion_jc_oracle() {
    const int n_max = 20;
    const TCParams p(1.0, 0.35, 0.4);
    const SpectrumResult result =
        eigenvalues(tc_hamiltonian(SpaceSpec(n_max, {0.5}), p));
    const auto expected = oracle::jc_sector_spectrum(n_max, p.omega, p.delta, p.g);

    bool pass = result.eigenvalues.size() == expected.size();
    double worst = 0.0;
    for (std::size_t i = 0; pass && i < expected.size(); ++i)
        worst = std::max(worst, std::abs(result.eigenvalues[i] - expected[i]));
    pass = pass && worst <= 1e-10;
    return {pass, "full spectrum at n_max 20 vs 2x2 sector oracle, worst " +
                      sci(worst) + " (tol 1e-10)"};
}

// ---- criterion 9: truncation robustness --------------------------------------

Outcome criterion_truncation() {
    bool pass = true;
    const double floor = 1e-18;

    bool dummy = true;
    struct Ratio {
        const char* name;
        double base, wide;
    };
    const Ratio ratios[] = {
        {"identities", identity_suite_worst(10, dummy), identity_suite_worst(14, dummy)},
        {"commutativity", commutativity_worst(12, dummy), commutativity_worst(16, dummy)},
        {"reconciliation", reconciliation_worst(10, dummy), reconciliation_worst(14, dummy)},
        {"charges", charges_commute_worst(10, dummy), charges_commute_worst(14, dummy)},
    };
    std::string detail = "residual growth 10->14:";
    for (const Ratio& r : ratios) {
        const double change = std::max(r.wide, floor) / std::max(r.base, floor);
        pass = pass && change < 10.0;
        detail += std::string(" ") + r.name + " x" + sci(change);
    }

    // weakly counter-rotating model: tracked eigenvalues settle by n_max 24
    const GenRepParams weak(1.0, 1.0, 0.05, 0.05, 0.25, 1.0);
    auto build = [&](int n_max) {
        const ChargeSet c = closed_form_charges(SpaceSpec(n_max, {0.5}), weak);
        return physical_hamiltonian(c.H0, c.H1, 0.7);
    };
    const auto rows = convergence_scan(build, {24, 32}, 10);
    pass = pass && rows[1].drift <= 1e-6;
    detail += "; drift 24->32 " + sci(rows[1].drift) + " (tol 1e-6)";

    return {pass, detail};
}

// ---- criterion 10: byte-identical reruns --------------------------------------

Outcome criterion_reproducibility() {
#ifndef GAUDIN_FORGE_BIN
    return {false, "CLI binary path not configured"};
#else
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("gaudin_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string verify_out = (dir / "verify.json").string();
    const std::string sweep_out = (dir / "sweep.csv").string();
    const std::string verify_cfg = (dir / "verify_cfg.json").string();
    const std::string sweep_cfg = (dir / "sweep_cfg.json").string();

    testutil::write_file(verify_cfg, R"({
  "model": "gen",
  "hilbert": {"n_max": 10, "spins": [0.5]},
  "params": {"alpha1": [0.9, 0.2], "alpha2": [1.1, -0.1], "beta1": [0.3, 0.1],
             "beta2": [0.2, -0.3], "rho": [0.25, 0.05], "gamma": [1.1, 0.0]},
  "verify": {"tolerance": 1e-9, "seed": 1234, "samples": 6},
  "output": {"path": ")" + verify_out + R"(", "format": "json"}
})");
    testutil::write_file(sweep_cfg, R"({
  "model": "gen",
  "hilbert": {"n_max": 10, "spins": [0.5]},
  "params": {"alpha1": 1.0, "alpha2": 1.0, "beta1": 0.1, "beta2": 0.1,
             "rho": 0.25, "gamma": 1.0},
  "verify": {"tolerance": 1e-10, "seed": 1234, "samples": 1},
  "output": {"path": ")" + sweep_out + R"(", "format": "csv"},
  "sweep": {"kappa": [[0.0,0.0],[0.5,0.0],[1.0,0.0]], "beta1": [[0.05,0.0],[0.1,0.0]]}
})");

    const std::string bin = GAUDIN_FORGE_BIN;
    bool pass = true;
    auto rerun_identical = [&](const std::string& args, const std::string& out) {
        if (testutil::run_command(bin + " " + args + " 2>/dev/null") != 0)
            return false;
        const std::string first = testutil::read_file(out);
        fs::remove(out);
        if (testutil::run_command(bin + " " + args + " 2>/dev/null") != 0)
            return false;
        return !first.empty() && first == testutil::read_file(out);
    };
    pass = pass && rerun_identical("verify --config " + verify_cfg, verify_out);
    pass = pass && rerun_identical("sweep --config " + sweep_cfg, sweep_out);

    std::error_code ec;
    fs::remove_all(dir, ec);
    return {pass, std::string("verify and sweep byte-identical across reruns: ") +
                      (pass ? "yes" : "no")};
#endif
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "cYBE suite", criterion_cybe},
        {2, "fundamental identity and loop-algebra relations", criterion_identities},
        {3, "generating-function commutativity", criterion_commutativity},
        {4, "Laurent fit vs closed-form charges", criterion_reconciliation},
        {5, "commuting charges", criterion_commuting_charges},
        {6, "tc residue identity", criterion_residue},
        {7, "Hermitian sub-family and non-Hermitian witness", criterion_hermitian_family},
        {8, "Jaynes-Cummings sector oracle", criterion_jc_oracle},
        {9, "truncation robustness", criterion_truncation},
        {10, "reproducibility", criterion_reproducibility},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("[%s] criterion %2d: %s — %s\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.number, criterion.name, outcome.detail.c_str());
    }
    return failures;
}
