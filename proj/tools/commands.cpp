// commands.cpp — verify / charges / spectrum / sweep

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gaudin/laurent.hpp"
#include "gaudin/sampling.hpp"
#include "gaudin/spectra.hpp"

namespace gaudin::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp(target);
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ConfigError("cannot write output file " + path);
        out << content;
    }
    std::filesystem::rename(tmp, target);
}

ordered_json complex_json(Complex z) {
    return ordered_json::array({z.real(), z.imag()});
}

std::vector<Complex> pole_locations(const LaxFamily& family) {
    std::vector<Complex> locations;
    for (const Pole& p : family.poles())
        locations.push_back(p.location);
    return locations;
}

int worker_count() {
    if (const char* env = std::getenv("GAUDIN_FORGE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    return 0;   // auto
}

struct CoefficientRow {
    std::string name;
    double residual;
    bool pass;
};

std::string rows_to_csv(const std::vector<CoefficientRow>& rows) {
    std::string csv = "coefficient,residual,pass\n";
    for (const CoefficientRow& row : rows)
        csv += row.name + "," + fmt(row.residual) + "," +
               (row.pass ? "true" : "false") + "\n";
    return csv;
}

// Worst pairwise commutator residual matrix over a labelled family.
ordered_json commutator_matrix(const std::vector<std::string>& labels,
                               const std::vector<QOp>& ops, double tol) {
    ordered_json matrix = ordered_json::array();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < ops.size(); ++j) {
            if (i == j) {
                row.push_back(0.0);
                continue;
            }
            row.push_back(guarded_equal(ops[i] * ops[j], ops[j] * ops[i], tol).residual);
        }
        matrix.push_back(row);
    }
    ordered_json out;
    out["labels"] = labels;
    out["matrix"] = matrix;
    return out;
}

} // namespace

int cmd_verify(const RunConfig& config) {
    const LaxFamily family = build_family(config);
    const std::vector<Complex> poles = pole_locations(family);
    SampleRng rng(config.seed);
    const double tol = config.tolerance;

    struct CheckRun {
        std::string name;
        double residual = 0.0;
        int guard = 0;
        bool pass = true;
    };
    std::vector<CheckRun> runs;

    {
        CheckRun run{"cybe"};
        for (int s = 0; s < config.samples; ++s) {
            const auto pts = rng.spectral_points({}, 3);
            const IdentityReport report = check_cybe(pts[0], pts[1], pts[2], tol);
            run.residual = std::max(run.residual, report.residual);
            run.guard = report.guard;
            run.pass = run.pass && report.pass;
        }
        runs.push_back(run);
    }

    using Checker = IdentityReport (*)(const LaxFamily&, Complex, Complex, double);
    const std::pair<std::string, Checker> model_checks[] = {
        {"fundamental_identity", &check_fundamental_identity},
        {"gaudin_relations", &check_gaudin_relations},
        {"generating_commutativity", &check_generating_commutativity},
    };
    for (const auto& [name, checker] : model_checks) {
        CheckRun run{name};
        for (int s = 0; s < config.samples; ++s) {
            const auto pts = rng.spectral_points(poles, 2);
            const IdentityReport report = checker(family, pts[0], pts[1], tol);
            run.residual = std::max(run.residual, report.residual);
            run.guard = report.guard;
            run.pass = run.pass && report.pass;
        }
        runs.push_back(run);
    }

    ordered_json report = ordered_json::array();
    bool all_pass = true;
    for (const CheckRun& run : runs) {
        ordered_json entry;
        entry["check"] = run.name;
        entry["seed"] = config.seed;
        entry["samples"] = config.samples;
        entry["residual"] = run.residual;
        entry["tolerance"] = tol;
        entry["guard"] = run.guard;
        entry["pass"] = run.pass;
        report.push_back(entry);
        all_pass = all_pass && run.pass;
    }
    atomic_write(config.out_path, report.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int cmd_charges(const RunConfig& config) {
    const SpaceSpec space = config.space();
    const LaxFamily family = build_family(config);
    const double tol = config.tolerance;
    const LaurentDecomp fit = laurent_fit(family, tol);

    std::vector<CoefficientRow> rows;
    std::vector<std::string> labels;
    std::vector<QOp> charges;
    ordered_json hermitian;

    auto add_row = [&](const std::string& name, const QOp& fitted, const QOp& closed) {
        const GuardedComparison cmp = guarded_equal(fitted, closed, tol);
        rows.push_back({name, cmp.residual, cmp.pass});
    };

    if (config.model == "gen") {
        const GenRepParams& p = *config.gen;
        const ChargeSet closed = closed_form_charges(space, p);

        add_row("lambda2", fit.poly[2], QOp::scalar(space, closed.lambda2_coeff));
        add_row("lambda1", fit.poly[1], QOp::scalar(space, closed.lambda1_coeff));
        add_row("H0", fit.poly[0], closed.H0);
        add_row("H1", *fit.pole_coeff(0.0, 1), closed.H1);
        add_row("C2", *fit.pole_coeff(0.0, 2), closed.C2);

        labels = {"H0", "H1", "C2"};
        charges = {closed.H0, closed.H1, closed.C2};
        const QOp h = physical_hamiltonian(closed.H0, closed.H1, config.kappa);
        hermitian["H0"] = is_hermitian(closed.H0, tol);
        hermitian["H1"] = is_hermitian(closed.H1, tol);
        hermitian["C2"] = is_hermitian(closed.C2, tol);
        hermitian["H_phys"] = is_hermitian(h, tol);
    } else if (config.model == "tc") {
        const TCParams& p = *config.tc;
        const double g2 = p.g * p.g;
        const auto ops = make_operators(space);
        const QOp h_tc = tc_hamiltonian(space, p);
        const QOp h_n = number_operator(space);
        const QOp residue = (2.0 / g2) * (h_tc - p.omega * h_n);
        const QOp casimir = ops.sz * ops.sz + 0.5 * anticommutator(ops.sp, ops.sm);
        const Complex delta(p.delta, 0.0);

        add_row("lambda2", fit.poly[2], QOp::scalar(space, 4.0 / (g2 * g2)));
        add_row("lambda1", fit.poly[1], QOp::scalar(space, -4.0 * p.omega / (g2 * g2)));
        add_row("lambda0", fit.poly[0],
                (4.0 / g2) * h_n +
                    QOp::scalar(space, p.omega * p.omega / (g2 * g2) + 2.0 / g2));
        add_row("residue_delta", *fit.pole_coeff(delta, 1), residue);
        add_row("casimir", *fit.pole_coeff(delta, 2), casimir);

        labels = {"H_N", "H_TC", "residue_delta"};
        charges = {h_n, h_tc, residue};
        hermitian["H_N"] = is_hermitian(h_n, tol);
        hermitian["H_TC"] = is_hermitian(h_tc, tol);
    } else {
        // no closed form for the inhomogeneous charges; report the fitted
        // coefficients and their mutual commutators
        std::vector<std::pair<std::string, const QOp*>> fitted;
        for (std::size_t k = 0; k < fit.poly.size(); ++k)
            fitted.emplace_back("lambda" + std::to_string(k), &fit.poly[k]);
        for (std::size_t j = 0; j < fit.pole_terms.size(); ++j) {
            const auto& term = fit.pole_terms[j];
            const std::string tag = "eps" + std::to_string(j / 2 + 1);
            fitted.emplace_back(
                term.order == 1 ? "residue_" + tag : "casimir_" + tag, &term.coeff);
        }
        for (const auto& [name, op] : fitted) {
            double worst = 0.0;
            for (const auto& [other_name, other] : fitted) {
                if (other == op)
                    continue;
                worst = std::max(
                    worst, guarded_equal(*op * *other, *other * *op, tol).residual);
            }
            rows.push_back({name, worst, worst <= tol});
            labels.push_back(name);
            charges.push_back(*op);
            hermitian[name] = is_hermitian(*op, tol);
        }
    }

    bool all_pass = true;
    for (const CoefficientRow& row : rows)
        all_pass = all_pass && row.pass;

    if (config.format == "csv") {
        atomic_write(config.out_path, rows_to_csv(rows));
    } else {
        ordered_json doc;
        doc["model"] = config.model;
        doc["seed"] = config.seed;
        doc["fit_residual"] = fit.fit_residual;
        ordered_json coefficients = ordered_json::array();
        for (const CoefficientRow& row : rows) {
            ordered_json entry;
            entry["coefficient"] = row.name;
            entry["residual"] = row.residual;
            entry["pass"] = row.pass;
            coefficients.push_back(entry);
        }
        doc["coefficients"] = coefficients;
        doc["hermitian"] = hermitian;
        doc["commutator_residuals"] = commutator_matrix(labels, charges, tol);
        doc["all_pass"] = all_pass;
        atomic_write(config.out_path, doc.dump(2) + "\n");
    }
    return all_pass ? 0 : 1;
}

int cmd_spectrum(const RunConfig& config) {
    const SpaceSpec space = config.space();
    if (space.dim() > config.max_dimension)
        throw DimensionCap("dimension " + std::to_string(space.dim()) +
                           " exceeds the cap " + std::to_string(config.max_dimension));

    QOp h = [&] {
        if (config.model == "tc")
            return tc_hamiltonian(space, *config.tc);
        if (config.model == "gen") {
            const ChargeSet charges = closed_form_charges(space, *config.gen);
            return physical_hamiltonian(charges.H0, charges.H1, config.kappa);
        }
        throw ConfigError("model: spectrum supports the tc and gen models");
    }();

    const SpectrumResult result = eigenvalues(h, config.max_dimension);

    if (config.format == "csv") {
        std::string csv = "index,re,im\n";
        for (std::size_t i = 0; i < result.eigenvalues.size(); ++i)
            csv += std::to_string(i) + "," + fmt(result.eigenvalues[i].real()) + "," +
                   fmt(result.eigenvalues[i].imag()) + "\n";
        atomic_write(config.out_path, csv);
    } else {
        ordered_json doc;
        doc["model"] = config.model;
        doc["dimension"] = result.dimension;
        doc["max_imag"] = result.max_imag;
        ordered_json ev = ordered_json::array();
        for (const Complex& e : result.eigenvalues)
            ev.push_back(complex_json(e));
        doc["eigenvalues"] = ev;
        atomic_write(config.out_path, doc.dump(2) + "\n");
    }
    return 0;
}

namespace {

const char* const kSweepHeader =
    "grid_index,alpha1_re,alpha1_im,alpha2_re,alpha2_im,beta1_re,beta1_im,"
    "beta2_re,beta2_im,rho_re,rho_im,gamma_re,gamma_im,kappa_re,kappa_im,"
    "max_imag,is_hermitian";

std::string sweep_row(const SweepRecord& record) {
    const GenRepParams& p = record.point.params;
    std::string row = std::to_string(record.grid_index);
    for (const Complex& z : {p.alpha1, p.alpha2, p.beta1, p.beta2, p.rho, p.gamma,
                             record.point.kappa})
        row += "," + fmt(z.real()) + "," + fmt(z.imag());
    row += "," + fmt(record.max_imag) + "," + (record.hermitian ? "true" : "false");
    return row;
}

std::vector<SweepPoint> build_grid(const RunConfig& config) {
    if (!config.gen)
        throw ConfigError("params: sweep requires the gen model parameters");

    struct Axis {
        std::string name;
        std::vector<Complex> values;
    };
    std::vector<Axis> axes;
    for (const auto& [name, values] : config.sweep_axes)
        axes.push_back({name, values});

    std::size_t total = 1;
    for (const Axis& axis : axes)
        total *= axis.values.size();

    std::vector<SweepPoint> grid;
    grid.reserve(total);
    for (std::size_t index = 0; index < total; ++index) {
        Complex a1 = config.gen->alpha1, a2 = config.gen->alpha2;
        Complex b1 = config.gen->beta1, b2 = config.gen->beta2;
        Complex rho = config.gen->rho, gamma = config.gen->gamma;
        Complex kappa = config.kappa;

        std::size_t rest = index;
        for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
            const Complex value = it->values[rest % it->values.size()];
            rest /= it->values.size();
            if (it->name == "alpha1") a1 = value;
            else if (it->name == "alpha2") a2 = value;
            else if (it->name == "beta1") b1 = value;
            else if (it->name == "beta2") b2 = value;
            else if (it->name == "rho") rho = value;
            else if (it->name == "gamma") gamma = value;
            else kappa = value;
        }
        grid.push_back({GenRepParams(a1, a2, b1, b2, rho, gamma), kappa});
    }
    return grid;
}

// Existing rows in a resumable sweep CSV, or 0 when absent/incompatible.
std::size_t resumable_rows(const std::string& path, std::string& existing) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return 0;
    std::string header;
    if (!std::getline(in, header) || header != kSweepHeader)
        return 0;
    existing.clear();
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        existing += line + "\n";
        ++rows;
    }
    return rows;
}

} // namespace

int cmd_sweep(const RunConfig& config) {
    const SpaceSpec space = config.space();
    const std::vector<SweepPoint> grid = build_grid(config);

    std::size_t first_index = 0;
    std::string existing;
    if (config.format == "csv") {
        first_index = resumable_rows(config.out_path, existing);
        if (first_index > grid.size()) {   // stale file from another grid
            first_index = 0;
            existing.clear();
        }
    }

    const auto records = parameter_sweep(space, grid, first_index, config.lowest_k,
                                         config.tolerance, config.max_dimension,
                                         worker_count());

    bool dimension_capped = false;
    for (const SweepRecord& record : records)
        dimension_capped = dimension_capped || !record.error.empty();

    if (config.format == "csv") {
        std::string csv = std::string(kSweepHeader) + "\n" + existing;
        for (const SweepRecord& record : records)
            csv += sweep_row(record) + "\n";
        atomic_write(config.out_path, csv);
    } else {
        ordered_json doc;
        doc["model"] = "gen";
        doc["seed"] = config.seed;
        ordered_json out_records = ordered_json::array();
        for (const SweepRecord& record : records) {
            const GenRepParams& p = record.point.params;
            ordered_json entry;
            entry["grid_index"] = record.grid_index;
            entry["alpha1"] = complex_json(p.alpha1);
            entry["alpha2"] = complex_json(p.alpha2);
            entry["beta1"] = complex_json(p.beta1);
            entry["beta2"] = complex_json(p.beta2);
            entry["rho"] = complex_json(p.rho);
            entry["gamma"] = complex_json(p.gamma);
            entry["kappa"] = complex_json(record.point.kappa);
            if (record.error.empty()) {
                entry["max_imag"] = record.max_imag;
                entry["is_hermitian"] = record.hermitian;
                ordered_json lowest = ordered_json::array();
                for (const Complex& e : record.lowest)
                    lowest.push_back(complex_json(e));
                entry["lowest_eigenvalues"] = lowest;
            } else {
                entry["error"] = record.error;
            }
            out_records.push_back(entry);
        }
        doc["records"] = out_records;
        atomic_write(config.out_path, doc.dump(2) + "\n");
    }
    return dimension_capped ? 3 : 0;
}

} // namespace gaudin::cli
