// spectra.cpp — Eigenvalue analysis of the physical Hamiltonians

#include "gaudin/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace gaudin {

namespace {

bool complex_less(const Complex& x, const Complex& y) {
    if (x.real() != y.real())
        return x.real() < y.real();
    return x.imag() < y.imag();
}

// Greedy nearest-match of `target` into `pool`; returns the worst distance.
// Ties break toward smaller real part, then smaller imaginary part.
double nearest_match_drift(const std::vector<Complex>& target, std::vector<Complex> pool) {
    double worst = 0.0;
    for (const Complex& t : target) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const double d = std::abs(pool[i] - t);
            if (d < best_dist ||
                (d == best_dist && complex_less(pool[i], pool[best]))) {
                best = i;
                best_dist = d;
            }
        }
        worst = std::max(worst, best_dist);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

std::vector<Complex> lowest_abs_re(const std::vector<Complex>& eigenvalues, int count) {
    std::vector<Complex> sorted = eigenvalues;
    std::sort(sorted.begin(), sorted.end(), [](const Complex& x, const Complex& y) {
        if (std::abs(x.real()) != std::abs(y.real()))
            return std::abs(x.real()) < std::abs(y.real());
        return complex_less(x, y);
    });
    sorted.resize(std::min<std::size_t>(sorted.size(), static_cast<std::size_t>(count)));
    return sorted;
}

} // namespace

SpectrumResult eigenvalues(const QOp& h, Eigen::Index cap) {
    const Eigen::Index dim = h.space().dim();
    if (dim > cap)
        throw DimensionCap("dimension " + std::to_string(dim) +
                           " exceeds the cap " + std::to_string(cap));

    Eigen::ComplexEigenSolver<Matrix> solver(h.matrix(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("complex eigensolver did not converge");

    SpectrumResult result;
    result.dimension = dim;
    result.eigenvalues.assign(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + dim);
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), complex_less);
    result.max_imag = 0.0;
    for (const Complex& e : result.eigenvalues)
        result.max_imag = std::max(result.max_imag, std::abs(e.imag()));
    return result;
}

std::vector<ConvergenceRow> convergence_scan(const std::function<QOp(int)>& build,
                                             const std::vector<int>& n_max_list,
                                             int track_count,
                                             double drift_tol,
                                             Eigen::Index cap) {
    if (n_max_list.size() < 2)
        throw std::invalid_argument("convergence scan needs at least two cutoffs");
    if (!std::is_sorted(n_max_list.begin(), n_max_list.end()))
        throw std::invalid_argument("cutoff list must be ascending");

    std::vector<ConvergenceRow> rows;
    std::vector<Complex> previous_tracked;
    for (int n_max : n_max_list) {
        const SpectrumResult spectrum = eigenvalues(build(n_max), cap);
        ConvergenceRow row;
        row.n_max = n_max;
        row.tracked = lowest_abs_re(spectrum.eigenvalues, track_count);
        if (!previous_tracked.empty()) {
            row.drift = nearest_match_drift(previous_tracked, spectrum.eigenvalues);
            row.converged = row.drift <= drift_tol;
        }
        previous_tracked = row.tracked;
        rows.push_back(std::move(row));
    }
    return rows;
}

IdentityReport commuting_family_report(const std::vector<QOp>& ops, double tol) {
    if (ops.size() < 2)
        throw std::invalid_argument("commuting-family report needs at least two operators");
    for (const QOp& op : ops)
        if (!(op.space() == ops.front().space()))
            throw SpaceMismatch("operators live on different spaces");

    double residual = 0.0;
    int guard = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            const GuardedComparison cmp = guarded_equal(ops[i] * ops[j], ops[j] * ops[i], tol);
            residual = std::max(residual, cmp.residual);
            guard = std::max(guard, cmp.guard);
        }
    }
    return {"commuting_family", {}, residual, tol, guard, residual <= tol};
}

std::vector<SweepRecord> parameter_sweep(const SpaceSpec& space,
                                         const std::vector<SweepPoint>& grid,
                                         std::size_t first_index,
                                         int lowest_count,
                                         double hermitian_tol,
                                         Eigen::Index cap,
                                         int threads) {
    if (first_index > grid.size())
        throw std::invalid_argument("first_index beyond the grid");

    const std::size_t jobs = grid.size() - first_index;
    std::vector<SweepRecord> records;
    records.reserve(jobs);
    for (std::size_t i = first_index; i < grid.size(); ++i)
        records.push_back({i, grid[i], 0.0, false, {}, {}});

    auto run_one = [&](SweepRecord& record) {
        try {
            if (space.dim() > cap)
                throw DimensionCap("dimension " + std::to_string(space.dim()) +
                                   " exceeds the cap " + std::to_string(cap));
            const ChargeSet charges = closed_form_charges(space, record.point.params);
            const QOp h = physical_hamiltonian(charges.H0, charges.H1, record.point.kappa);
            record.hermitian = is_hermitian(h, hermitian_tol);
            const SpectrumResult spectrum = eigenvalues(h, cap);
            record.max_imag = spectrum.max_imag;
            const std::size_t keep =
                std::min<std::size_t>(spectrum.eigenvalues.size(),
                                      static_cast<std::size_t>(lowest_count));
            record.lowest.assign(spectrum.eigenvalues.begin(),
                                 spectrum.eigenvalues.begin() + keep);
        } catch (const DimensionCap& e) {
            record.error = e.what();
        }
    };

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs ? jobs : 1)));

    if (workers == 1 || jobs <= 1) {
        for (SweepRecord& record : records)
            run_one(record);
        return records;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= records.size())
                    return;
                run_one(records[i]);
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    return records;
}

} // namespace gaudin
