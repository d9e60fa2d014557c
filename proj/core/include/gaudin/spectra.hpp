// spectra.hpp — Complex spectra, truncation scans, commuting-family reports

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaudin/lax.hpp"
#include "gaudin/models.hpp"

namespace gaudin {

inline constexpr Eigen::Index kDefaultDimensionCap = 4096;

struct SpectrumResult {
    std::vector<Complex> eigenvalues;   // sorted by (Re, Im)
    Eigen::Index dimension = 0;
    double max_imag = 0.0;
};

// Full spectrum of a (generally non-normal) operator. Throws DimensionCap
// above `cap` and NoConvergence if the eigensolver fails.
SpectrumResult eigenvalues(const QOp& h, Eigen::Index cap = kDefaultDimensionCap);

struct ConvergenceRow {
    int n_max = 0;
    std::vector<Complex> tracked;   // k lowest-|Re| eigenvalues at this cutoff
    double drift = 0.0;             // worst tracked movement from previous row
    bool converged = false;         // drift ≤ drift_tol (false on the first row)
};

// Recomputes the spectrum at each cutoff and follows the previous row's
// tracked eigenvalues by greedy nearest-match in C.
std::vector<ConvergenceRow> convergence_scan(const std::function<QOp(int)>& build,
                                             const std::vector<int>& n_max_list,
                                             int track_count,
                                             double drift_tol = 1e-6,
                                             Eigen::Index cap = kDefaultDimensionCap);

// Worst pairwise guarded commutator residual among the operators.
IdentityReport commuting_family_report(const std::vector<QOp>& ops, double tol);

struct SweepPoint {
    GenRepParams params;
    Complex kappa;
};

struct SweepRecord {
    std::size_t grid_index = 0;
    SweepPoint point;
    double max_imag = 0.0;
    bool hermitian = false;
    std::vector<Complex> lowest;    // k lowest-Re eigenvalues
    std::string error;              // empty on success
};

// One record per grid point, deterministic order regardless of worker count.
// DimensionCap at a point is recorded in the record, not thrown. `threads`
// ≤ 0 means use the hardware concurrency.
std::vector<SweepRecord> parameter_sweep(const SpaceSpec& space,
                                         const std::vector<SweepPoint>& grid,
                                         std::size_t first_index = 0,
                                         int lowest_count = 6,
                                         double hermitian_tol = 1e-10,
                                         Eigen::Index cap = kDefaultDimensionCap,
                                         int threads = 0);

} // namespace gaudin
