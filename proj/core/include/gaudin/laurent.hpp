// laurent.hpp — Laurent decomposition of the generating function by exact fit

#pragma once

#include <vector>

#include "gaudin/lax.hpp"

namespace gaudin {

// τ(λ) = Σ_k poly[k]·λ^k + Σ_p coeff_p/(λ-p)^order. Coefficients are fitted
// from samples; fit_residual is the worst held-out guarded deviation.
struct LaurentDecomp {
    std::vector<QOp> poly;   // poly[k] multiplies λ^k, k = 0..2

    struct PoleTerm {
        Complex location;
        int order;           // 1 or 2
        QOp coeff;
    };
    std::vector<PoleTerm> pole_terms;

    double fit_residual = 0.0;

    QOp evaluate(Complex lambda) const;

    // nullptr when no term matches.
    const QOp* pole_coeff(Complex location, int order, double loc_tol = 1e-9) const;
};

// Samples τ(λ) at exactly as many deterministic points (two concentric
// circles around the pole set) as there are unknown coefficient matrices,
// solves the elementwise linear system, and validates on 3 held-out points.
// Throws IllConditioned if the sample matrix condition exceeds 1e10 and
// FitRejected if the held-out guarded residual exceeds tol.
LaurentDecomp laurent_fit(const LaxFamily& family, double tol);

// Same fit for an arbitrary sampler with declared pole structure.
// `coeff_degree` is the boson degree assigned to the fitted coefficients.
LaurentDecomp fit_laurent_samples(const std::function<QOp(Complex)>& sampler,
                                  const SpaceSpec& space,
                                  const std::vector<Pole>& poles,
                                  int coeff_degree, double tol);

} // namespace gaudin
