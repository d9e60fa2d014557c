// lax.hpp — Rational r-matrix, Lax families, and the integrability checks

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaudin/aux_matrix.hpp"
#include "gaudin/hilbert.hpp"

namespace gaudin {

// Evaluations closer than this to a declared pole raise PoleCollision.
inline constexpr double kPoleExclusion = 1e-3;

struct Pole {
    Complex location;
    int order = 2;
};

// Family λ → L(λ) = [[A, B], [C, -A]] with operator-valued entries.
class LaxFamily {
public:
    using EntryFn = std::function<QOp(Complex)>;

    LaxFamily(SpaceSpec space, EntryFn a, EntryFn b, EntryFn c,
              std::vector<Pole> poles, int degree_bound);

    const SpaceSpec& space() const { return space_; }
    const std::vector<Pole>& poles() const { return poles_; }
    int degree_bound() const { return degree_bound_; }

    // Entry evaluation; throws PoleCollision inside the exclusion radius.
    QOp entry_a(Complex lambda) const;
    QOp entry_b(Complex lambda) const;
    QOp entry_c(Complex lambda) const;

    // Full 2×2 aux matrix at λ.
    AuxMatrix evaluate(Complex lambda) const;

    double pole_distance(Complex lambda) const;
    void require_off_pole(Complex lambda) const;

private:
    SpaceSpec space_;
    EntryFn a_, b_, c_;
    std::vector<Pole> poles_;
    int degree_bound_;
};

struct IdentityReport {
    std::string check;
    std::vector<Complex> points;
    double residual = 0.0;
    double tolerance = 0.0;
    int guard = 0;
    bool pass = false;
};

// The 4×4 permutation matrix P(u⊗v) = v⊗u.
Eigen::Matrix4cd permutation_matrix();

// Rational r-matrix r(λ) = P/λ.
Eigen::Matrix4cd rational_r(Complex lambda);

using RMatrixFn = std::function<Eigen::Matrix4cd(Complex)>;

// [r12,r13] + [r12,r23] + [r13,r23] on C²⊗C²⊗C², with r_ij = r(λ_i - λ_j).
// The residual is the max |entry| of the 8×8 sum.
IdentityReport check_cybe(Complex l1, Complex l2, Complex l3, double tol,
                          const RMatrixFn& r = rational_r);

// [L(λ)⊗1, 1⊗L(μ)] + [r(λ-μ), L(λ)⊗1 + 1⊗L(μ)] = 0, guarded at
// 2·degree_bound over all 16 entries.
IdentityReport check_fundamental_identity(const LaxFamily& family,
                                          Complex lambda, Complex mu, double tol);

// The six loop-algebra relations between A, B, C at a pair of points:
// [B(λ),C(μ)] = 2(A(λ)-A(μ))/(λ-μ), [A(λ),B(μ)] = (B(λ)-B(μ))/(λ-μ),
// [A(λ),C(μ)] = -(C(λ)-C(μ))/(λ-μ), and the three vanishing same-letter
// commutators. Reports the worst residual.
IdentityReport check_gaudin_relations(const LaxFamily& family,
                                      Complex lambda, Complex mu, double tol);

// τ(λ) = A² + (BC + CB)/2; cross-checked internally against ½Tr L²(λ).
QOp generating_function(const LaxFamily& family, Complex lambda);

// Guarded residual of [τ(λ), τ(μ)] at guard 4·degree_bound.
IdentityReport check_generating_commutativity(const LaxFamily& family,
                                              Complex lambda, Complex mu, double tol);

} // namespace gaudin
