// lax.cpp — Integrability checks over Lax families

#include "gaudin/lax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace gaudin {

namespace {

void require_separated(Complex lambda, Complex mu) {
    if (std::abs(lambda - mu) < kPoleExclusion)
        throw PoleCollision("spectral parameters coincide");
}

// Verification runs need headroom above the guard line.
void require_headroom(const LaxFamily& family, int guard) {
    const int n_max = family.space().n_max();
    if (n_max < 4 || n_max < guard + 2)
        throw GuardExhausted("boson cutoff " + std::to_string(n_max) +
                             " too small for guard " + std::to_string(guard));
}

double zero_residual(const QOp& lhs, const QOp& rhs, int guard) {
    const double scale = std::max({1.0, guarded_max_abs(lhs, guard),
                                   guarded_max_abs(rhs, guard)});
    return guarded_max_abs(lhs - rhs, guard) / scale;
}

} // namespace

LaxFamily::LaxFamily(SpaceSpec space, EntryFn a, EntryFn b, EntryFn c,
                     std::vector<Pole> poles, int degree_bound)
    : space_(std::move(space)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      poles_(std::move(poles)), degree_bound_(degree_bound) {}

double LaxFamily::pole_distance(Complex lambda) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Pole& p : poles_)
        d = std::min(d, std::abs(lambda - p.location));
    return d;
}

void LaxFamily::require_off_pole(Complex lambda) const {
    if (pole_distance(lambda) < kPoleExclusion)
        throw PoleCollision("evaluation point inside the pole exclusion radius");
}

QOp LaxFamily::entry_a(Complex lambda) const {
    require_off_pole(lambda);
    return a_(lambda);
}

QOp LaxFamily::entry_b(Complex lambda) const {
    require_off_pole(lambda);
    return b_(lambda);
}

QOp LaxFamily::entry_c(Complex lambda) const {
    require_off_pole(lambda);
    return c_(lambda);
}

AuxMatrix LaxFamily::evaluate(Complex lambda) const {
    require_off_pole(lambda);
    AuxMatrix l(space_, 2);
    l.at(0, 0) = a_(lambda);
    l.at(0, 1) = b_(lambda);
    l.at(1, 0) = c_(lambda);
    l.at(1, 1) = -l.at(0, 0);
    return l;
}

Eigen::Matrix4cd permutation_matrix() {
    Eigen::Matrix4cd p = Eigen::Matrix4cd::Zero();
    p(0, 0) = 1.0;
    p(1, 2) = 1.0;
    p(2, 1) = 1.0;
    p(3, 3) = 1.0;
    return p;
}

Eigen::Matrix4cd rational_r(Complex lambda) {
    if (std::abs(lambda) < kPoleExclusion)
        throw PoleCollision("rational r-matrix evaluated at its pole");
    return permutation_matrix() / lambda;
}

IdentityReport check_cybe(Complex l1, Complex l2, Complex l3, double tol,
                          const RMatrixFn& r) {
    using Mat8 = Eigen::Matrix<Complex, 8, 8>;
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();

    auto kron_2x4 = [](const Eigen::Matrix2cd& x, const Eigen::Matrix4cd& y) {
        Mat8 out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.block<4, 4>(4 * i, 4 * j) = x(i, j) * y;
        return out;
    };
    auto kron_4x2 = [](const Eigen::Matrix4cd& x, const Eigen::Matrix2cd& y) {
        Mat8 out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
        return out;
    };

    require_separated(l1, l2);
    require_separated(l2, l3);
    require_separated(l1, l3);

    const Mat8 r12 = kron_4x2(r(l1 - l2), id2);
    const Mat8 r23 = kron_2x4(id2, r(l2 - l3));
    const Mat8 swap23 = kron_2x4(id2, permutation_matrix());
    const Mat8 r13 = swap23 * kron_4x2(r(l1 - l3), id2) * swap23;

    auto comm = [](const Mat8& x, const Mat8& y) { return Mat8(x * y - y * x); };
    const Mat8 sum = comm(r12, r13) + comm(r12, r23) + comm(r13, r23);
    const double residual = sum.cwiseAbs().maxCoeff();

    return {"cybe", {l1, l2, l3}, residual, tol, 0, residual <= tol};
}

IdentityReport check_fundamental_identity(const LaxFamily& family,
                                          Complex lambda, Complex mu, double tol) {
    const int guard = 2 * family.degree_bound();
    require_headroom(family, guard);
    require_separated(lambda, mu);

    const AuxMatrix l1 = on_first_slot(family.evaluate(lambda));
    const AuxMatrix l2 = on_second_slot(family.evaluate(mu));
    const AuxMatrix r = AuxMatrix::lift(rational_r(lambda - mu), family.space());

    const AuxMatrix term1 = commutator(l1, l2);
    const AuxMatrix term2 = commutator(r, l1 + l2);

    const double scale = std::max({1.0, guarded_max_abs(term1, guard),
                                   guarded_max_abs(term2, guard)});
    const double residual = guarded_max_abs(term1 + term2, guard) / scale;

    return {"fundamental_identity", {lambda, mu}, residual, tol, guard, residual <= tol};
}

IdentityReport check_gaudin_relations(const LaxFamily& family,
                                      Complex lambda, Complex mu, double tol) {
    const int guard = 2 * family.degree_bound();
    require_headroom(family, guard);
    require_separated(lambda, mu);

    const QOp al = family.entry_a(lambda), am = family.entry_a(mu);
    const QOp bl = family.entry_b(lambda), bm = family.entry_b(mu);
    const QOp cl = family.entry_c(lambda), cm = family.entry_c(mu);
    const Complex inv = 1.0 / (lambda - mu);
    const QOp zero = QOp::zero(family.space());

    double residual = 0.0;
    auto relation = [&](const QOp& lhs, const QOp& rhs) {
        residual = std::max(residual, zero_residual(lhs, rhs, guard));
    };

    relation(commutator(bl, cm), 2.0 * inv * (al - am));
    relation(commutator(al, bm), inv * (bl - bm));
    relation(commutator(al, cm), -inv * (cl - cm));
    relation(commutator(al, am), zero);
    relation(commutator(bl, bm), zero);
    relation(commutator(cl, cm), zero);

    return {"gaudin_relations", {lambda, mu}, residual, tol, guard, residual <= tol};
}

QOp generating_function(const LaxFamily& family, Complex lambda) {
    const QOp a = family.entry_a(lambda);
    const QOp b = family.entry_b(lambda);
    const QOp c = family.entry_c(lambda);
    const QOp direct = a * a + 0.5 * anticommutator(b, c);

    // ½Tr L² must reproduce the same operator; cross-check both routes.
    const AuxMatrix l = family.evaluate(lambda);
    const QOp traced = 0.5 * (l * l).trace();
    if (!guarded_equal(direct, traced, 1e-12).pass)
        throw Error("generating-function routes disagree");

    return direct;
}

IdentityReport check_generating_commutativity(const LaxFamily& family,
                                              Complex lambda, Complex mu, double tol) {
    const int guard = 4 * family.degree_bound();
    require_headroom(family, guard);
    require_separated(lambda, mu);

    const QOp tl = generating_function(family, lambda);
    const QOp tm = generating_function(family, mu);
    const QOp fwd = tl * tm;
    const QOp rev = tm * tl;

    const double scale = std::max({1.0, guarded_max_abs(fwd, guard),
                                   guarded_max_abs(rev, guard)});
    const double residual = guarded_max_abs(fwd - rev, guard) / scale;

    return {"generating_commutativity", {lambda, mu}, residual, tol, guard, residual <= tol};
}

} // namespace gaudin
