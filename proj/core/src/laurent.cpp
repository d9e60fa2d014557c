// laurent.cpp — Exact Laurent fit of the generating function

#include "gaudin/laurent.hpp"

#include <cmath>
#include <numbers>

namespace gaudin {

namespace {

struct BasisFn {
    int poly_power = -1;     // ≥ 0 for λ^k terms
    Complex pole;            // valid when poly_power < 0
    int pole_order = 0;

    Complex operator()(Complex lambda) const {
        if (poly_power >= 0)
            return std::pow(lambda, poly_power);
        return std::pow(lambda - pole, -pole_order);
    }
};

// Sample points sit on circles centered at the pole centroid, with radii
// clear of the whole pole set.
Complex circle_point(Complex center, double radius, double angle) {
    return center + radius * Complex(std::cos(angle), std::sin(angle));
}

} // namespace

QOp LaurentDecomp::evaluate(Complex lambda) const {
    QOp sum = QOp::zero(poly.front().space());
    Complex power(1.0, 0.0);
    for (const QOp& coeff : poly) {
        sum = sum + power * coeff;
        power *= lambda;
    }
    for (const PoleTerm& term : pole_terms)
        sum = sum + std::pow(lambda - term.location, -term.order) * term.coeff;
    return sum;
}

const QOp* LaurentDecomp::pole_coeff(Complex location, int order, double loc_tol) const {
    for (const PoleTerm& term : pole_terms)
        if (term.order == order && std::abs(term.location - location) <= loc_tol)
            return &term.coeff;
    return nullptr;
}

LaurentDecomp fit_laurent_samples(const std::function<QOp(Complex)>& sampler,
                                  const SpaceSpec& space,
                                  const std::vector<Pole>& poles,
                                  int coeff_degree, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");

    std::vector<BasisFn> basis;
    for (int k = 0; k <= 2; ++k)
        basis.push_back({k, {}, 0});
    for (const Pole& p : poles)
        for (int order = 1; order <= 2; ++order)
            basis.push_back({-1, p.location, order});
    const int unknowns = static_cast<int>(basis.size());

    Complex center(0.0, 0.0);
    double spread = 0.0;
    if (!poles.empty()) {
        for (const Pole& p : poles)
            center += p.location;
        center /= static_cast<double>(poles.size());
        for (const Pole& p : poles)
            spread = std::max(spread, std::abs(p.location - center));
    }

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double inner = spread + 0.75;
    const double outer = spread + 1.75;

    std::vector<Complex> points;
    points.reserve(unknowns);
    for (int i = 0; i < unknowns; ++i) {
        const double radius = (i % 2 == 0) ? inner : outer;
        points.push_back(circle_point(center, radius, two_pi * i / unknowns + 0.37));
    }

    const Eigen::Index dim = space.dim();

    Matrix vandermonde(unknowns, unknowns);
    Matrix samples(unknowns, dim * dim);
    for (int i = 0; i < unknowns; ++i) {
        for (int k = 0; k < unknowns; ++k)
            vandermonde(i, k) = basis[k](points[i]);
        samples.row(i) = sampler(points[i]).matrix().reshaped().transpose();
    }

    const Eigen::JacobiSVD<Matrix> svd(vandermonde);
    const double condition = svd.singularValues()(0) /
                             svd.singularValues()(svd.singularValues().size() - 1);
    if (!(condition < 1e10))
        throw IllConditioned("Laurent sample matrix condition " + std::to_string(condition));

    const Matrix coeffs = vandermonde.partialPivLu().solve(samples);

    LaurentDecomp decomp;
    for (int k = 0; k < unknowns; ++k) {
        const Matrix m = coeffs.row(k).transpose().reshaped(dim, dim);
        QOp coeff(space, m, coeff_degree);
        if (basis[k].poly_power >= 0)
            decomp.poly.push_back(std::move(coeff));
        else
            decomp.pole_terms.push_back({basis[k].pole, basis[k].pole_order, std::move(coeff)});
    }

    // Held-out validation on a third circle.
    const double mid = spread + 1.25;
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
        const Complex held = circle_point(center, mid, two_pi * k / 3.0 + 0.81);
        const QOp expected = sampler(held);
        worst = std::max(worst, guarded_equal(decomp.evaluate(held), expected, tol).residual);
    }
    decomp.fit_residual = worst;
    if (worst > tol)
        throw FitRejected("Laurent fit held-out residual " + std::to_string(worst), worst);

    return decomp;
}

LaurentDecomp laurent_fit(const LaxFamily& family, double tol) {
    if (family.space().n_max() < 6)
        throw GuardExhausted("Laurent fitting needs n_max >= 6");
    auto sampler = [&family](Complex lambda) {
        return generating_function(family, lambda);
    };
    return fit_laurent_samples(sampler, family.space(), family.poles(),
                               2 * family.degree_bound(), tol);
}

} // namespace gaudin
