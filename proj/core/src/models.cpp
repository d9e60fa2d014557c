// models.cpp — Representations of the loop algebra and their charges

#include "gaudin/models.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace gaudin {

namespace {

void require_spin_sites(const SpaceSpec& space) {
    if (space.site_count() == 0)
        throw std::invalid_argument("representation requires at least one spin site");
}

void require_distinct(const std::vector<Complex>& epsilons) {
    for (std::size_t i = 0; i < epsilons.size(); ++i)
        for (std::size_t j = i + 1; j < epsilons.size(); ++j)
            if (std::abs(epsilons[i] - epsilons[j]) < kPoleExclusion)
                throw DuplicateEpsilon("inhomogeneity locations must be pairwise distinct");
}

} // namespace

TCParams::TCParams(double omega_, double delta_, double g_)
    : omega(omega_), delta(delta_), g(g_) {
    if (!(omega > 0.0))
        throw std::invalid_argument("omega must be positive");
    if (g == 0.0)
        throw std::invalid_argument("g must be nonzero");
}

GenRepParams::GenRepParams(Complex alpha1_, Complex alpha2_, Complex beta1_,
                           Complex beta2_, Complex rho_, Complex gamma_)
    : alpha1(alpha1_), alpha2(alpha2_), beta1(beta1_), beta2(beta2_),
      rho(rho_), gamma(gamma_) {
    if (gamma == Complex(0.0, 0.0))
        throw std::invalid_argument("gamma must be nonzero");
}

InhomSpec::InhomSpec(std::variant<TCParams, GenRepParams> base_,
                     std::vector<Complex> epsilons_)
    : base(std::move(base_)), epsilons(std::move(epsilons_)) {
    require_distinct(epsilons);
}

LaxFamily tc_representation(const SpaceSpec& space, const TCParams& p) {
    require_spin_sites(space);
    const auto ops = std::make_shared<const OperatorSet>(make_operators(space));
    const double g2 = p.g * p.g;
    const double omega = p.omega, delta = p.delta, g = p.g;

    auto a = [ops, g2, omega, delta](Complex l) {
        return QOp::scalar(ops->id.space(), (2.0 * l - omega) / g2) +
               (1.0 / (l - delta)) * ops->sz;
    };
    auto b = [ops, g, delta](Complex l) {
        return (2.0 / g) * ops->a + (1.0 / (l - delta)) * ops->sm;
    };
    auto c = [ops, g, delta](Complex l) {
        return (2.0 / g) * ops->a_dag + (1.0 / (l - delta)) * ops->sp;
    };
    return LaxFamily(space, a, b, c, {{Complex(delta, 0.0), 2}}, 1);
}

LaxFamily gen_representation(const SpaceSpec& space, const GenRepParams& p) {
    require_spin_sites(space);
    const auto ops = std::make_shared<const OperatorSet>(make_operators(space));
    const Complex det = p.det();

    auto a = [ops, det, rho = p.rho](Complex l) {
        return QOp::scalar(ops->id.space(), 0.5 * det * l + rho) + (1.0 / l) * ops->sz;
    };
    auto b = [ops, a1 = p.alpha1, b1 = p.beta1, gamma = p.gamma](Complex l) {
        return a1 * ops->a + b1 * ops->a_dag + (gamma / l) * ops->sm;
    };
    auto c = [ops, a2 = p.alpha2, b2 = p.beta2, gamma = p.gamma](Complex l) {
        return b2 * ops->a + a2 * ops->a_dag + (1.0 / (gamma * l)) * ops->sp;
    };
    return LaxFamily(space, a, b, c, {{Complex(0.0, 0.0), 2}}, 1);
}

LaxFamily inhom_representation(const SpaceSpec& space, const InhomSpec& spec) {
    require_spin_sites(space);
    if (spec.epsilons.size() != space.site_count())
        throw std::invalid_argument("one epsilon per spin site is required");

    const auto ops = std::make_shared<const OperatorSet>(make_operators(space));
    const auto eps = spec.epsilons;

    // Σ_j op_j/(λ-ε_j) over per-site spin operators.
    auto site_sum = [ops, eps](const std::vector<QOp>& site_ops, Complex l) {
        QOp sum = QOp::zero(site_ops.front().space());
        for (std::size_t j = 0; j < site_ops.size(); ++j)
            sum = sum + (1.0 / (l - eps[j])) * site_ops[j];
        return sum;
    };

    std::vector<Pole> poles;
    poles.reserve(eps.size());
    for (Complex e : eps)
        poles.push_back({e, 2});

    if (const auto* tc = std::get_if<TCParams>(&spec.base)) {
        const double g2 = tc->g * tc->g;
        const double omega = tc->omega, g = tc->g;
        auto a = [ops, site_sum, g2, omega](Complex l) {
            return QOp::scalar(ops->id.space(), (2.0 * l - omega) / g2) +
                   site_sum(ops->sz_site, l);
        };
        auto b = [ops, site_sum, g](Complex l) {
            return (2.0 / g) * ops->a + site_sum(ops->sm_site, l);
        };
        auto c = [ops, site_sum, g](Complex l) {
            return (2.0 / g) * ops->a_dag + site_sum(ops->sp_site, l);
        };
        return LaxFamily(space, a, b, c, std::move(poles), 1);
    }

    const auto& p = std::get<GenRepParams>(spec.base);
    const Complex det = p.det();
    auto a = [ops, site_sum, det, rho = p.rho](Complex l) {
        return QOp::scalar(ops->id.space(), 0.5 * det * l + rho) + site_sum(ops->sz_site, l);
    };
    auto b = [ops, site_sum, a1 = p.alpha1, b1 = p.beta1, gamma = p.gamma](Complex l) {
        return a1 * ops->a + b1 * ops->a_dag + gamma * site_sum(ops->sm_site, l);
    };
    auto c = [ops, site_sum, a2 = p.alpha2, b2 = p.beta2, gamma = p.gamma](Complex l) {
        return b2 * ops->a + a2 * ops->a_dag + (1.0 / gamma) * site_sum(ops->sp_site, l);
    };
    return LaxFamily(space, a, b, c, std::move(poles), 1);
}

ChargeSet closed_form_charges(const SpaceSpec& space, const GenRepParams& p) {
    require_spin_sites(space);
    const OperatorSet ops = make_operators(space);
    const Complex det = p.det();
    const Complex plus = p.alpha1 * p.alpha2 + p.beta1 * p.beta2;

    const QOp h0 = QOp::scalar(space, 0.5 * (plus + 2.0 * p.rho * p.rho)) +
                   plus * (ops.a_dag * ops.a) +
                   (p.alpha2 * p.beta1) * (ops.a_dag * ops.a_dag) +
                   (p.alpha1 * p.beta2) * (ops.a * ops.a) +
                   det * ops.sz;

    const QOp h1 = (p.alpha2 * p.gamma) * (ops.a_dag * ops.sm) +
                   (p.beta1 / p.gamma) * (ops.a_dag * ops.sp) +
                   (p.alpha1 / p.gamma) * (ops.a * ops.sp) +
                   (p.beta2 * p.gamma) * (ops.a * ops.sm) +
                   2.0 * p.rho * ops.sz;

    const QOp c2 = ops.sz * ops.sz + 0.5 * anticommutator(ops.sp, ops.sm);

    return {h0, h1, c2, 0.25 * det * det, p.rho * det};
}

QOp physical_hamiltonian(const QOp& h0, const QOp& h1, Complex kappa) {
    if (!(h0.space() == h1.space()))
        throw SpaceMismatch("H0 and H1 live on different spaces");
    return h0 + kappa * h1;
}

BogoliubovMatrix bogoliubov_matrix(const GenRepParams& p) {
    BogoliubovMatrix out;
    out.matrix << p.alpha1, p.beta1, p.beta2, p.alpha2;
    out.det = p.det();
    out.singular = std::abs(out.det) < 1e-12;
    return out;
}

bool is_hermitian(const QOp& h, double tol) {
    return guarded_equal(h, h.adjoint(), tol).pass;
}

QOp tc_hamiltonian(const SpaceSpec& space, const TCParams& p) {
    require_spin_sites(space);
    const OperatorSet ops = make_operators(space);
    return p.omega * (ops.a_dag * ops.a) + (2.0 * p.delta) * ops.sz +
           p.g * (ops.a * ops.sp + ops.a_dag * ops.sm);
}

QOp number_operator(const SpaceSpec& space) {
    const OperatorSet ops = make_operators(space);
    return ops.a_dag * ops.a + ops.sz;
}

TCParams random_tc_params(SampleRng& rng) {
    const double omega = rng.uniform(0.5, 2.0);
    const double delta = rng.uniform(-1.0, 1.0);
    double g = rng.uniform(0.3, 1.5);
    if (rng.uniform() < 0.5)
        g = -g;
    return TCParams(omega, delta, g);
}

GenRepParams random_gen_params(SampleRng& rng) {
    const Complex a1 = rng.in_disk(1.0);
    const Complex a2 = rng.in_disk(1.0);
    const Complex b1 = rng.in_disk(1.0);
    const Complex b2 = rng.in_disk(1.0);
    const Complex rho = rng.in_disk(1.0);
    Complex gamma = rng.in_disk(1.5);
    while (std::abs(gamma) < 0.5)
        gamma = rng.in_disk(1.5);
    return GenRepParams(a1, a2, b1, b2, rho, gamma);
}

HermitianDraw random_hermitian_draw(SampleRng& rng) {
    const Complex a1 = rng.in_disk(1.0);
    const Complex b1 = rng.in_disk(1.0);
    const double rho = rng.uniform(-1.0, 1.0);
    const double kappa = rng.uniform(-1.0, 1.0);
    return {GenRepParams(a1, std::conj(a1), b1, std::conj(b1),
                         Complex(rho, 0.0), Complex(1.0, 0.0)),
            kappa};
}

std::vector<Complex> random_epsilons(SampleRng& rng, std::size_t count) {
    return rng.spectral_points({}, static_cast<int>(count), 0.5, 1.2);
}

} // namespace gaudin
