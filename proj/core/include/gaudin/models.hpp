// models.hpp — Concrete Lax representations, closed-form charges, Hamiltonians

#pragma once

#include <variant>
#include <vector>

#include "gaudin/hilbert.hpp"
#include "gaudin/lax.hpp"
#include "gaudin/sampling.hpp"

namespace gaudin {

struct TCParams {
    TCParams(double omega, double delta, double g);
    double omega;   // mode frequency, > 0
    double delta;   // qubit gap
    double g;       // coupling, != 0
};

struct GenRepParams {
    GenRepParams(Complex alpha1, Complex alpha2, Complex beta1, Complex beta2,
                 Complex rho, Complex gamma);
    Complex alpha1, alpha2, beta1, beta2, rho, gamma;
    Complex det() const { return alpha1 * alpha2 - beta1 * beta2; }
};

// Per-site pole locations replacing the shared pole of a base representation.
struct InhomSpec {
    InhomSpec(std::variant<TCParams, GenRepParams> base, std::vector<Complex> epsilons);
    std::variant<TCParams, GenRepParams> base;
    std::vector<Complex> epsilons;
};

// A(λ) = (2λ-ω)/g² + S^z/(λ-Δ), B(λ) = 2a/g + S^-/(λ-Δ),
// C(λ) = 2a†/g + S^+/(λ-Δ); collective spins, pole of order 2 at Δ.
LaxFamily tc_representation(const SpaceSpec& space, const TCParams& p);

// A(λ) = [½(α1α2-β1β2)λ + ρ] + S^z/λ, B(λ) = α1 a + β1 a† + (γ/λ)S^-,
// C(λ) = β2 a + α2 a† + S^+/(γλ); pole of order 2 at 0.
LaxFamily gen_representation(const SpaceSpec& space, const GenRepParams& p);

// Shared-pole spin terms replaced by per-site sums Σ_j S^{±,z}_j/(λ-ε_j).
LaxFamily inhom_representation(const SpaceSpec& space, const InhomSpec& spec);

// Laurent coefficients of τ(λ) for the generalized representation, in closed
// form: τ = ¼λ²det² + ρλ·det + H0 + H1/λ + C2/λ².
struct ChargeSet {
    QOp H0;
    QOp H1;
    QOp C2;
    Complex lambda2_coeff;   // ¼ det²
    Complex lambda1_coeff;   // ρ det
};

ChargeSet closed_form_charges(const SpaceSpec& space, const GenRepParams& p);

// H0 + κ H1.
QOp physical_hamiltonian(const QOp& h0, const QOp& h1, Complex kappa);

// The boson-mixing matrix [[α1, β1], [β2, α2]] defining ã = α1 a + β1 a†,
// ã† = β2 a + α2 a†; canonical when the determinant is 1.
struct BogoliubovMatrix {
    Eigen::Matrix2cd matrix;
    Complex det;
    bool singular = false;
};

BogoliubovMatrix bogoliubov_matrix(const GenRepParams& p);

// Guarded comparison of H against its adjoint.
bool is_hermitian(const QOp& h, double tol);

// Reference Hamiltonians: H_TC = ω a†a + 2Δ S^z + g(a S^+ + a† S^-) and the
// excitation number H_N = a†a + S^z.
QOp tc_hamiltonian(const SpaceSpec& space, const TCParams& p);
QOp number_operator(const SpaceSpec& space);

// Seeded parameter draws used by the verification suites.
TCParams random_tc_params(SampleRng& rng);
GenRepParams random_gen_params(SampleRng& rng);

struct HermitianDraw {
    GenRepParams params;
    double kappa;
};

// Constrained family α2 = conj(α1), β2 = conj(β1), γ = 1, ρ and κ real,
// which makes H0 + κH1 Hermitian.
HermitianDraw random_hermitian_draw(SampleRng& rng);

// Pairwise-separated inhomogeneity locations.
std::vector<Complex> random_epsilons(SampleRng& rng, std::size_t count);

} // namespace gaudin
