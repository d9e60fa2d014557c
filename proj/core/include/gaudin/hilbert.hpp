// hilbert.hpp — Truncated boson ⊗ spin spaces, operator matrices, guarded equality

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gaudin/errors.hpp"

namespace gaudin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Truncated composite Hilbert space: Fock states |0..n_max⟩ tensored with a
// list of spin-s sites. Basis ordering is row-major with the boson index
// slowest, so basis index = n * spin_dim + spin_index.
class SpaceSpec {
public:
    // `spins` are the site magnitudes s_j (0.5, 1, 1.5, ...).
    explicit SpaceSpec(int n_max, const std::vector<double>& spins = {});

    int n_max() const { return n_max_; }
    const std::vector<int>& site_two_s() const { return two_s_; }
    std::size_t site_count() const { return two_s_.size(); }
    double spin_of(std::size_t site) const { return 0.5 * two_s_[site]; }

    Eigen::Index boson_dim() const { return n_max_ + 1; }
    Eigen::Index spin_dim() const { return spin_dim_; }
    Eigen::Index dim() const { return boson_dim() * spin_dim_; }

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

private:
    int n_max_ = 0;
    std::vector<int> two_s_;      // 2*s per site, kept integral
    Eigen::Index spin_dim_ = 1;
};

// Dense operator on a SpaceSpec. `degree` is an upper bound on the net
// boson-ladder count of the expression that produced the matrix; guarded
// comparisons use it to stay clear of truncation artifacts.
class QOp {
public:
    QOp(SpaceSpec space, Matrix matrix, int degree);

    static QOp zero(const SpaceSpec& space);
    static QOp identity(const SpaceSpec& space);
    static QOp scalar(const SpaceSpec& space, Complex value);

    const SpaceSpec& space() const { return space_; }
    const Matrix& matrix() const { return matrix_; }
    int degree() const { return degree_; }

    QOp adjoint() const;

    friend QOp operator+(const QOp& x, const QOp& y);
    friend QOp operator-(const QOp& x, const QOp& y);
    friend QOp operator-(const QOp& x);
    friend QOp operator*(const QOp& x, const QOp& y);
    friend QOp operator*(Complex c, const QOp& x);
    friend QOp operator*(double c, const QOp& x);
    friend QOp operator*(const QOp& x, Complex c) { return c * x; }
    friend QOp operator*(const QOp& x, double c) { return c * x; }

private:
    SpaceSpec space_;
    Matrix matrix_;
    int degree_ = 0;
};

QOp commutator(const QOp& x, const QOp& y);
QOp anticommutator(const QOp& x, const QOp& y);

// Elementary operators embedded on the full space. Boson ladders carry
// degree 1, spins degree 0. Collective spins are sums over sites and satisfy
// [S^+, S^-] = 2 S^z, [S^z, S^±] = ±S^±.
struct OperatorSet {
    QOp a;
    QOp a_dag;
    QOp id;
    std::vector<QOp> sz_site;
    std::vector<QOp> sp_site;
    std::vector<QOp> sm_site;
    QOp sz;
    QOp sp;
    QOp sm;
};

OperatorSet make_operators(const SpaceSpec& space);

struct GuardedComparison {
    bool pass = false;
    double residual = 0.0;
    int guard = 0;
};

// Compares X and Y on the basis block whose boson occupation stays at least
// max(degree X, degree Y) below the cutoff on both sides, so truncation
// cannot have altered any compared element. The residual is relative to the
// largest guarded element of X and Y (floored at 1).
GuardedComparison guarded_equal(const QOp& x, const QOp& y, double tol);

// Max |element| over the guarded block. Throws GuardExhausted when the guard
// consumes the whole cutoff.
double guarded_max_abs(const QOp& x, int guard);

} // namespace gaudin
