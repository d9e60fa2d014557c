// hilbert.cpp — Space construction, operator embedding, guarded comparison

#include "gaudin/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace gaudin {

namespace {

Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

void require_same_space(const QOp& x, const QOp& y) {
    if (!(x.space() == y.space()))
        throw SpaceMismatch("operands live on different spaces");
}

// Guarded block spans boson occupations 0..n_max-guard (all spin indices).
Eigen::Index guarded_block(const SpaceSpec& space, int guard) {
    if (space.n_max() - guard < 0)
        throw GuardExhausted("guard " + std::to_string(guard) +
                             " exceeds boson cutoff " + std::to_string(space.n_max()));
    return (space.n_max() - guard + 1) * space.spin_dim();
}

} // namespace

SpaceSpec::SpaceSpec(int n_max, const std::vector<double>& spins) : n_max_(n_max) {
    if (n_max < 0)
        throw std::invalid_argument("n_max must be non-negative");
    two_s_.reserve(spins.size());
    spin_dim_ = 1;
    for (double s : spins) {
        const double t = 2.0 * s;
        const int two_s = static_cast<int>(std::lround(t));
        if (two_s < 1 || std::abs(t - two_s) > 1e-9)
            throw std::invalid_argument("spin magnitudes must be positive half-integers");
        two_s_.push_back(two_s);
        spin_dim_ *= two_s + 1;
    }
}

QOp::QOp(SpaceSpec space, Matrix matrix, int degree)
    : space_(std::move(space)), matrix_(std::move(matrix)), degree_(degree) {
    if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
        throw std::invalid_argument("matrix dimension does not match the space");
    if (degree_ < 0)
        throw std::invalid_argument("degree must be non-negative");
}

QOp QOp::zero(const SpaceSpec& space) {
    return QOp(space, Matrix::Zero(space.dim(), space.dim()), 0);
}

QOp QOp::identity(const SpaceSpec& space) {
    return QOp(space, Matrix::Identity(space.dim(), space.dim()), 0);
}

QOp QOp::scalar(const SpaceSpec& space, Complex value) {
    return QOp(space, value * Matrix::Identity(space.dim(), space.dim()), 0);
}

QOp QOp::adjoint() const {
    return QOp(space_, matrix_.adjoint(), degree_);
}

QOp operator+(const QOp& x, const QOp& y) {
    require_same_space(x, y);
    return QOp(x.space_, x.matrix_ + y.matrix_, std::max(x.degree_, y.degree_));
}

QOp operator-(const QOp& x, const QOp& y) {
    require_same_space(x, y);
    return QOp(x.space_, x.matrix_ - y.matrix_, std::max(x.degree_, y.degree_));
}

QOp operator-(const QOp& x) {
    return QOp(x.space_, -x.matrix_, x.degree_);
}

QOp operator*(const QOp& x, const QOp& y) {
    require_same_space(x, y);
    return QOp(x.space_, x.matrix_ * y.matrix_, x.degree_ + y.degree_);
}

QOp operator*(Complex c, const QOp& x) {
    return QOp(x.space_, c * x.matrix_, x.degree_);
}

QOp operator*(double c, const QOp& x) {
    return Complex(c, 0.0) * x;
}

QOp commutator(const QOp& x, const QOp& y) {
    return x * y - y * x;
}

QOp anticommutator(const QOp& x, const QOp& y) {
    return x * y + y * x;
}

OperatorSet make_operators(const SpaceSpec& space) {
    const Eigen::Index bd = space.boson_dim();

    Matrix lower = Matrix::Zero(bd, bd);   // ⟨n-1|a|n⟩ = √n
    for (Eigen::Index n = 1; n < bd; ++n)
        lower(n - 1, n) = std::sqrt(static_cast<double>(n));

    const std::size_t sites = space.site_count();
    std::vector<Matrix> site_sz(sites), site_sp(sites);
    for (std::size_t j = 0; j < sites; ++j) {
        const int two_s = space.site_two_s()[j];
        const double s = 0.5 * two_s;
        const Eigen::Index d = two_s + 1;
        Matrix sz = Matrix::Zero(d, d);
        Matrix sp = Matrix::Zero(d, d);
        // local basis ordered m = s, s-1, ..., -s
        for (Eigen::Index k = 0; k < d; ++k)
            sz(k, k) = s - static_cast<double>(k);
        for (Eigen::Index k = 1; k < d; ++k) {
            const double m = s - static_cast<double>(k);
            sp(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
        }
        site_sz[j] = sz;
        site_sp[j] = sp;
    }

    auto embed_spin = [&](std::size_t site, const Matrix& local) {
        Matrix m = Matrix::Identity(1, 1);
        for (std::size_t j = 0; j < sites; ++j) {
            const Eigen::Index d = space.site_two_s()[j] + 1;
            m = kron(m, j == site ? local : Matrix::Identity(d, d));
        }
        return kron(Matrix::Identity(bd, bd), m);
    };

    const Matrix spin_id = Matrix::Identity(space.spin_dim(), space.spin_dim());

    OperatorSet ops{
        QOp(space, kron(lower, spin_id), 1),
        QOp(space, kron(Matrix(lower.adjoint()), spin_id), 1),
        QOp::identity(space),
        {}, {}, {},
        QOp::zero(space), QOp::zero(space), QOp::zero(space),
    };

    for (std::size_t j = 0; j < sites; ++j) {
        ops.sz_site.emplace_back(space, embed_spin(j, site_sz[j]), 0);
        ops.sp_site.emplace_back(space, embed_spin(j, site_sp[j]), 0);
        ops.sm_site.emplace_back(space, embed_spin(j, Matrix(site_sp[j].adjoint())), 0);
        ops.sz = ops.sz + ops.sz_site.back();
        ops.sp = ops.sp + ops.sp_site.back();
        ops.sm = ops.sm + ops.sm_site.back();
    }
    return ops;
}

GuardedComparison guarded_equal(const QOp& x, const QOp& y, double tol) {
    require_same_space(x, y);
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");

    const int guard = std::max(x.degree(), y.degree());
    const Eigen::Index block = guarded_block(x.space(), guard);

    const auto bx = x.matrix().topLeftCorner(block, block);
    const auto by = y.matrix().topLeftCorner(block, block);
    const double diff = (bx - by).cwiseAbs().maxCoeff();
    const double scale = std::max({1.0, bx.cwiseAbs().maxCoeff(), by.cwiseAbs().maxCoeff()});
    const double residual = diff / scale;
    return {residual <= tol, residual, guard};
}

double guarded_max_abs(const QOp& x, int guard) {
    const Eigen::Index block = guarded_block(x.space(), guard);
    return x.matrix().topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

} // namespace gaudin
