// aux_matrix.cpp — Operator-valued auxiliary-space arithmetic

#include "gaudin/aux_matrix.hpp"

#include <stdexcept>

namespace gaudin {

namespace {

void require_compatible(const AuxMatrix& x, const AuxMatrix& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("aux dimensions differ");
    if (!(x.space() == y.space()))
        throw SpaceMismatch("aux matrices live on different spaces");
}

} // namespace

AuxMatrix::AuxMatrix(const SpaceSpec& space, int n)
    : space_(space), n_(n), entries_(static_cast<std::size_t>(n) * n, QOp::zero(space)) {
    if (n <= 0)
        throw std::invalid_argument("aux dimension must be positive");
}

AuxMatrix AuxMatrix::lift(const Matrix& scalar, const SpaceSpec& space) {
    if (scalar.rows() != scalar.cols())
        throw std::invalid_argument("lift requires a square matrix");
    AuxMatrix out(space, static_cast<int>(scalar.rows()));
    for (int i = 0; i < out.n_; ++i)
        for (int j = 0; j < out.n_; ++j)
            out.at(i, j) = QOp::scalar(space, scalar(i, j));
    return out;
}

QOp AuxMatrix::trace() const {
    QOp sum = QOp::zero(space_);
    for (int i = 0; i < n_; ++i)
        sum = sum + at(i, i);
    return sum;
}

AuxMatrix AuxMatrix::operator+(const AuxMatrix& other) const {
    require_compatible(*this, other);
    AuxMatrix out(space_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.at(i, j) = at(i, j) + other.at(i, j);
    return out;
}

AuxMatrix AuxMatrix::operator-(const AuxMatrix& other) const {
    require_compatible(*this, other);
    AuxMatrix out(space_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.at(i, j) = at(i, j) - other.at(i, j);
    return out;
}

AuxMatrix AuxMatrix::operator*(const AuxMatrix& other) const {
    require_compatible(*this, other);
    AuxMatrix out(space_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            QOp sum = QOp::zero(space_);
            for (int m = 0; m < n_; ++m)
                sum = sum + at(i, m) * other.at(m, j);
            out.at(i, j) = sum;
        }
    return out;
}

AuxMatrix commutator(const AuxMatrix& x, const AuxMatrix& y) {
    return x * y - y * x;
}

AuxMatrix on_first_slot(const AuxMatrix& m) {
    const int n = m.size();
    AuxMatrix out(m.space(), n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.at(i * n + k, j * n + k) = m.at(i, j);
    return out;
}

AuxMatrix on_second_slot(const AuxMatrix& m) {
    const int n = m.size();
    AuxMatrix out(m.space(), n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                out.at(i * n + k, i * n + l) = m.at(k, l);
    return out;
}

double guarded_max_abs(const AuxMatrix& m, int guard) {
    double worst = 0.0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            worst = std::max(worst, guarded_max_abs(m.at(i, j), guard));
    return worst;
}

} // namespace gaudin
