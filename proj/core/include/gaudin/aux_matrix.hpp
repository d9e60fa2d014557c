// aux_matrix.hpp — Small auxiliary-space matrices with operator-valued entries

#pragma once

#include <vector>

#include "gaudin/hilbert.hpp"

namespace gaudin {

// n×n grid of QOp entries on one shared SpaceSpec (n = 2 for Lax matrices,
// 4 for tensor-square objects). Entry arithmetic is QOp arithmetic.
class AuxMatrix {
public:
    AuxMatrix(const SpaceSpec& space, int n);  // zero entries

    // Scalar n×n matrix lifted entrywise to scalar·identity.
    static AuxMatrix lift(const Matrix& scalar, const SpaceSpec& space);

    int size() const { return n_; }
    const SpaceSpec& space() const { return space_; }

    QOp& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const QOp& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    QOp trace() const;

    AuxMatrix operator+(const AuxMatrix& other) const;
    AuxMatrix operator-(const AuxMatrix& other) const;
    AuxMatrix operator*(const AuxMatrix& other) const;

private:
    SpaceSpec space_;
    int n_;
    std::vector<QOp> entries_;
};

AuxMatrix commutator(const AuxMatrix& x, const AuxMatrix& y);

// Embeddings of a 2×2 aux matrix into the 4×4 tensor square:
// on_first_slot(L)  = L ⊗ 1,  on_second_slot(L) = 1 ⊗ L.
AuxMatrix on_first_slot(const AuxMatrix& m);
AuxMatrix on_second_slot(const AuxMatrix& m);

// Worst guarded_max_abs over all entries.
double guarded_max_abs(const AuxMatrix& m, int guard);

} // namespace gaudin
