#pragma once

#include <utility>
#include <vector>

#include "terj/matrix.hpp"

namespace terj {

/// Row-reduce M to reduced row echelon form (pivot = first nonzero column of
/// each surviving row; pivots scaled to 1 and fully eliminated above and
/// below). Returns the RREF together with the pivot column indices.
std::pair<Matrix, std::vector<int>> rref(Matrix m);

/// Basis of the eigenspace ker(M - lambda I) of a square matrix, as kernel
/// vectors built from the RREF free columns in ascending column order.
/// Returns an empty list when lambda is not an eigenvalue.
std::vector<Vec> eigenspace_basis(const Matrix& m, const Rational& lambda);

/// A subspace of Q^n maintained in canonical reduced row echelon form:
/// each stored vector has a leading 1 at its pivot coordinate, every other
/// stored vector vanishes at that coordinate, and vectors are sorted by
/// pivot. Two SpanBasis objects therefore represent the same subspace if and
/// only if they compare equal.
class SpanBasis {
public:
    SpanBasis() = default;
    explicit SpanBasis(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    const std::vector<Vec>& vectors() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduce v against the basis. If the residual is nonzero, normalize it,
    /// back-eliminate its pivot from the existing vectors, insert it in pivot
    /// order, and return true; otherwise return false. When `residual` is
    /// non-null it receives the reduced vector (normalized if inserted, zero
    /// if v was already in the span). Throws ShapeMismatch on wrong length.
    bool insert(Vec v, Vec* residual = nullptr);

    /// Whether v lies in the current span.
    bool contains(Vec v) const;

    friend bool operator==(const SpanBasis& a, const SpanBasis& b) = default;

private:
    int ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// Result of a multiplicative span closure.
struct SpanClosureResult {
    int dimension = 0;
    SpanBasis basis;
};

/// Smallest subspace of n x n matrices (flattened row-major into Q^{n*n})
/// that contains the generators (and the identity when include_identity is
/// true) and is closed under left multiplication by each generator. When the
/// generator set is closed under the operation this is the generated
/// (unital) matrix algebra. Throws ShapeMismatch unless all generators are
/// square of equal size.
SpanClosureResult span_closure(const std::vector<Matrix>& generators,
                               bool include_identity = true);

} // namespace terj
