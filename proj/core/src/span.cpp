#include "terj/span.hpp"

#include <algorithm>
#include <deque>

#include "terj/errors.hpp"

namespace terj {

std::pair<Matrix, std::vector<int>> rref(Matrix m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m(i, c).is_zero()) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
        }
        const Rational scale = m(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m(r, j) *= scale;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<Vec> eigenspace_basis(const Matrix& m, const Rational& lambda) {
    if (!m.is_square()) throw ShapeMismatch("eigenspace of non-square matrix");
    const int n = m.rows();
    Matrix k = m;
    for (int i = 0; i < n; ++i) k(i, i) -= lambda;
    auto [red, pivots] = rref(std::move(k));

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(static_cast<std::size_t>(n));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanBasis::SpanBasis(int ambient_dim) : ambient_(ambient_dim) {
    if (ambient_dim < 0) throw OutOfRange("negative ambient dimension");
}

bool SpanBasis::insert(Vec v, Vec* residual) {
    if (static_cast<int>(v.size()) != ambient_)
        throw ShapeMismatch("vector length does not match ambient dimension");

    // One reduction pass suffices: rows are in reduced form, so clearing the
    // pivot coordinate of row i can never reintroduce earlier pivots.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = v[pivots_[i]];
        if (c.is_zero()) continue;
        const Vec& row = rows_[i];
        for (int j = 0; j < ambient_; ++j) {
            if (!row[j].is_zero()) v[j] -= c * row[j];
        }
    }

    int pivot = -1;
    for (int j = 0; j < ambient_; ++j) {
        if (!v[j].is_zero()) { pivot = j; break; }
    }
    if (pivot < 0) {
        if (residual) *residual = std::move(v);
        return false;
    }

    const Rational scale = v[pivot].inv();
    for (int j = pivot; j < ambient_; ++j) {
        if (!v[j].is_zero()) v[j] *= scale;
    }

    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Vec& row = rows_[i];
        const Rational c = row[pivot];
        if (c.is_zero()) continue;
        for (int j = pivot; j < ambient_; ++j) {
            if (!v[j].is_zero()) row[j] -= c * v[j];
        }
    }

    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    if (residual) *residual = v;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

bool SpanBasis::contains(Vec v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw ShapeMismatch("vector length does not match ambient dimension");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = v[pivots_[i]];
        if (c.is_zero()) continue;
        const Vec& row = rows_[i];
        for (int j = 0; j < ambient_; ++j) {
            if (!row[j].is_zero()) v[j] -= c * row[j];
        }
    }
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

SpanClosureResult span_closure(const std::vector<Matrix>& generators, bool include_identity) {
    if (generators.empty())
        throw ShapeMismatch("span closure needs at least one generator");
    const int n = generators.front().rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != n)
            throw ShapeMismatch("span closure generators must be square of equal size");
    }

    SpanBasis basis(n * n);
    std::deque<Vec> pending;
    auto offer = [&](const Matrix& m) {
        Vec res;
        if (basis.insert(m.flatten(), &res)) pending.push_back(std::move(res));
    };

    if (include_identity) offer(Matrix::identity(n));
    for (const auto& g : generators) offer(g);

    // Each pending vector is a snapshot of a normalized residual at insertion
    // time; the snapshots span the same subspace as the evolving basis, so
    // closing the snapshots under left multiplication closes the basis.
    while (!pending.empty()) {
        Vec w = std::move(pending.front());
        pending.pop_front();
        const Matrix wm = Matrix::unflatten(w, n, n);
        for (const auto& g : generators) offer(g * wm);
    }
    return {basis.rank(), std::move(basis)};
}

} // namespace terj
