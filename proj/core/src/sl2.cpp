#include "terj/sl2.hpp"

#include <string>

#include "terj/errors.hpp"
#include "terj/span.hpp"

namespace terj {

Sl2Action build_Ln(int n) {
    if (n < 0) throw OutOfRange("build_Ln requires n >= 0");
    const int dim = n + 1;
    Sl2Action a;
    a.n = n;
    a.E = Matrix(dim, dim);
    a.F = Matrix(dim, dim);
    a.H = Matrix(dim, dim);
    for (int i = 0; i <= n; ++i) {
        a.H(i, i) = n - 2 * i;
        if (i >= 1) a.E(i - 1, i) = i;       // E v_i = i v_{i-1}
        if (i < n) a.F(i + 1, i) = n - i;    // F v_i = (n-i) v_{i+1}
    }
    return a;
}

Matrix casimir_matrix(const Matrix& e, const Matrix& f, const Matrix& h) {
    return e * f + f * e + (h * h) * Rational(1, 2);
}

TensorRep build_tensor_rep(int m, int n) {
    if (m < 0 || n < 0) throw OutOfRange("build_tensor_rep requires m, n >= 0");
    TensorRep t;
    t.m = m;
    t.n = n;
    t.left = build_Ln(m);
    t.right = build_Ln(n);
    const Matrix im = Matrix::identity(m + 1);
    const Matrix in = Matrix::identity(n + 1);
    const Matrix lm = casimir_matrix(t.left.E, t.left.F, t.left.H);
    const Matrix ln = casimir_matrix(t.right.E, t.right.F, t.right.H);

    t.E1 = kron(t.left.E, in);
    t.F1 = kron(t.left.F, in);
    t.H1 = kron(t.left.H, in);
    t.L1 = kron(lm, in);
    t.E2 = kron(im, t.right.E);
    t.F2 = kron(im, t.right.F);
    t.H2 = kron(im, t.right.H);
    t.L2 = kron(im, ln);

    t.dE = t.E1 + t.E2;
    t.dF = t.F1 + t.F2;
    t.dH = t.H1 + t.H2;
    t.dLambda = casimir_matrix(t.dE, t.dF, t.dH);

    // Independent expansion of the coproduct Casimir in terms of the factor
    // actions; disagreement would indicate a construction bug.
    const Matrix expansion = t.L1 + t.L2 + kron(t.left.H, t.right.H) +
                             Rational(2) * (kron(t.left.E, t.right.F) + kron(t.left.F, t.right.E));
    if (t.dLambda != expansion)
        throw Error("coproduct Casimir expansion mismatch on L_" + std::to_string(m) +
                    " (x) L_" + std::to_string(n));
    return t;
}

WeightSpace weight_space(const TensorRep& t, int ell) {
    if (ell < 0 || ell > t.m + t.n)
        throw OutOfRange("weight_space requires 0 <= ell <= m+n");
    WeightSpace w;
    w.ell = ell;
    w.weight = t.m + t.n - 2 * ell;
    for (int i = 0; i <= t.m; ++i) {
        const int j = ell - i;
        if (j < 0 || j > t.n) continue;
        w.indices.push_back(i * (t.n + 1) + j);
    }
    return w;
}

std::vector<CgSummand> clebsch_gordan_summands(const TensorRep& t) {
    std::vector<CgSummand> out;
    int total = 0;
    for (int p = 0; p <= std::min(t.m, t.n); ++p) {
        CgSummand s;
        s.p = p;
        s.weight = t.m + t.n - 2 * p;
        s.eigenvalue = Rational(static_cast<long>(s.weight) * (s.weight + 2), 2);
        const auto basis = eigenspace_basis(t.dLambda, s.eigenvalue);
        s.dim = static_cast<int>(basis.size());
        if (s.dim != s.weight + 1)
            throw Error("Casimir eigenspace for weight " + std::to_string(s.weight) +
                        " has dimension " + std::to_string(s.dim) + ", expected " +
                        std::to_string(s.weight + 1));
        total += s.dim;
        out.push_back(std::move(s));
    }
    if (total != (t.m + 1) * (t.n + 1))
        throw Error("Casimir eigenspaces do not exhaust the tensor module");
    return out;
}

Matrix restrict_to_coordinates(const Matrix& m, const std::vector<int>& indices) {
    if (!m.is_square()) throw ShapeMismatch("restriction of non-square matrix");
    std::vector<bool> inside(static_cast<std::size_t>(m.rows()), false);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const int idx = indices[i];
        if (idx < 0 || idx >= m.rows()) throw OutOfRange("restriction index out of range");
        if (i > 0 && indices[i - 1] >= idx) throw OutOfRange("restriction indices must strictly increase");
        inside[idx] = true;
    }
    for (int c : indices) {
        for (int r = 0; r < m.rows(); ++r) {
            if (!inside[r] && !m(r, c).is_zero())
                throw Error("coordinate subspace is not invariant");
        }
    }
    return m.select(indices, indices);
}

} // namespace terj
