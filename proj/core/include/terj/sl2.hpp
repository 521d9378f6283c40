#pragma once

#include <vector>

#include "terj/matrix.hpp"

namespace terj {

/// The (n+1)-dimensional irreducible sl2 representation L_n in the weight
/// basis v_0, ..., v_n:
///   E v_i = i v_{i-1},   F v_i = (n-i) v_{i+1},   H v_i = (n-2i) v_i,
/// so [H,E] = 2E, [H,F] = -2F, [E,F] = H hold exactly.
struct Sl2Action {
    int n = 0;
    Matrix E, F, H;
};

/// Build L_n; throws OutOfRange for n < 0.
Sl2Action build_Ln(int n);

/// Casimir element Lambda = EF + FE + H^2/2 evaluated on matrices.
Matrix casimir_matrix(const Matrix& e, const Matrix& f, const Matrix& h);

/// The tensor module L_m (x) L_n with the first factor major in the flat
/// index (i, j) -> i*(n+1) + j. Carries the factor actions X (x) 1 and
/// 1 (x) X and the coproduct images d(X) = X (x) 1 + 1 (x) X for
/// X in {E, F, H}, plus the coproduct Casimir dLambda.
///
/// build_tensor_rep computes dLambda both as casimir_matrix(dE, dF, dH) and
/// via the expansion
///   Lambda (x) 1 + 1 (x) Lambda + H (x) H / ... (see natural_images)
/// and throws Error if the two disagree (they never do; this is a
/// construction-time self-check).
struct TensorRep {
    int m = 0, n = 0;
    Sl2Action left, right;
    Matrix E1, F1, H1, L1; // X (x) 1
    Matrix E2, F2, H2, L2; // 1 (x) X
    Matrix dE, dF, dH, dLambda;
};

TensorRep build_tensor_rep(int m, int n);

/// The dH-eigenspace of L_m (x) L_n with eigenvalue m+n-2*ell, spanned by
/// the standard tensor basis vectors e_i (x) e_j with i+j = ell. Indices
/// are flat tensor coordinates in ascending order. Throws OutOfRange unless
/// 0 <= ell <= m+n.
struct WeightSpace {
    int ell = 0;
    int weight = 0;
    std::vector<int> indices;
};

WeightSpace weight_space(const TensorRep& t, int ell);

/// One Clebsch-Gordan summand of L_m (x) L_n: the copy of L_w with
/// w = m+n-2p, realized as the dLambda-eigenspace with eigenvalue w(w+2)/2.
struct CgSummand {
    int p = 0;
    int weight = 0;
    Rational eigenvalue; // w(w+2)/2
    int dim = 0;         // w+1, confirmed against the eigenspace
};

/// Decompose L_m (x) L_n as the direct sum of L_{m+n-2p}, p = 0..min(m,n),
/// by exact dLambda eigenspace computation. Verifies that each eigenspace
/// has dimension w+1 and that the dimensions sum to (m+1)(n+1) (so no other
/// eigenvalues occur); throws Error on any mismatch.
std::vector<CgSummand> clebsch_gordan_summands(const TensorRep& t);

/// Restriction of a square operator to the invariant coordinate subspace
/// spanned by the standard basis vectors at the given (strictly increasing)
/// indices. Throws Error if the subspace is not invariant, ShapeMismatch /
/// OutOfRange on malformed input.
Matrix restrict_to_coordinates(const Matrix& m, const std::vector<int>& indices);

} // namespace terj
