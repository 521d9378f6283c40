#pragma once

#include <string>
#include <utility>
#include <vector>

#include "terj/lattice.hpp"
#include "terj/matrix.hpp"

namespace terj {

/// The Johnson graph J(D,k) with an anchor vertex x0: vertices are the
/// k-subsets of {0..D-1} as ascending bitmasks; adjacency connects subsets
/// meeting in k-1 points. The dual adjacency matrix (with respect to x0)
/// is diagonal with entry
///   (D-1) (1 - D (|x0 \ x| + |x \ x0|) / (2 k (D-k)))
/// at x, and E*_i is the diagonal 0/1 idempotent selecting |x ∩ x0| = k-i.
///
/// Construction verifies: adjacency is symmetric 0/1 with zero diagonal and
/// row sums k(D-k); the idempotents are orthogonal and sum to the identity;
/// the dual adjacency equals its expansion through the idempotents.
/// Violations throw Error; bad (D,k) throws OutOfRange and a bad anchor
/// throws InvalidAnchor.
struct JohnsonOps {
    int D = 0, k = 0;
    unsigned anchor = 0;
    std::vector<unsigned> vertices;
    Matrix adjacency;
    Matrix dual_adjacency;
    std::vector<Matrix> dual_idempotents; // E*_0 .. E*_k
};

JohnsonOps johnson_operators(int D, int k, unsigned anchor);
/// Default anchor {0, ..., k-1}.
JohnsonOps johnson_operators(int D, int k);

/// Dimension of the algebra generated by adjacency and dual adjacency
/// (with the identity), by exact span closure. Throws SizeCapExceeded when
/// C(D,k) > cap.
long long terwilliger_dim_bruteforce(const JohnsonOps& ops, long long cap = 130);
long long terwilliger_dim_bruteforce(int D, int k, unsigned anchor, long long cap = 130);

/// Closed-form dimension, with ff(t) = floor(C(t,4)/2 + C(t,3)/4 - C(t,2)/8
/// + C(t,1)/16), split into five ranges of k:
///   (i)    3k < D:            C(k+3,4) + ff(k+4)
///   (ii)   D <= 3k,  2k < D:  C(k+3,4) + ff(k+4) - ff(3k-D+3)
///   (iii)  2k = D:            ff(D/2+4)
///   (iv)   D < 2k, 3k <= 2D:  C(D-k+3,4) + ff(D-k+4) - ff(2D-3k+3)
///   (v)    2D < 3k:           C(D-k+3,4) + ff(D-k+4)
/// Throws OutOfRange unless 1 <= k <= D-1.
long long terwilliger_dim_formula(int D, int k);

/// Which of the five formula ranges (D,k) falls in: "i".."v".
std::string formula_case_label(int D, int k);

/// The index set I(k) = {(i,j) : 0 <= 2i <= k, 0 <= j <= min(k, (D-k)/2),
/// i+j <= k} partitioned into the three families that label the simple
/// summands for k < D/2:
///   I1 = {j <= i}            -> full matrix algebras of size k-2i+1,
///   I2 = {0 < j-i <= D-2k}   -> size k-i-j+1,
///   I3 = {D-2k < j-i}        -> size D-k-2j+1.
/// Requires 1 <= k and 2k < D (OutOfRange otherwise).
struct ItoIndexSets {
    int D = 0, k = 0;
    std::vector<std::pair<int, int>> I1, I2, I3;
};

ItoIndexSets ito_index_sets(int D, int k);

/// The master set P(k) partitioned into the three families printed in the
/// classification of shell modules for k < D/2 (three different unions
/// depending on the position of k relative to D/3 and 2D/5):
///   P1 -> size k-2j+1, P2 -> size k-i-j+1, P3 -> size D-k-2i+1.
/// Construction cross-checks the printed unions against the predicate form
///   P1 = {i <= j}, P2 = {2k-D+i <= j < i}, P3 = {j < 2k-D+i}
/// over P(k) and throws Error on any disagreement.
/// Requires 1 <= k and 2k < D (OutOfRange otherwise).
struct PIndexSets {
    int D = 0, k = 0;
    std::vector<std::pair<int, int>> P1, P2, P3;
};

PIndexSets p_index_sets(int D, int k);

/// The bijection (i,j) -> (j,i) carries I1, I2, I3 onto P1, P2, P3.
bool index_set_bijection_agrees(int D, int k);

/// Simple-summand sizes of the Terwilliger algebra by the printed direct
/// sums (I-sets for k < D/2 after complementing k > D/2 to D-k; the
/// two equivalent middle-shell forms at 2k = D, cross-checked against each
/// other). Sorted descending.
std::vector<int> blocks_from_index_sets(int D, int k);

/// The same multiset derived independently from the shell class profile:
/// one summand of size d+1 per distinct module class. Sorted descending.
std::vector<int> blocks_from_profile(int D, int k);

/// Both routes, asserted equal (Error on mismatch). Sorted descending.
std::vector<int> terwilliger_blocks(int D, int k);

/// Comparison of the two realizations of the Terwilliger algebra of J(D,k):
/// from the graph side (adjacency + dual adjacency) and from the transported
/// Hahn-generator images A, B of the anchored lattice restricted to the
/// k-th shell. Checks the two entrywise affine relations
///   adjacency      = B|shell - (D/2 + (D-2k)^2/4) I,
///   dual adjacency = D(D-1)/(k(D-k)) (A|shell - (D-2k)^2/(4D) I),
/// and compares the two span closures as canonical bases.
struct SliceComparison {
    int D = 0, k = 0;
    unsigned anchor = 0;
    bool adjacency_matches = false;
    bool dual_matches = false;
    bool spans_equal = false;
    long long dim_graph = 0;
    long long dim_image = 0;
};

SliceComparison compare_terwilliger_realizations(const SubsetLatticeRep& lattice, int k,
                                                 unsigned anchor, long long cap = 130);
SliceComparison compare_terwilliger_realizations(int D, int k, unsigned anchor,
                                                 long long cap = 130, int lattice_cap = 12);

/// True iff the two generated algebras coincide as subspaces (identical
/// canonical span bases).
bool verify_T_equals_H_image(int D, int k, unsigned anchor, long long cap = 130,
                             int lattice_cap = 12);

} // namespace terj
