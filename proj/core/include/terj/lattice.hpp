#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "terj/checks.hpp"
#include "terj/hahn.hpp"
#include "terj/matrix.hpp"
#include "terj/sl2.hpp"

namespace terj {

/// Parameters of the weight module (L_m (x) L_n)(m+n-2*ell): the
/// dH-eigenspace with eigenvalue m+n-2*ell inside L_m (x) L_n, which is an
/// irreducible module isomorphic to V_d(a,b) with
///   d = min(m,ell) + min(n,ell) - ell,
///   a = min(n,ell) - min(m,ell) + (m-n)/2,
///   b = -(m+n)/2 - 1,
/// and highest seed u_0 = v_{ell-min(n,ell)} (x) v_{min(n,ell)}.
/// Construction cross-checks eta and eta_star against their direct
/// evaluations on the tensor side and asserts that (a,b,d) passes
/// vd_irreducible; either failing throws Error.
struct WeightModuleDescriptor {
    int m = 0, n = 0, ell = 0;
    int weight = 0;          // m+n-2*ell
    VdParams params;         // the target V_d(a,b); b is already canonical
    int seed_flat_index = 0; // u_0 as a flat tensor coordinate
};

WeightModuleDescriptor weight_module_descriptor(int m, int n, int ell);

/// The triples (m', n', ell') indexing modules isomorphic to the weight
/// module of (m, n, ell):
///   (m,n,ell), (m+n-ell, ell, n), (ell, m+n-ell, m), (n, m, m+n-ell),
/// deduplicated and sorted.
std::vector<std::array<int, 3>> iso_orbit(int m, int n, int ell);

/// A concrete realization of a weight module: the restricted images of A
/// and B on the weight coordinates, the seed vector, and the intertwining
/// map from V_d(a,b) built from that seed.
struct RealizedWeightModule {
    WeightModuleDescriptor desc;
    std::vector<int> indices; // flat tensor coordinates of the weight space
    Matrix A, B;              // restricted images
    Vec seed;                 // u_0 in restricted coordinates
    Matrix intertwiner;       // columns: ladder images of the V_d basis
    bool intertwiner_invertible = false;
};

RealizedWeightModule realize_weight_module(int m, int n, int ell);

/// The subset lattice of {0,..,D-1} as an sl2 module on C^(2^D), basis
/// indexed by bitmasks in ascending order:
///   E x = sum of the subsets covered by x (one element removed),
///   F x = sum of the subsets covering x (one element added),
///   H x = (D - 2|x|) x.
/// Lambda is the Casimir E F + F E + H^2/2, computed from E, F, H and
/// verified entrywise against its combinatorial form
///   Lambda(x,x) = D + (D-2|x|)^2/2,
///   Lambda(y,x) = 2 when |y| = |x| and |x ∩ y| = |x|-1,
/// (all other entries zero); a mismatch throws Error.
///
/// After split_by_anchor the returned anchored copy also carries the anchor
/// x0 and the operators
///   A x = (D/4 - (|x0 \ x| + |x \ x0|)/2) x,
///   B   = Lambda / 2,
/// which realize the images of the Hahn generators transported through the
/// splitting isomorphism.
struct SubsetLatticeRep {
    int D = 0;
    Matrix E, F, H, Lambda;
    std::optional<unsigned> anchor;
    Matrix A, B;
};

/// Throws OutOfRange for D < 0 and SizeCapExceeded for D > cap.
SubsetLatticeRep build_subset_lattice(int D, int cap = 12);

/// The splitting along an anchor x0: the bijection
///   x -> (x \ x0) (x) (x ∩ x0)
/// identifies the subset lattice of {0..D-1} with the tensor product of the
/// lattices on the complement of x0 (first factor) and on x0 (second
/// factor), as a permutation `perm` of coordinates. The report verifies
/// that the permutation intertwines E, F, H, Lambda with the coproduct
/// actions, and that the anchored operators A and B match the transported
/// tensor-side operators (H (x) 1 - 1 (x) H)/4 and dLambda/2 entrywise.
struct AnchorSplit {
    SubsetLatticeRep anchored;
    SubsetLatticeRep outside, inside;
    std::vector<int> perm;          // subset index -> tensor index
    Matrix dE, dF, dH, dLambda;     // coproduct actions on the split side
    RelationReport checks;
};

AnchorSplit split_by_anchor(const SubsetLatticeRep& rep, unsigned x0);

/// Multiplicity of L_{n-2i} in the subset lattice of an n-element ground
/// set: m_i(n) = (n-2i+1)/(n-i+1) * C(n,i). Integer-valued; throws
/// OutOfRange unless 0 <= 2i <= n, Error if integrality ever failed.
long long multiplicity_m(int i, int n);

/// One isotypic row of the lattice decomposition: L_{D-2i} occurs with
/// multiplicity m_i(D).
struct LatticeDecompositionRow {
    int i = 0;
    int weight = 0;
    long long multiplicity = 0;
};

/// Decompose the lattice by exact Lambda eigenspaces: for each i the
/// eigenvalue w(w+2)/2 with w = D-2i has eigenspace dimension
/// m_i(D) * (w+1), and the dimensions exhaust 2^D. Mismatch throws Error.
std::vector<LatticeDecompositionRow> lattice_decomposition(int D, int cap = 12);

/// Isotypic class profile of the k-th shell: the master index set
///   P(k) = {(i,j) : 0 <= 2i <= D-k, 0 <= j <= min(D-k-i, k-i), 2j <= k}
/// contributes the weight-module class of (m,n,ell) = (D-k-2i, k-2j, k-i-j)
/// with multiplicity m_i(D-k) m_j(k). Classes are merged by canonical
/// parameter equality; the construction asserts that merging happens only
/// at 2k = D (exactly the pairs (i,j) ~ (j,i)) and that multiplicities
/// weighted by dimension sum to C(D,k). Violations throw Error.
struct SliceClassEntry {
    ModuleClass cls;
    int dim = 0;             // cls.d + 1
    long long multiplicity = 0;
};

struct SliceProfile {
    int D = 0, k = 0;
    std::vector<SliceClassEntry> classes; // sorted by class key
    long long total = 0;                  // C(D,k)
};

SliceProfile slice_decomposition_profile(int D, int k);

/// "{0,2,5}" rendering of a bitmask subset.
std::string subset_str(unsigned mask);

} // namespace terj
