#include "terj/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "terj/binomials.hpp"
#include "terj/errors.hpp"
#include "terj/span.hpp"

namespace terj {

namespace {

int popcount(unsigned x) { return std::popcount(x); }

/// Rank of `mask`'s bits within the bits of `selector`: bit b of mask (which
/// must satisfy mask ⊆ selector) maps to the number of selector bits below b.
unsigned compact_bits(unsigned mask, unsigned selector) {
    unsigned out = 0;
    int pos = 0;
    for (unsigned b = selector; b != 0; b &= b - 1) {
        const unsigned low = b & ~(b - 1); // lowest set bit of the remaining selector
        if (mask & low) out |= 1u << pos;
        ++pos;
    }
    return out;
}

} // namespace

WeightModuleDescriptor weight_module_descriptor(int m, int n, int ell) {
    if (m < 0 || n < 0) throw OutOfRange("weight module requires m, n >= 0");
    if (ell < 0 || ell > m + n) throw OutOfRange("weight module requires 0 <= ell <= m+n");

    const int mm = std::min(m, ell);
    const int nn = std::min(n, ell);

    WeightModuleDescriptor d;
    d.m = m;
    d.n = n;
    d.ell = ell;
    d.weight = m + n - 2 * ell;

    const Rational a = Rational(nn) - Rational(mm) + Rational(m - n, 2);
    const Rational b = -Rational(m + n, 2) - Rational(1);
    const int dd = mm + nn - ell;
    d.params = make_vd_params(a, b, dd);
    d.seed_flat_index = (ell - nn) * (n + 1) + nn;

    // Cross-check eta and eta_star against their tensor-side evaluations.
    const Rational eta_tensor =
        Rational(static_cast<long>(m) * (m + 2) + static_cast<long>(n) * (n + 2), 4) +
        Rational(static_cast<long>(d.weight) * d.weight, 8);
    const Rational eta_star_tensor =
        Rational(static_cast<long>(m) * (m + 2) - static_cast<long>(n) * (n + 2), 4) *
        Rational(d.weight);
    if (d.params.eta != eta_tensor || d.params.eta_star != eta_star_tensor)
        throw Error("weight module central values disagree with tensor-side evaluation");

    if (!vd_irreducible(a, b, dd))
        throw Error("weight module parameters fail the irreducibility criterion");
    if (canonical_class(a, b, dd).b != b)
        throw Error("weight module parameter b is not canonical");
    return d;
}

std::vector<std::array<int, 3>> iso_orbit(int m, int n, int ell) {
    if (m < 0 || n < 0) throw OutOfRange("iso_orbit requires m, n >= 0");
    if (ell < 0 || ell > m + n) throw OutOfRange("iso_orbit requires 0 <= ell <= m+n");
    std::vector<std::array<int, 3>> orbit = {
        {m, n, ell},
        {m + n - ell, ell, n},
        {ell, m + n - ell, m},
        {n, m, m + n - ell},
    };
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

RealizedWeightModule realize_weight_module(int m, int n, int ell) {
    RealizedWeightModule r;
    r.desc = weight_module_descriptor(m, n, ell);

    const TensorRep t = build_tensor_rep(m, n);
    const HahnImages h = natural_images(t);
    const WeightSpace w = weight_space(t, ell);
    r.indices = w.indices;
    if (static_cast<int>(r.indices.size()) != r.desc.params.d + 1)
        throw Error("weight space dimension disagrees with the parameter d");

    r.A = restrict_to_coordinates(h.A, r.indices);
    r.B = restrict_to_coordinates(h.B, r.indices);

    r.seed.assign(r.indices.size(), Rational());
    const auto it = std::find(r.indices.begin(), r.indices.end(), r.desc.seed_flat_index);
    if (it == r.indices.end()) throw Error("seed coordinate missing from the weight space");
    r.seed[static_cast<std::size_t>(it - r.indices.begin())] = 1;

    r.intertwiner = intertwiner_from_vd(r.A, r.B, r.seed, r.desc.params);
    r.intertwiner_invertible =
        static_cast<int>(rref(r.intertwiner).second.size()) == r.desc.params.d + 1;
    return r;
}

SubsetLatticeRep build_subset_lattice(int D, int cap) {
    if (D < 0) throw OutOfRange("subset lattice requires D >= 0");
    if (D > cap) throw SizeCapExceeded("subset lattice size 2^" + std::to_string(D) +
                                       " exceeds the configured cap 2^" + std::to_string(cap));
    const int n = 1 << D;
    SubsetLatticeRep rep;
    rep.D = D;
    rep.E = Matrix(n, n);
    rep.F = Matrix(n, n);
    rep.H = Matrix(n, n);
    for (unsigned x = 0; x < static_cast<unsigned>(n); ++x) {
        rep.H(static_cast<int>(x), static_cast<int>(x)) = D - 2 * popcount(x);
        for (int e = 0; e < D; ++e) {
            const unsigned bit = 1u << e;
            if (x & bit)
                rep.E(static_cast<int>(x ^ bit), static_cast<int>(x)) = 1;
            else
                rep.F(static_cast<int>(x | bit), static_cast<int>(x)) = 1;
        }
    }
    rep.Lambda = casimir_matrix(rep.E, rep.F, rep.H);

    // Combinatorial form of the Casimir, checked entrywise.
    Matrix expected(n, n);
    for (unsigned x = 0; x < static_cast<unsigned>(n); ++x) {
        const int size = popcount(x);
        expected(static_cast<int>(x), static_cast<int>(x)) =
            Rational(D) + Rational(static_cast<long>(D - 2 * size) * (D - 2 * size), 2);
        for (int e = 0; e < D; ++e) {
            if (!(x & (1u << e))) continue;
            for (int f = 0; f < D; ++f) {
                if (x & (1u << f)) continue;
                const unsigned y = (x ^ (1u << e)) | (1u << f);
                expected(static_cast<int>(y), static_cast<int>(x)) = 2;
            }
        }
    }
    if (rep.Lambda != expected)
        throw Error("lattice Casimir disagrees with its combinatorial form");
    return rep;
}

AnchorSplit split_by_anchor(const SubsetLatticeRep& rep, unsigned x0) {
    const int D = rep.D;
    const unsigned full = (D == 0) ? 0u : ((1u << D) - 1);
    if (x0 & ~full) throw InvalidAnchor("anchor is not a subset of the ground set");

    const int k0 = popcount(x0);
    const unsigned outside_mask = full & ~x0;

    AnchorSplit s;
    s.outside = build_subset_lattice(D - k0);
    s.inside = build_subset_lattice(k0);

    const int n = 1 << D;
    s.perm.resize(static_cast<std::size_t>(n));
    for (unsigned x = 0; x < static_cast<unsigned>(n); ++x) {
        const unsigned out_idx = compact_bits(x & outside_mask, outside_mask);
        const unsigned in_idx = compact_bits(x & x0, x0);
        s.perm[x] = static_cast<int>((out_idx << k0) | in_idx);
    }

    const Matrix i_out = Matrix::identity(1 << (D - k0));
    const Matrix i_in = Matrix::identity(1 << k0);
    s.dE = kron(s.outside.E, i_in) + kron(i_out, s.inside.E);
    s.dF = kron(s.outside.F, i_in) + kron(i_out, s.inside.F);
    s.dH = kron(s.outside.H, i_in) + kron(i_out, s.inside.H);
    s.dLambda = casimir_matrix(s.dE, s.dF, s.dH);

    // The split map is a permutation of coordinates, so "intertwines" means
    // M(r,c) == dM(perm[r], perm[c]) for every entry.
    auto transported_equals = [&](const Matrix& lattice_side, const Matrix& tensor_side) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (lattice_side(r, c) != tensor_side(s.perm[r], s.perm[c])) return false;
        return true;
    };

    s.checks.add("split_intertwines_E", transported_equals(rep.E, s.dE));
    s.checks.add("split_intertwines_F", transported_equals(rep.F, s.dF));
    s.checks.add("split_intertwines_H", transported_equals(rep.H, s.dH));
    s.checks.add("split_intertwines_Casimir", transported_equals(rep.Lambda, s.dLambda));

    // Anchored operators in combinatorial form ...
    Matrix a_op(n, n);
    for (unsigned x = 0; x < static_cast<unsigned>(n); ++x) {
        const int dist = popcount(x0 & ~x) + popcount(x & ~x0);
        a_op(static_cast<int>(x), static_cast<int>(x)) = Rational(D, 4) - Rational(dist, 2);
    }
    const Matrix b_op = rep.Lambda * Rational(1, 2);

    // ... must match the transported images of the Hahn generators.
    const Matrix a_tensor = (kron(s.outside.H, i_in) - kron(i_out, s.inside.H)) * Rational(1, 4);
    s.checks.add("anchored_A_matches_split", transported_equals(a_op, a_tensor));
    s.checks.add("anchored_B_matches_split",
                 transported_equals(b_op, s.dLambda * Rational(1, 2)));

    s.anchored = rep;
    s.anchored.anchor = x0;
    s.anchored.A = std::move(a_op);
    s.anchored.B = b_op;
    return s;
}

long long multiplicity_m(int i, int n) {
    if (n < 0 || i < 0 || 2 * i > n)
        throw OutOfRange("multiplicity m_i(n) requires 0 <= 2i <= n");
    const Rational r = Rational(n - 2 * i + 1) * Rational(n - i + 1).inv() * binom_q(n, i);
    if (!r.is_integer()) throw Error("lattice multiplicity is not an integer");
    return r.to_long();
}

std::vector<LatticeDecompositionRow> lattice_decomposition(int D, int cap) {
    const SubsetLatticeRep rep = build_subset_lattice(D, cap);
    std::vector<LatticeDecompositionRow> rows;
    long long total = 0;
    for (int i = 0; 2 * i <= D; ++i) {
        const int w = D - 2 * i;
        const Rational eigenvalue(static_cast<long>(w) * (w + 2), 2);
        const long long mult = multiplicity_m(i, D);
        const auto basis = eigenspace_basis(rep.Lambda, eigenvalue);
        if (static_cast<long long>(basis.size()) != mult * (w + 1))
            throw Error("Casimir eigenspace dimension disagrees with the multiplicity formula"
                        " at i=" + std::to_string(i));
        total += mult * (w + 1);
        rows.push_back({i, w, mult});
    }
    if (total != (1LL << D))
        throw Error("isotypic dimensions do not exhaust the lattice");
    return rows;
}

SliceProfile slice_decomposition_profile(int D, int k) {
    if (D < 0 || k < 0 || k > D) throw OutOfRange("slice profile requires 0 <= k <= D");

    SliceProfile profile;
    profile.D = D;
    profile.k = k;

    struct Accum {
        long long multiplicity = 0;
        long long sources = 0;
    };
    std::map<ModuleClass, Accum> merged;
    long long master_pairs = 0;
    long long diagonal_pairs = 0;

    for (int i = 0; 2 * i <= D - k; ++i) {
        const int j_hi = std::min(D - k - i, k - i);
        for (int j = 0; j <= j_hi && 2 * j <= k; ++j) {
            ++master_pairs;
            if (i == j) ++diagonal_pairs;
            const int m = D - k - 2 * i;
            const int n = k - 2 * j;
            const int ell = k - i - j;
            const WeightModuleDescriptor desc = weight_module_descriptor(m, n, ell);
            const ModuleClass cls{desc.params.a, desc.params.b, desc.params.d};
            const long long mult = multiplicity_m(i, D - k) * multiplicity_m(j, k);
            auto& acc = merged[cls];
            acc.multiplicity += mult;
            acc.sources += 1;
        }
    }

    long long total = 0;
    for (const auto& [cls, acc] : merged) {
        if (2 * k != D && acc.sources != 1)
            throw Error("unexpected class merge away from the middle shell");
        if (2 * k == D && acc.sources > 2)
            throw Error("more than two index pairs merged on the middle shell");
        profile.classes.push_back({cls, cls.d + 1, acc.multiplicity});
        total += acc.multiplicity * (cls.d + 1);
    }
    if (2 * k == D) {
        const long long expected_classes = diagonal_pairs + (master_pairs - diagonal_pairs) / 2;
        if (static_cast<long long>(profile.classes.size()) != expected_classes)
            throw Error("middle-shell merging does not pair (i,j) with (j,i)");
    }

    profile.total = binom_ll(D, k);
    if (total != profile.total)
        throw Error("class multiplicities do not sum to the shell size C(D,k)");
    return profile;
}

std::string subset_str(unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int b = 0; mask >> b; ++b) {
        if (!(mask & (1u << b))) continue;
        if (!first) s += ",";
        s += std::to_string(b);
        first = false;
    }
    s += "}";
    return s;
}

} // namespace terj
