#include "terj/johnson.hpp"

#include <algorithm>
#include <bit>

#include "terj/binomials.hpp"
#include "terj/errors.hpp"
#include "terj/span.hpp"

namespace terj {

namespace {

using IndexPair = std::pair<int, int>;
using IndexList = std::vector<IndexPair>;

IndexList sorted(IndexList v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

void validate_johnson(int D, int k) {
    if (D < 2 || k < 1 || k > D - 1)
        throw OutOfRange("Johnson graph requires 1 <= k <= D-1");
}

/// Master shell index set P(k) in deterministic (i, j) order.
IndexList master_index_set(int D, int k) {
    IndexList out;
    for (int i = 0; 2 * i <= D - k; ++i)
        for (int j = 0; j <= std::min(D - k - i, k - i) && 2 * j <= k; ++j)
            out.emplace_back(i, j);
    return out;
}

} // namespace

JohnsonOps johnson_operators(int D, int k, unsigned anchor) {
    validate_johnson(D, k);
    const unsigned full = (1u << D) - 1;
    if (anchor & ~full) throw InvalidAnchor("anchor is not a subset of the ground set");
    if (std::popcount(anchor) != k)
        throw InvalidAnchor("anchor must be a k-subset");

    JohnsonOps ops;
    ops.D = D;
    ops.k = k;
    ops.anchor = anchor;
    for (unsigned x = 0; x <= full; ++x)
        if (std::popcount(x) == k) ops.vertices.push_back(x);
    const int nv = static_cast<int>(ops.vertices.size());

    ops.adjacency = Matrix(nv, nv);
    for (int r = 0; r < nv; ++r)
        for (int c = 0; c < nv; ++c)
            if (std::popcount(ops.vertices[r] & ops.vertices[c]) == k - 1)
                ops.adjacency(r, c) = 1;

    ops.dual_adjacency = Matrix(nv, nv);
    ops.dual_idempotents.assign(static_cast<std::size_t>(k) + 1, Matrix(nv, nv));
    const Rational scale = Rational(D) * Rational(2 * k * (D - k)).inv();
    for (int c = 0; c < nv; ++c) {
        const unsigned x = ops.vertices[c];
        const int sym_diff = std::popcount(anchor & ~x) + std::popcount(x & ~anchor);
        ops.dual_adjacency(c, c) = Rational(D - 1) * (Rational(1) - scale * Rational(sym_diff));
        const int i = k - std::popcount(x & anchor);
        ops.dual_idempotents[static_cast<std::size_t>(i)](c, c) = 1;
    }

    // Structural self-checks.
    if (!ops.adjacency.is_symmetric()) throw Error("adjacency is not symmetric");
    for (int r = 0; r < nv; ++r) {
        if (!ops.adjacency(r, r).is_zero()) throw Error("adjacency has a loop");
        Rational sum;
        for (int c = 0; c < nv; ++c) sum += ops.adjacency(r, c);
        if (sum != Rational(static_cast<long>(k) * (D - k)))
            throw Error("adjacency row sum is not k(D-k)");
    }
    Matrix idem_sum(nv, nv);
    for (const auto& e : ops.dual_idempotents) {
        if (e * e != e) throw Error("dual idempotent is not idempotent");
        idem_sum += e;
    }
    if (!idem_sum.is_identity()) throw Error("dual idempotents do not sum to the identity");
    Matrix dual_expansion(nv, nv);
    for (int i = 0; i <= k; ++i) {
        const Rational value =
            Rational(D - 1) * (Rational(1) - scale * Rational(2 * i));
        dual_expansion += value * ops.dual_idempotents[static_cast<std::size_t>(i)];
    }
    if (dual_expansion != ops.dual_adjacency)
        throw Error("dual adjacency disagrees with its idempotent expansion");
    return ops;
}

JohnsonOps johnson_operators(int D, int k) {
    validate_johnson(D, k);
    return johnson_operators(D, k, (1u << k) - 1);
}

long long terwilliger_dim_bruteforce(const JohnsonOps& ops, long long cap) {
    if (static_cast<long long>(ops.vertices.size()) > cap)
        throw SizeCapExceeded("shell size " + std::to_string(ops.vertices.size()) +
                              " exceeds the cap " + std::to_string(cap));
    return span_closure({ops.adjacency, ops.dual_adjacency}, true).dimension;
}

long long terwilliger_dim_bruteforce(int D, int k, unsigned anchor, long long cap) {
    validate_johnson(D, k);
    if (binom_ll(D, k) > cap)
        throw SizeCapExceeded("shell size C(" + std::to_string(D) + "," + std::to_string(k) +
                              ") exceeds the cap " + std::to_string(cap));
    return terwilliger_dim_bruteforce(johnson_operators(D, k, anchor), cap);
}

namespace {

long long floor_form(int t) {
    const Rational v = binom_q(t, 4) * Rational(1, 2) + binom_q(t, 3) * Rational(1, 4) -
                       binom_q(t, 2) * Rational(1, 8) + binom_q(t, 1) * Rational(1, 16);
    return Rational(mpq_class(v.floor())).to_long();
}

} // namespace

long long terwilliger_dim_formula(int D, int k) {
    validate_johnson(D, k);
    if (3 * k < D) return binom_ll(k + 3, 4) + floor_form(k + 4);
    if (2 * k < D) return binom_ll(k + 3, 4) + floor_form(k + 4) - floor_form(3 * k - D + 3);
    if (2 * k == D) return floor_form(D / 2 + 4);
    if (3 * k <= 2 * D)
        return binom_ll(D - k + 3, 4) + floor_form(D - k + 4) - floor_form(2 * D - 3 * k + 3);
    return binom_ll(D - k + 3, 4) + floor_form(D - k + 4);
}

std::string formula_case_label(int D, int k) {
    validate_johnson(D, k);
    if (3 * k < D) return "i";
    if (2 * k < D) return "ii";
    if (2 * k == D) return "iii";
    if (3 * k <= 2 * D) return "iv";
    return "v";
}

ItoIndexSets ito_index_sets(int D, int k) {
    if (k < 1 || 2 * k >= D) throw OutOfRange("index sets require 1 <= k < D/2");
    ItoIndexSets s;
    s.D = D;
    s.k = k;
    for (int i = 0; 2 * i <= k; ++i) {
        for (int j = 0; j <= k && 2 * j <= D - k; ++j) {
            if (i + j > k) continue;
            if (j <= i)
                s.I1.emplace_back(i, j);
            else if (j - i <= D - 2 * k)
                s.I2.emplace_back(i, j);
            else
                s.I3.emplace_back(i, j);
        }
    }
    return s;
}

PIndexSets p_index_sets(int D, int k) {
    if (k < 1 || 2 * k >= D) throw OutOfRange("index sets require 1 <= k < D/2");
    PIndexSets s;
    s.D = D;
    s.k = k;

    // Printed unions (the shape of P2/P3 depends on where k sits between
    // D/3 and 2D/5).
    if (3 * k < D) {
        for (int i = 0; 2 * i <= k; ++i)
            for (int j = i; 2 * j <= k; ++j) s.P1.emplace_back(i, j);
        for (int i = 1; 2 * i <= k; ++i)
            for (int j = 0; j < i; ++j) s.P2.emplace_back(i, j);
        for (int i = 0; i <= k; ++i) {
            if (2 * i <= k) continue;
            for (int j = 0; j <= k - i; ++j) s.P2.emplace_back(i, j);
        }
    } else if (5 * k < 2 * D) {
        for (int i = 0; 2 * i <= k; ++i)
            for (int j = i; 2 * j <= k; ++j) s.P1.emplace_back(i, j);
        for (int i = 1; 2 * i <= k; ++i)
            for (int j = 0; j < i; ++j) s.P2.emplace_back(i, j);
        for (int i = 0; i <= D - 2 * k; ++i) {
            if (2 * i <= k) continue;
            for (int j = 0; j <= k - i; ++j) s.P2.emplace_back(i, j);
        }
        for (int i = D - 2 * k + 1; 2 * i <= D - k; ++i)
            for (int j = 2 * k - D + i; j <= k - i; ++j) s.P2.emplace_back(i, j);
        for (int i = 0; 2 * i <= D - k; ++i)
            for (int j = 0; j < 2 * k - D + i; ++j)
                if (2 * (2 * k - D + i) <= 3 * k - D) s.P3.emplace_back(i, j);
    } else {
        for (int i = 0; 2 * i <= k; ++i)
            for (int j = i; 2 * j <= k; ++j) s.P1.emplace_back(i, j);
        for (int i = 1; i <= D - 2 * k; ++i)
            for (int j = 0; j < i; ++j) s.P2.emplace_back(i, j);
        for (int i = D - 2 * k + 1; 2 * i <= k; ++i)
            for (int j = 2 * k - D + i; j < i; ++j) s.P2.emplace_back(i, j);
        for (int i = 0; 2 * i <= D - k; ++i) {
            if (2 * i <= k) continue;
            for (int j = 2 * k - D + i; j <= k - i; ++j) s.P2.emplace_back(i, j);
        }
        for (int i = 0; 2 * i <= D - k; ++i)
            for (int j = 0; j < 2 * k - D + i; ++j)
                if (2 * (2 * k - D + i) <= 3 * k - D) s.P3.emplace_back(i, j);
    }

    // Predicate form over the master set, cross-checked against the unions.
    IndexList q1, q2, q3;
    for (const auto& [i, j] : master_index_set(D, k)) {
        if (i <= j)
            q1.emplace_back(i, j);
        else if (2 * k - D + i <= j)
            q2.emplace_back(i, j);
        else
            q3.emplace_back(i, j);
    }
    if (sorted(s.P1) != sorted(q1) || sorted(s.P2) != sorted(q2) || sorted(s.P3) != sorted(q3))
        throw Error("printed index families disagree with their predicate form at D=" +
                    std::to_string(D) + " k=" + std::to_string(k));
    return s;
}

bool index_set_bijection_agrees(int D, int k) {
    const ItoIndexSets is = ito_index_sets(D, k);
    const PIndexSets ps = p_index_sets(D, k);
    auto swapped = [](IndexList v) {
        for (auto& p : v) std::swap(p.first, p.second);
        return sorted(std::move(v));
    };
    return swapped(is.I1) == sorted(ps.P1) && swapped(is.I2) == sorted(ps.P2) &&
           swapped(is.I3) == sorted(ps.P3);
}

std::vector<int> blocks_from_index_sets(int D, int k) {
    validate_johnson(D, k);
    const int kk = std::min(k, D - k); // complementation isomorphism J(D,k) = J(D,D-k)

    if (2 * kk == D) {
        // Middle shell: two equivalent printed forms, cross-checked.
        std::vector<int> copies, pairs;
        for (int i = 0; 4 * i <= D; ++i)
            for (int c = 0; c <= i; ++c) copies.push_back(D / 2 - 2 * i + 1);
        for (int i = 0; 4 * i <= D; ++i)
            for (int j = i; 4 * j <= D; ++j) pairs.push_back(D / 2 - 2 * j + 1);
        copies = sorted_desc(std::move(copies));
        pairs = sorted_desc(std::move(pairs));
        if (copies != pairs)
            throw Error("the two middle-shell direct sums disagree at D=" + std::to_string(D));
        return copies;
    }

    std::vector<int> from_i;
    const ItoIndexSets is = ito_index_sets(D, kk);
    for (const auto& [i, j] : is.I1) { (void)j; from_i.push_back(kk - 2 * i + 1); }
    for (const auto& [i, j] : is.I2) from_i.push_back(kk - i - j + 1);
    for (const auto& [i, j] : is.I3) { (void)i; from_i.push_back(D - kk - 2 * j + 1); }

    std::vector<int> from_p;
    const PIndexSets ps = p_index_sets(D, kk);
    for (const auto& [i, j] : ps.P1) { (void)i; from_p.push_back(kk - 2 * j + 1); }
    for (const auto& [i, j] : ps.P2) from_p.push_back(kk - i - j + 1);
    for (const auto& [i, j] : ps.P3) { (void)j; from_p.push_back(D - kk - 2 * i + 1); }

    from_i = sorted_desc(std::move(from_i));
    from_p = sorted_desc(std::move(from_p));
    if (from_i != from_p)
        throw Error("the two index-set direct sums disagree at D=" + std::to_string(D) +
                    " k=" + std::to_string(k));
    return from_i;
}

std::vector<int> blocks_from_profile(int D, int k) {
    validate_johnson(D, k);
    const SliceProfile profile = slice_decomposition_profile(D, k);
    std::vector<int> blocks;
    blocks.reserve(profile.classes.size());
    for (const auto& entry : profile.classes) blocks.push_back(entry.dim);
    return sorted_desc(std::move(blocks));
}

std::vector<int> terwilliger_blocks(int D, int k) {
    const std::vector<int> a = blocks_from_index_sets(D, k);
    const std::vector<int> b = blocks_from_profile(D, k);
    if (a != b)
        throw Error("index-set blocks disagree with the class-profile blocks at D=" +
                    std::to_string(D) + " k=" + std::to_string(k));
    return a;
}

SliceComparison compare_terwilliger_realizations(const SubsetLatticeRep& lattice, int k,
                                                 unsigned anchor, long long cap) {
    const int D = lattice.D;
    validate_johnson(D, k);
    if (binom_ll(D, k) > cap)
        throw SizeCapExceeded("shell size C(" + std::to_string(D) + "," + std::to_string(k) +
                              ") exceeds the cap " + std::to_string(cap));

    const AnchorSplit split = split_by_anchor(lattice, anchor);
    if (!split.checks.all_pass())
        throw Error("anchor split failed its structural checks: " + split.checks.summary());

    const JohnsonOps ops = johnson_operators(D, k, anchor);
    std::vector<int> shell(ops.vertices.begin(), ops.vertices.end());

    const Matrix a_shell = restrict_to_coordinates(split.anchored.A, shell);
    const Matrix b_shell = restrict_to_coordinates(split.anchored.B, shell);
    const int nv = static_cast<int>(shell.size());

    SliceComparison cmp;
    cmp.D = D;
    cmp.k = k;
    cmp.anchor = anchor;

    const Rational b_shift = Rational(D, 2) +
                             Rational(static_cast<long>(D - 2 * k) * (D - 2 * k), 4);
    cmp.adjacency_matches =
        (ops.adjacency == b_shell - b_shift * Matrix::identity(nv));

    const Rational a_scale =
        Rational(static_cast<long>(D) * (D - 1)) * Rational(static_cast<long>(k) * (D - k)).inv();
    const Rational a_shift =
        Rational(static_cast<long>(D - 2 * k) * (D - 2 * k)) * Rational(4L * D).inv();
    cmp.dual_matches =
        (ops.dual_adjacency == a_scale * (a_shell - a_shift * Matrix::identity(nv)));

    const SpanClosureResult graph_side = span_closure({ops.adjacency, ops.dual_adjacency}, true);
    const SpanClosureResult image_side = span_closure({a_shell, b_shell}, true);
    cmp.dim_graph = graph_side.dimension;
    cmp.dim_image = image_side.dimension;
    cmp.spans_equal = (graph_side.basis == image_side.basis);
    return cmp;
}

SliceComparison compare_terwilliger_realizations(int D, int k, unsigned anchor, long long cap,
                                                 int lattice_cap) {
    return compare_terwilliger_realizations(build_subset_lattice(D, lattice_cap), k, anchor, cap);
}

bool verify_T_equals_H_image(int D, int k, unsigned anchor, long long cap, int lattice_cap) {
    return compare_terwilliger_realizations(D, k, anchor, cap, lattice_cap).spans_equal;
}

} // namespace terj
