// Acceptance harness: one line per criterion, `[k/9] PASS|FAIL <description>
// (<millis> ms)`, exit code = number of failed criteria. Every comparison is
// exact rational arithmetic; there are no tolerances anywhere.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "terj/binomials.hpp"
#include "terj/hahn.hpp"
#include "terj/johnson.hpp"
#include "terj/lattice.hpp"
#include "terj/matrix.hpp"
#include "terj/sl2.hpp"
#include "terj/span.hpp"
#include "terj/suites.hpp"

using terj::Matrix;
using terj::Rational;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// 1. The defining relations of the universal algebra hold for the natural
// generator images on every tensor module L_m (x) L_n with m, n <= 4.
Outcome criterion_relations() {
    Outcome out;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            const terj::TensorRep t = terj::build_tensor_rep(m, n);
            const terj::RelationReport rep =
                terj::check_hahn_relations(terj::natural_images(t));
            if (!rep.all_pass() || rep.checks.size() != 5)
                out.fail("relations fail on (" + std::to_string(m) + "," +
                         std::to_string(n) + "): " + rep.summary());
        }
    return out;
}

// 2. The Casimir element acts on L_n as the scalar n(n+2)/2 for n <= 12.
Outcome criterion_casimir() {
    Outcome out;
    for (int n = 0; n <= 12; ++n) {
        const terj::Sl2Action L = terj::build_Ln(n);
        const Matrix cas = terj::casimir_matrix(L.E, L.F, L.H);
        const Rational scalar = Rational(n) * Rational(n + 2) / Rational(2);
        if (cas != Matrix::identity(n + 1) * scalar)
            out.fail("Casimir is not scalar on L_" + std::to_string(n));
    }
    return out;
}

// 3. Exact eigenspace computation reproduces the Clebsch-Gordan
// decomposition L_m (x) L_n = sum of L_{m+n-2p} for all m, n <= 6.
Outcome criterion_clebsch_gordan() {
    Outcome out;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            const terj::TensorRep t = terj::build_tensor_rep(m, n);
            const auto summands = terj::clebsch_gordan_summands(t);
            if (static_cast<int>(summands.size()) != std::min(m, n) + 1) {
                out.fail("wrong summand count for (" + std::to_string(m) +
                         "," + std::to_string(n) + ")");
                continue;
            }
            int total = 0;
            for (std::size_t p = 0; p < summands.size(); ++p) {
                const int w = m + n - 2 * static_cast<int>(p);
                if (summands[p].weight != w || summands[p].dim != w + 1)
                    out.fail("wrong summand at p=" + std::to_string(p) +
                             " for (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
                total += summands[p].dim;
            }
            if (total != (m + 1) * (n + 1))
                out.fail("summand dimensions do not exhaust (" +
                         std::to_string(m) + "," + std::to_string(n) + ")");
        }
    return out;
}

// 4. Every weight space of L_m (x) L_n (m, n <= 5) realizes its predicted
// V_d(a,b): the ladder intertwiner exists, is invertible, and conjugates the
// restricted generator images to the bidiagonal model exactly.
Outcome criterion_weight_modules() {
    Outcome out;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (int ell = 0; ell <= m + n; ++ell) {
                const terj::RealizedWeightModule mod =
                    terj::realize_weight_module(m, n, ell);
                const std::string where = "(" + std::to_string(m) + "," +
                                          std::to_string(n) + "," +
                                          std::to_string(ell) + ")";
                if (!mod.intertwiner_invertible)
                    out.fail("singular intertwiner at " + where);
                const terj::VdModule vd = terj::build_vd(
                    mod.desc.params.a, mod.desc.params.b, mod.desc.params.d);
                if (mod.A * mod.intertwiner != mod.intertwiner * vd.A ||
                    mod.B * mod.intertwiner != mod.intertwiner * vd.B)
                    out.fail("intertwining equations fail at " + where);
            }
    return out;
}

// 5. For all m, n, m', n' <= 5 and all weights, two weight modules have equal
// canonical parameters exactly when they are related by the four-term
// isomorphism orbit.
Outcome criterion_iso_orbit() {
    Outcome out;
    struct Key {
        int m, n, ell;
    };
    std::vector<Key> keys;
    std::map<std::array<int, 3>, terj::ModuleClass> classes;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (int ell = 0; ell <= m + n; ++ell) {
                const auto desc = terj::weight_module_descriptor(m, n, ell);
                classes.emplace(std::array<int, 3>{m, n, ell},
                                terj::canonical_class(desc.params.a,
                                                      desc.params.b,
                                                      desc.params.d));
                keys.push_back({m, n, ell});
            }
    long long mismatches = 0;
    for (const auto& lhs : keys) {
        const auto& lhs_class = classes.at({lhs.m, lhs.n, lhs.ell});
        const auto orbit = terj::iso_orbit(lhs.m, lhs.n, lhs.ell);
        for (const auto& rhs : keys) {
            const bool same_class =
                classes.at({rhs.m, rhs.n, rhs.ell}) == lhs_class;
            const bool in_orbit =
                std::find(orbit.begin(), orbit.end(),
                          std::array<int, 3>{rhs.m, rhs.n, rhs.ell}) !=
                orbit.end();
            if (same_class != in_orbit) ++mismatches;
        }
    }
    if (mismatches != 0)
        out.fail(std::to_string(mismatches) +
                 " orbit/parameter disagreements");
    return out;
}

// 6. For every 2 <= D <= 8 and 1 <= k <= D-1 the Terwilliger-algebra
// dimension of J(D,k) is computed four independent ways -- closed formula,
// squared block sizes from the index families, squared block sizes from the
// shell-module profile, and brute-force span closure of the generated matrix
// algebra -- and all four agree (spot values 4, 11, 16, 46 included).
Outcome criterion_dimensions() {
    Outcome out;
    for (int D = 2; D <= 8; ++D)
        for (int k = 1; k <= D - 1; ++k) {
            const std::string where =
                "J(" + std::to_string(D) + "," + std::to_string(k) + ")";
            const long long formula = terj::terwilliger_dim_formula(D, k);
            long long idx = 0;
            for (int b : terj::blocks_from_index_sets(D, k))
                idx += static_cast<long long>(b) * b;
            long long profile = 0;
            for (int b : terj::blocks_from_profile(D, k))
                profile += static_cast<long long>(b) * b;
            const long long brute = terj::terwilliger_dim_bruteforce(
                D, k, (1u << k) - 1u, 130);
            if (formula != idx || formula != profile || formula != brute)
                out.fail("dimension routes disagree at " + where + ": " +
                         std::to_string(formula) + "/" + std::to_string(idx) +
                         "/" + std::to_string(profile) + "/" +
                         std::to_string(brute));
        }
    const std::array<std::array<long long, 3>, 4> spots = {
        {{2, 1, 4}, {4, 2, 11}, {6, 2, 16}, {8, 4, 46}}};
    for (const auto& s : spots)
        if (terj::terwilliger_dim_formula(static_cast<int>(s[0]),
                                          static_cast<int>(s[1])) != s[2])
            out.fail("spot value J(" + std::to_string(s[0]) + "," +
                     std::to_string(s[1]) + ") != " + std::to_string(s[2]));
    return out;
}

// 7. For every 2 <= D <= 7, every shell k, and two anchors each (the default
// and a seeded sample), the graph generators are affine shifts of the
// transported lattice generators and both generate the same algebra: the two
// span closures coincide as canonical bases.
Outcome criterion_realizations() {
    Outcome out;
    for (int D = 2; D <= 7; ++D) {
        const terj::SubsetLatticeRep lattice = terj::build_subset_lattice(D);
        for (int k = 1; k <= D - 1; ++k) {
            std::vector<unsigned> anchors = {(1u << k) - 1u};
            const unsigned sampled = terj::seeded_anchor(D, k, 0);
            if (sampled != anchors[0]) anchors.push_back(sampled);
            for (unsigned anchor : anchors) {
                const terj::SliceComparison cmp =
                    terj::compare_terwilliger_realizations(lattice, k, anchor,
                                                           130);
                const std::string where = "J(" + std::to_string(D) + "," +
                                          std::to_string(k) + ") anchor " +
                                          terj::subset_str(anchor);
                if (!cmp.adjacency_matches)
                    out.fail("adjacency shift fails at " + where);
                if (!cmp.dual_matches)
                    out.fail("dual adjacency scaling fails at " + where);
                if (!cmp.spans_equal)
                    out.fail("span closures differ at " + where);
            }
        }
    }
    return out;
}

// 8. The binomial layer: the summation identities behind the dimension
// counts hold for all n <= 40 and ell <= 6, and the two evaluations of
// s_ell(n) (direct sum and alternating closed form with parity correction)
// agree, including the frozen spot values.
Outcome criterion_binomials() {
    Outcome out;
    const terj::IdentityReport rep = terj::verify_binomial_identities(40, 6);
    if (!rep.pass())
        out.fail(std::to_string(rep.failed) + " of " +
                 std::to_string(rep.total) + " identities failed" +
                 (rep.failures.empty() ? "" : " (" + rep.failures[0] + ")"));
    const struct {
        int ell, n;
        long long value;
    } spots[] = {
        {3, 5, 11}, {3, 6, 24}, {3, 7, 46}, {3, 11, 295},
        {4, 12, 791}, {5, 13, 1897}, {6, 40, 12277401},
    };
    for (const auto& s : spots) {
        if (terj::s_ell(s.ell, s.n) != s.value ||
            terj::s_closed(s.ell, s.n) != s.value)
            out.fail("s_" + std::to_string(s.ell) + "(" + std::to_string(s.n) +
                     ") != " + std::to_string(s.value));
    }
    return out;
}

// 9. The subset lattice decomposes as predicted: every anchor split for
// D <= 6 intertwines the sl2 action and the Casimir and matches the anchored
// operators entrywise; the multiplicity formula m_i(D) exhausts 2^D for
// D <= 10; and exact Casimir eigenspaces reproduce the multiplicities for
// D <= 6.
Outcome criterion_lattice() {
    Outcome out;
    for (int D = 0; D <= 6; ++D) {
        const terj::SubsetLatticeRep rep = terj::build_subset_lattice(D);
        for (unsigned anchor = 0; anchor < (1u << D); ++anchor) {
            const terj::AnchorSplit split = terj::split_by_anchor(rep, anchor);
            if (!split.checks.all_pass() || split.checks.checks.size() != 6)
                out.fail("split fails at D=" + std::to_string(D) +
                         " anchor " + terj::subset_str(anchor) + ": " +
                         split.checks.summary());
        }
    }
    for (int D = 0; D <= 10; ++D) {
        long long sum = 0;
        for (int i = 0; 2 * i <= D; ++i)
            sum += terj::multiplicity_m(i, D) * (D - 2 * i + 1);
        if (sum != (1LL << D))
            out.fail("multiplicity sum misses 2^D at D=" + std::to_string(D));
    }
    for (int D = 0; D <= 6; ++D) {
        const auto rows = terj::lattice_decomposition(D);
        for (const auto& row : rows)
            if (row.multiplicity != terj::multiplicity_m(row.i, D))
                out.fail("eigenspace multiplicity mismatch at D=" +
                         std::to_string(D));
    }
    return out;
}

} // namespace

int main() {
    struct Criterion {
        std::string description;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"defining relations of the algebra hold on all tensor modules "
         "(m,n <= 4)",
         criterion_relations},
        {"Casimir acts on L_n by the scalar n(n+2)/2 (n <= 12)",
         criterion_casimir},
        {"exact eigenspaces reproduce the Clebsch-Gordan decomposition "
         "(m,n <= 6)",
         criterion_clebsch_gordan},
        {"weight modules realize V_d(a,b) with invertible intertwiners "
         "(m,n <= 5)",
         criterion_weight_modules},
        {"parameter equality matches the isomorphism orbit exactly "
         "(m,n,m',n' <= 5)",
         criterion_iso_orbit},
        {"four independent Terwilliger dimension computations agree "
         "(2 <= D <= 8, all k)",
         criterion_dimensions},
        {"graph and transported-generator realizations generate the same "
         "algebra (D <= 7, two anchors)",
         criterion_realizations},
        {"binomial identities and both s_ell evaluations agree "
         "(n <= 40, ell <= 6)",
         criterion_binomials},
        {"subset-lattice splits, multiplicities, and eigenspace "
         "decompositions agree (D <= 6; sums to D <= 10)",
         criterion_lattice},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& ex) {
            out.fail(std::string("exception: ") + ex.what());
        }
        const auto t1 = std::chrono::steady_clock::now();
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                .count();
        std::cout << "[" << (i + 1) << "/" << criteria.size() << "] "
                  << (out.pass ? "PASS" : "FAIL") << " "
                  << criteria[i].description;
        if (!out.pass) std::cout << " -- " << out.detail;
        std::cout << " (" << ms << " ms)" << std::endl;
        if (!out.pass) ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/"
              << criteria.size() << " criteria passed" << std::endl;
    return failures;
}
