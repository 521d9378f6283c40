#include "doctest.h"

#include <algorithm>
#include <array>
#include <vector>

#include "terj/binomials.hpp"
#include "terj/lattice.hpp"
#include "terj/matrix.hpp"

using terj::Matrix;
using terj::Rational;

TEST_CASE("weight module descriptors") {
    const terj::WeightModuleDescriptor d211 = terj::weight_module_descriptor(2, 1, 1);
    CHECK(d211.weight == 1);
    CHECK(d211.params.d == 1);
    CHECK(d211.params.a == Rational(1, 2));
    CHECK(d211.params.b == Rational(-5, 2));
    CHECK(d211.params.eta == Rational(23, 8));
    CHECK(d211.params.eta_star == Rational(5, 4));

    const terj::WeightModuleDescriptor d111 = terj::weight_module_descriptor(1, 1, 1);
    CHECK(d111.params.d == 1);
    CHECK(d111.params.a == Rational(0));
    CHECK(d111.params.b == Rational(-2));
    // Seed u_0 = v_{l - min(n,l)} (x) v_{min(n,l)}: flat index 1 here.
    CHECK(d111.seed_flat_index == 1);

    // b is always the canonical root.
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (int ell = 0; ell <= m + n; ++ell) {
                const auto desc = terj::weight_module_descriptor(m, n, ell);
                const auto canon = terj::canonical_class(desc.params.a,
                                                         desc.params.b,
                                                         desc.params.d);
                CHECK(desc.params.b == canon.b);
                CHECK(terj::vd_irreducible(desc.params.a, desc.params.b,
                                           desc.params.d));
            }
}

TEST_CASE("isomorphism orbits") {
    using Triple = std::array<int, 3>;
    const auto orbit111 = terj::iso_orbit(1, 1, 1);
    REQUIRE(orbit111.size() == 1);
    CHECK((orbit111[0] == Triple{1, 1, 1}));

    const auto orbit211 = terj::iso_orbit(2, 1, 1);
    REQUIRE(orbit211.size() == 2);
    CHECK((orbit211[0] == Triple{1, 2, 2}));
    CHECK((orbit211[1] == Triple{2, 1, 1}));

    const auto orbit324 = terj::iso_orbit(3, 2, 4);
    REQUIRE(orbit324.size() == 4);
    CHECK((orbit324[0] == Triple{1, 4, 2}));
    CHECK((orbit324[1] == Triple{2, 3, 1}));
    CHECK((orbit324[2] == Triple{3, 2, 4}));
    CHECK((orbit324[3] == Triple{4, 1, 3}));

    // Orbit members have equal canonical parameters.
    for (const auto& t : orbit324) {
        const auto desc = terj::weight_module_descriptor(t[0], t[1], t[2]);
        const auto ref = terj::weight_module_descriptor(3, 2, 4);
        CHECK(desc.params.a == ref.params.a);
        CHECK(desc.params.b == ref.params.b);
        CHECK(desc.params.d == ref.params.d);
    }
}

TEST_CASE("realized weight modules carry invertible intertwiners") {
    const terj::RealizedWeightModule mod = terj::realize_weight_module(1, 1, 1);
    CHECK(mod.intertwiner_invertible);
    const Matrix expected_M{{Rational(1), Rational(-1)},
                            {Rational(0), Rational(1)}};
    CHECK(mod.intertwiner == expected_M);

    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (int ell = 0; ell <= m + n; ++ell) {
                const auto r = terj::realize_weight_module(m, n, ell);
                CHECK(r.intertwiner_invertible);
                CHECK(r.A.rows() == r.desc.params.d + 1);
            }
}

TEST_CASE("subset lattice representation") {
    const terj::SubsetLatticeRep rep = terj::build_subset_lattice(2);
    // Basis order: {}, {0}, {1}, {0,1}.
    const Matrix H = Matrix::diagonal(
        {Rational(2), Rational(0), Rational(0), Rational(-2)});
    CHECK(rep.H == H);
    CHECK(rep.E(0, 1) == Rational(1)); // {0} covers {}
    CHECK(rep.E(0, 2) == Rational(1));
    CHECK(rep.E(1, 3) == Rational(1)); // {0,1} covers {0}
    CHECK(rep.F(3, 1) == Rational(1));
    CHECK(rep.Lambda(0, 0) == Rational(4));
    CHECK(terj::commutator(rep.E, rep.F) == rep.H);
    CHECK(terj::commutator(rep.H, rep.E) == rep.E * Rational(2));

    CHECK_THROWS_AS(terj::build_subset_lattice(-1), terj::OutOfRange);
    CHECK_THROWS_AS(terj::build_subset_lattice(13), terj::SizeCapExceeded);
}

TEST_CASE("anchor split identifies the lattice with a tensor product") {
    const terj::SubsetLatticeRep rep = terj::build_subset_lattice(2);
    const terj::AnchorSplit split = terj::split_by_anchor(rep, 1u);
    CHECK(split.checks.all_pass());
    CHECK(split.checks.checks.size() == 6);
    // {0,1} -> ({1}) (x) ({0}) = flat index 1*2^1 + 1 = 3.
    CHECK(split.perm[3] == 3);

    // The anchored operator A is diagonal with entries D/4 - symdiff/2.
    CHECK(split.anchored.A(1, 1) == Rational(1, 2));  // x = {0} = anchor
    CHECK(split.anchored.A(2, 2) == Rational(-1, 2)); // x = {1}
    CHECK(split.anchored.B == rep.Lambda * Rational(1, 2));

    CHECK_THROWS_AS(terj::split_by_anchor(rep, 4u), terj::InvalidAnchor);

    for (int D = 0; D <= 4; ++D) {
        const terj::SubsetLatticeRep r = terj::build_subset_lattice(D);
        for (unsigned x0 = 0; x0 < (1u << D); ++x0)
            CHECK(terj::split_by_anchor(r, x0).checks.all_pass());
    }
}

TEST_CASE("multiplicities m_i(n)") {
    CHECK(terj::multiplicity_m(0, 2) == 1);
    CHECK(terj::multiplicity_m(1, 2) == 1);
    CHECK(terj::multiplicity_m(1, 4) == 3);
    CHECK(terj::multiplicity_m(2, 4) == 2);
    CHECK(terj::multiplicity_m(2, 8) == 20);
    CHECK_THROWS_AS(terj::multiplicity_m(3, 4), terj::OutOfRange);
    CHECK_THROWS_AS(terj::multiplicity_m(-1, 4), terj::OutOfRange);

    // Dimension count: sum of m_i(D) (D-2i+1) = 2^D.
    for (int D = 0; D <= 10; ++D) {
        long long sum = 0;
        for (int i = 0; 2 * i <= D; ++i)
            sum += terj::multiplicity_m(i, D) * (D - 2 * i + 1);
        CHECK(sum == (1LL << D));
    }
}

TEST_CASE("lattice decomposition by exact eigenspaces") {
    struct Row {
        int weight;
        long long mult;
    };
    const std::vector<std::vector<Row>> expected = {
        {{2, 1}, {0, 1}},                 // D = 2
        {{3, 1}, {1, 2}},                 // D = 3
        {{4, 1}, {2, 3}, {0, 2}},         // D = 4
        {{5, 1}, {3, 4}, {1, 5}},         // D = 5
        {{6, 1}, {4, 5}, {2, 9}, {0, 5}}, // D = 6
    };
    for (int D = 2; D <= 6; ++D) {
        const auto rows = terj::lattice_decomposition(D);
        const auto& want = expected[D - 2];
        REQUIRE(rows.size() == want.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].weight == want[i].weight);
            CHECK(rows[i].multiplicity == want[i].mult);
        }
    }
}

TEST_CASE("slice decomposition profiles") {
    const terj::SliceProfile p21 = terj::slice_decomposition_profile(2, 1);
    REQUIRE(p21.classes.size() == 1);
    CHECK(p21.classes[0].dim == 2);
    CHECK(p21.classes[0].multiplicity == 1);
    CHECK(p21.total == 2);

    // Middle shell of D = 4: dims {3,1,1} with multiplicities {1,1,2}.
    const terj::SliceProfile p42 = terj::slice_decomposition_profile(4, 2);
    REQUIRE(p42.classes.size() == 3);
    long long total = 0;
    std::vector<std::pair<int, long long>> dm;
    for (const auto& e : p42.classes) {
        dm.emplace_back(e.dim, e.multiplicity);
        total += e.dim * e.multiplicity;
    }
    std::sort(dm.begin(), dm.end());
    CHECK(dm[0].first == 1);
    CHECK(dm[1].first == 1);
    CHECK(dm[2].first == 3);
    CHECK(dm[0].second + dm[1].second == 3); // multiplicities 1 and 2
    CHECK(dm[2].second == 1);
    CHECK(total == 6);
    CHECK(p42.total == 6);

    // k = 0 shell is a single one-dimensional class.
    const terj::SliceProfile p50 = terj::slice_decomposition_profile(5, 0);
    REQUIRE(p50.classes.size() == 1);
    CHECK(p50.classes[0].dim == 1);
    CHECK(p50.total == 1);

    // Totals always match C(D,k).
    for (int D = 0; D <= 9; ++D)
        for (int k = 0; k <= D; ++k)
            CHECK(terj::slice_decomposition_profile(D, k).total ==
                  terj::binom_ll(D, k));
}

TEST_CASE("subset rendering") {
    CHECK(terj::subset_str(0u) == "{}");
    CHECK(terj::subset_str(0b101u) == "{0,2}");
    CHECK(terj::subset_str(0b100101u) == "{0,2,5}");
}
