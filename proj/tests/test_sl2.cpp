#include "doctest.h"

#include "terj/matrix.hpp"
#include "terj/sl2.hpp"

using terj::Matrix;
using terj::Rational;

TEST_CASE("L_n weight-basis action") {
    const terj::Sl2Action L = terj::build_Ln(2);
    const Matrix E{{0, 1, 0}, {0, 0, 2}, {0, 0, 0}};
    const Matrix F{{0, 0, 0}, {2, 0, 0}, {0, 1, 0}};
    const Matrix H{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}};
    CHECK(L.E == E);
    CHECK(L.F == F);
    CHECK(L.H == H);
    CHECK_THROWS_AS(terj::build_Ln(-1), terj::OutOfRange);
}

TEST_CASE("defining relations hold for all small n") {
    for (int n = 0; n <= 8; ++n) {
        const terj::Sl2Action L = terj::build_Ln(n);
        CHECK(terj::commutator(L.H, L.E) == L.E * Rational(2));
        CHECK(terj::commutator(L.H, L.F) == L.F * Rational(-2));
        CHECK(terj::commutator(L.E, L.F) == L.H);
    }
}

TEST_CASE("Casimir acts on L_n by n(n+2)/2") {
    for (int n = 0; n <= 8; ++n) {
        const terj::Sl2Action L = terj::build_Ln(n);
        const Matrix cas = terj::casimir_matrix(L.E, L.F, L.H);
        const Rational scalar = Rational(n) * Rational(n + 2) / Rational(2);
        CHECK(cas == Matrix::identity(n + 1) * scalar);
    }
}

TEST_CASE("tensor representation carries the coproduct") {
    const terj::TensorRep t = terj::build_tensor_rep(2, 1);
    REQUIRE(t.dE.rows() == 6);
    CHECK(t.dE == t.E1 + t.E2);
    CHECK(t.dF == t.F1 + t.F2);
    CHECK(t.dH == t.H1 + t.H2);
    // The coproduct images satisfy the same defining relations.
    CHECK(terj::commutator(t.dH, t.dE) == t.dE * Rational(2));
    CHECK(terj::commutator(t.dE, t.dF) == t.dH);
    // Factor actions commute with each other.
    CHECK(terj::commutator(t.E1, t.F2).is_zero());
    CHECK(terj::commutator(t.H1, t.E2).is_zero());
    // dLambda is central for the diagonal action.
    CHECK(terj::commutator(t.dLambda, t.dE).is_zero());
    CHECK(terj::commutator(t.dLambda, t.dF).is_zero());
    CHECK(terj::commutator(t.dLambda, t.dH).is_zero());
}

TEST_CASE("weight spaces are the dH eigenspaces") {
    const terj::TensorRep t = terj::build_tensor_rep(2, 1);
    const int expected_dims[] = {1, 2, 2, 1};
    for (int ell = 0; ell <= 3; ++ell) {
        const terj::WeightSpace ws = terj::weight_space(t, ell);
        CHECK(ws.weight == 3 - 2 * ell);
        CHECK(static_cast<int>(ws.indices.size()) == expected_dims[ell]);
        for (int idx : ws.indices) CHECK(t.dH(idx, idx) == Rational(ws.weight));
    }
    // Flat indices: l=1 picks (0,1) -> 1 and (1,0) -> 2.
    const terj::WeightSpace ws1 = terj::weight_space(t, 1);
    REQUIRE(ws1.indices.size() == 2);
    CHECK(ws1.indices[0] == 1);
    CHECK(ws1.indices[1] == 2);
    CHECK_THROWS_AS(terj::weight_space(t, 4), terj::OutOfRange);
    CHECK_THROWS_AS(terj::weight_space(t, -1), terj::OutOfRange);
}

TEST_CASE("Clebsch-Gordan spectra") {
    struct Case {
        int m, n;
        std::vector<int> weights;
    };
    const std::vector<Case> cases = {
        {1, 1, {2, 0}},
        {2, 1, {3, 1}},
        {2, 2, {4, 2, 0}},
        {3, 1, {4, 2}},
        {3, 3, {6, 4, 2, 0}},
    };
    for (const auto& c : cases) {
        const terj::TensorRep t = terj::build_tensor_rep(c.m, c.n);
        const auto summands = terj::clebsch_gordan_summands(t);
        REQUIRE(summands.size() == c.weights.size());
        int total = 0;
        for (std::size_t p = 0; p < summands.size(); ++p) {
            CHECK(summands[p].weight == c.weights[p]);
            CHECK(summands[p].dim == c.weights[p] + 1);
            const Rational w(c.weights[p]);
            CHECK(summands[p].eigenvalue == w * (w + Rational(2)) / Rational(2));
            total += summands[p].dim;
        }
        CHECK(total == (c.m + 1) * (c.n + 1));
    }
}

TEST_CASE("restrict_to_coordinates enforces invariance") {
    const terj::TensorRep t = terj::build_tensor_rep(1, 1);
    const terj::WeightSpace ws = terj::weight_space(t, 1);
    // dLambda preserves each weight space; dE does not (it raises weight).
    const Matrix restricted = terj::restrict_to_coordinates(t.dLambda, ws.indices);
    CHECK(restricted.rows() == 2);
    CHECK_THROWS_AS(terj::restrict_to_coordinates(t.dE, ws.indices), terj::Error);
    // Malformed index lists are rejected.
    const std::vector<int> unsorted = {2, 1};
    CHECK_THROWS_AS(terj::restrict_to_coordinates(t.dLambda, unsorted), terj::Error);
}
