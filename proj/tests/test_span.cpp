#include "doctest.h"

#include "terj/matrix.hpp"
#include "terj/sl2.hpp"
#include "terj/span.hpp"

using terj::Matrix;
using terj::Rational;
using terj::SpanBasis;
using terj::Vec;

TEST_CASE("rref produces the canonical reduced form") {
    const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 2, 4}};
    const auto [red, pivots] = terj::rref(m);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 2);
    const Matrix expected{{1, 2, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(red == expected);
}

TEST_CASE("eigenspace_basis finds exact kernels") {
    const Matrix d = Matrix::diagonal({Rational(2), Rational(2), Rational(5)});
    const auto two = terj::eigenspace_basis(d, Rational(2));
    REQUIRE(two.size() == 2);
    CHECK(two[0][0] == Rational(1));
    CHECK(two[1][1] == Rational(1));
    CHECK(terj::eigenspace_basis(d, Rational(5)).size() == 1);
    CHECK(terj::eigenspace_basis(d, Rational(7)).empty());

    // Non-diagonal: [[0,1],[0,0]] has a single 0-eigenvector e0.
    const Matrix nil{{0, 1}, {0, 0}};
    const auto ker = terj::eigenspace_basis(nil, Rational(0));
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == Rational(1));
    CHECK(ker[0][1] == Rational(0));
}

TEST_CASE("SpanBasis canonical form makes span equality structural") {
    SpanBasis sp1(3), sp2(3);
    const Vec v1 = {Rational(1), Rational(1), Rational(0)};
    const Vec v2 = {Rational(0), Rational(1), Rational(1)};
    const Vec v3 = {Rational(1), Rational(2), Rational(1)}; // v1 + v2

    CHECK(sp1.insert(v1));
    CHECK(sp1.insert(v2));
    CHECK_FALSE(sp1.insert(v3));
    CHECK(sp1.rank() == 2);
    CHECK(sp1.contains(v3));

    // Same subspace offered in a different order and scaled.
    const Vec w1 = {Rational(2), Rational(4), Rational(2)};
    CHECK(sp2.insert(w1));
    CHECK(sp2.insert(v2));
    CHECK(sp2.insert(v1) == false);
    CHECK(sp1 == sp2);

    const Vec outside = {Rational(1), Rational(0), Rational(0)};
    CHECK_FALSE(sp1.contains(outside));
    SpanBasis sp3 = sp1;
    sp3.insert(outside);
    CHECK(sp3.rank() == 3);
    CHECK_FALSE(sp1 == sp3);
}

TEST_CASE("insert reports the reduced residual") {
    SpanBasis sp(2);
    Vec residual;
    sp.insert({Rational(1), Rational(1)}, &residual);
    sp.insert({Rational(1), Rational(2)}, &residual);
    // The second residual is normalized with pivot 1 at coordinate 1.
    CHECK(residual[0] == Rational(0));
    CHECK(residual[1] == Rational(1));
    sp.insert({Rational(3), Rational(4)}, &residual);
    CHECK(residual[0] == Rational(0));
    CHECK(residual[1] == Rational(0));
}

TEST_CASE("span closure of an irreducible action is the full matrix algebra") {
    // L_n acts irreducibly, so {E, F} generate all (n+1) x (n+1) matrices.
    for (int n = 1; n <= 3; ++n) {
        const terj::Sl2Action L = terj::build_Ln(n);
        const auto closure = terj::span_closure({L.E, L.F});
        CHECK(closure.dimension == (n + 1) * (n + 1));
    }
}

TEST_CASE("span closure of the diagonal tensor action") {
    // The unital algebra generated by dE, dF on L_m (x) L_n has dimension
    // sum of (w+1)^2 over the distinct summands L_w.
    auto expected_dim = [](int m, int n) {
        long long sum = 0;
        for (int p = 0; p <= std::min(m, n); ++p) {
            const long long w = m + n - 2 * p;
            sum += (w + 1) * (w + 1);
        }
        return sum;
    };
    CHECK(expected_dim(1, 1) == 10);
    CHECK(expected_dim(2, 1) == 20);
    CHECK(expected_dim(2, 2) == 35);
    CHECK(expected_dim(3, 2) == 56);
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{
             {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        const terj::TensorRep t = terj::build_tensor_rep(m, n);
        const auto closure = terj::span_closure({t.dE, t.dF});
        CHECK(closure.dimension == expected_dim(m, n));
    }
}

TEST_CASE("span closure validates shapes") {
    const std::vector<Matrix> rect = {Matrix(2, 3)};
    const std::vector<Matrix> mixed = {Matrix::identity(2), Matrix::identity(3)};
    CHECK_THROWS_AS(terj::span_closure(rect), terj::ShapeMismatch);
    CHECK_THROWS_AS(terj::span_closure(mixed), terj::ShapeMismatch);
}
