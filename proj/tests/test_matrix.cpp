#include "doctest.h"

#include "terj/matrix.hpp"

using terj::Matrix;
using terj::Rational;
using terj::Vec;

TEST_CASE("constructors and accessors") {
    const Matrix z(2, 3);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z.is_zero());

    const Matrix m{{1, 2}, {3, 4}};
    CHECK(m(0, 0) == Rational(1));
    CHECK(m(1, 0) == Rational(3));
    CHECK(m.at(1, 1) == Rational(4));
    CHECK_THROWS_AS(m.at(2, 0), terj::OutOfRange);
    CHECK_THROWS_AS(m.at(0, -1), terj::OutOfRange);

    CHECK(Matrix::identity(3).is_identity());
    const Matrix d = Matrix::diagonal({Rational(1), Rational(2)});
    CHECK(d(1, 1) == Rational(2));
    CHECK(d(0, 1) == Rational(0));
    const Matrix u = Matrix::unit(2, 2, 0, 1);
    CHECK(u(0, 1) == Rational(1));
    CHECK(u(0, 0) == Rational(0));
}

TEST_CASE("predicates") {
    const Matrix diag{{1, 0}, {0, 2}};
    const Matrix nondiag{{1, 1}, {0, 2}};
    const Matrix sym{{1, 5}, {5, 2}};
    const Matrix nonsym{{1, 5}, {4, 2}};
    CHECK(diag.is_diagonal());
    CHECK_FALSE(nondiag.is_diagonal());
    CHECK(sym.is_symmetric());
    CHECK_FALSE(nonsym.is_symmetric());
}

TEST_CASE("arithmetic and products") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix b{{0, 1}, {1, 0}};
    const Matrix sum{{1, 3}, {4, 4}};
    const Matrix diff{{1, 1}, {2, 4}};
    const Matrix twice{{2, 4}, {6, 8}};
    const Matrix neg{{-1, -2}, {-3, -4}};
    const Matrix ab{{2, 1}, {4, 3}};
    const Matrix ba{{3, 4}, {1, 2}};
    const Matrix at{{1, 3}, {2, 4}};
    CHECK(a + b == sum);
    CHECK(a - b == diff);
    CHECK(a * Rational(2) == twice);
    CHECK(Rational(2) * a == twice);
    CHECK(-a == neg);
    CHECK(a * b == ab);
    CHECK(b * a == ba);
    CHECK(a.transpose() == at);
    CHECK(a.trace() == Rational(5));

    const Matrix rect{{1, 0, 2}, {0, 1, 1}};
    CHECK((a * rect).cols() == 3);
    CHECK_THROWS_AS(rect * a, terj::ShapeMismatch);
    CHECK_THROWS_AS(a + rect, terj::ShapeMismatch);
}

TEST_CASE("commutator") {
    const Matrix x{{0, 1}, {0, 0}};
    const Matrix y{{0, 0}, {1, 0}};
    const Matrix h{{1, 0}, {0, -1}};
    CHECK(terj::commutator(x, y) == h);
    CHECK(terj::commutator(h, x) == x * Rational(2));
    CHECK_THROWS_AS(terj::commutator(x, Matrix(3, 3)), terj::ShapeMismatch);
}

TEST_CASE("apply acts on coordinate columns") {
    const Matrix a{{1, 2}, {3, 4}};
    const Vec v = {Rational(1), Rational(-1)};
    const Vec image = a.apply(v);
    CHECK(image[0] == Rational(-1));
    CHECK(image[1] == Rational(-1));
    const Vec bad = {Rational(1)};
    CHECK_THROWS_AS(a.apply(bad), terj::ShapeMismatch);
}

TEST_CASE("kron uses the left-factor-major flat index") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix b{{0, 5}, {6, 7}};
    const Matrix k = terj::kron(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    // (i,j),(p,q) entry is a(i,p) * b(j,q) with flat index i*2+j.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q)
                    CHECK(k(i * 2 + j, p * 2 + q) == a(i, p) * b(j, q));
    // Mixed products collapse: kron(a, I) * kron(I, b) == kron(a, b).
    const Matrix id = Matrix::identity(2);
    CHECK(terj::kron(a, id) * terj::kron(id, b) == k);
}

TEST_CASE("flatten round trips row-major") {
    const Matrix a{{1, 2, 3}, {4, 5, 6}};
    const Vec flat = a.flatten();
    REQUIRE(flat.size() == 6);
    CHECK(flat[1] == Rational(2));
    CHECK(flat[3] == Rational(4));
    CHECK(Matrix::unflatten(flat, 2, 3) == a);
    CHECK_THROWS_AS(Matrix::unflatten(flat, 2, 2), terj::ShapeMismatch);
}

TEST_CASE("select extracts submatrices") {
    const Matrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    const Matrix expected{{2, 3}, {8, 9}};
    const Matrix s = a.select({0, 2}, {1, 2});
    CHECK(s == expected);
}
