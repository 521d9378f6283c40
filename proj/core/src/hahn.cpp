#include "terj/hahn.hpp"

#include <string>

#include "terj/errors.hpp"
#include "terj/span.hpp"

namespace terj {

namespace {

Vec scaled(const Vec& v, const Rational& c) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool is_integer_in(const Rational& x, long lo, long hi) {
    if (!x.is_integer()) return false;
    const mpz_class n = x.numerator();
    return n >= lo && n <= hi;
}

} // namespace

HahnImages natural_images(const TensorRep& t) {
    HahnImages h;
    h.m = t.m;
    h.n = t.n;
    h.A = (t.H1 - t.H2) * Rational(1, 4);
    h.B = t.dLambda * Rational(1, 2);
    h.C = kron(t.left.E, t.right.F) - kron(t.left.F, t.right.E);
    h.alpha = (t.L1 + t.L2) * Rational(1, 2) + (t.dH * t.dH) * Rational(1, 8);
    h.beta = (t.L1 - t.L2) * t.dH * Rational(1, 2);
    return h;
}

RelationReport check_hahn_relations(const HahnImages& h) {
    RelationReport r;
    r.add("commutator_is_C", commutator(h.A, h.B) == h.C);
    r.add("first_defining_relation",
          commutator(h.C, h.A) + Rational(2) * (h.A * h.A) + h.B == h.alpha);
    r.add("second_defining_relation",
          commutator(h.B, h.C) + Rational(4) * (h.B * h.A) + Rational(2) * h.C == h.beta);
    r.add("alpha_central",
          commutator(h.alpha, h.A).is_zero() && commutator(h.alpha, h.B).is_zero());
    r.add("beta_central",
          commutator(h.beta, h.A).is_zero() && commutator(h.beta, h.B).is_zero());
    return r;
}

VdParams make_vd_params(const Rational& a, const Rational& b, int d) {
    if (d < 0) throw OutOfRange("module parameter d must be >= 0");
    VdParams p;
    p.a = a;
    p.b = b;
    p.d = d;
    for (int i = 0; i <= d; ++i) {
        p.theta.push_back((a + Rational(d)) * Rational(1, 2) - Rational(i));
        p.theta_star.push_back((b + Rational(i)) * (b + Rational(i + 1)));
    }
    for (int i = 1; i <= d; ++i) {
        p.phi.push_back(Rational(i) * Rational(i - d - 1) * (a - b - Rational(i)));
    }
    p.eta = (a * a + Rational(static_cast<long>(d) * (d + 2))) * Rational(1, 2) +
            b * (b + Rational(d + 1));
    p.eta_star = Rational(2) * a * b * (b + Rational(d + 1));
    return p;
}

VdModule build_vd(const Rational& a, const Rational& b, int d) {
    VdModule m;
    m.params = make_vd_params(a, b, d);
    m.A = Matrix(d + 1, d + 1);
    m.B = Matrix(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        m.A(i, i) = m.params.theta[i];
        m.B(i, i) = m.params.theta_star[i];
        if (i >= 1) m.A(i - 1, i) = m.params.phi[i - 1];
        if (i < d) m.B(i + 1, i) = 1;
    }
    return m;
}

bool vd_irreducible(const Rational& a, const Rational& b, int d) {
    if (d < 0) throw OutOfRange("module parameter d must be >= 0");
    return !is_integer_in(a - b, 1, d) && !is_integer_in(-a - b, 1, d);
}

ModuleClass canonical_class(const Rational& a, const Rational& b, int d) {
    if (d < 0) throw OutOfRange("module parameter d must be >= 0");
    const Rational other = -b - Rational(d + 1);
    return ModuleClass{a, b <= other ? b : other, d};
}

std::string class_str(const ModuleClass& c) {
    return "(" + c.a.str() + "," + c.b.str() + "," + std::to_string(c.d) + ")";
}

ModuleClass classify_module(const Matrix& a_mat, const Matrix& b_mat, const Rational& eta) {
    if (!a_mat.is_square() || !b_mat.is_square() || a_mat.rows() != b_mat.rows())
        throw ShapeMismatch("classification requires equal square A and B");
    if (a_mat.rows() == 0) throw ShapeMismatch("classification of an empty module");
    const int d = a_mat.rows() - 1;

    const Rational a = Rational(2) * a_mat.trace() * Rational(d + 1).inv();

    // b solves x^2 + (d+1)x + (a^2 + d(d+2))/2 - eta = 0; take the root
    // with b <= -(d+1)/2.
    const Rational c0 =
        (a * a + Rational(static_cast<long>(d) * (d + 2))) * Rational(1, 2) - eta;
    const Rational disc = Rational(static_cast<long>(d + 1) * (d + 1)) - Rational(4) * c0;
    if (disc.sign() < 0)
        throw NonRationalParameter("module parameter b is not real: discriminant " + disc.str());
    const auto root = disc.sqrt_exact();
    if (!root)
        throw NonRationalParameter("module parameter b is not rational: discriminant " +
                                   disc.str() + " is not a perfect square");
    const Rational b = (-Rational(d + 1) - *root) * Rational(1, 2);
    return ModuleClass{a, b, d};
}

Matrix intertwiner_from_vd(const Matrix& ta, const Matrix& tb, const Vec& seed,
                           const VdParams& target) {
    const int n = ta.rows();
    if (!ta.is_square() || !tb.is_square() || tb.rows() != n)
        throw ShapeMismatch("intertwiner requires equal square operators");
    if (static_cast<int>(seed.size()) != n)
        throw ShapeMismatch("seed length does not match operators");
    const int d = target.d;

    bool seed_zero = true;
    for (const auto& x : seed)
        if (!x.is_zero()) { seed_zero = false; break; }
    if (seed_zero) throw PreconditionViolated("seed vector is zero");

    // 1. seed is a theta_0 eigenvector of tA.
    if (ta.apply(seed) != scaled(seed, target.theta[0]))
        throw PreconditionViolated("seed is not a theta_0 eigenvector of A");

    // 2. (tA - theta_1)(tB - theta_star_0) seed = phi_1 seed.
    if (d >= 1) {
        Vec u = tb.apply(seed);
        const Vec t0s = scaled(seed, target.theta_star[0]);
        for (int i = 0; i < n; ++i) u[i] -= t0s[i];
        Vec v = ta.apply(u);
        for (int i = 0; i < n; ++i) v[i] -= target.theta[1] * u[i];
        if (v != scaled(seed, target.phi[0]))
            throw PreconditionViolated("seed fails the phi_1 ladder identity");
    }

    // 3. the derived central elements act on the seed by eta, eta_star.
    const Matrix c = commutator(ta, tb);
    const Matrix alpha = commutator(c, ta) + Rational(2) * (ta * ta) + tb;
    const Matrix beta = commutator(tb, c) + Rational(4) * (tb * ta) + Rational(2) * c;
    if (alpha.apply(seed) != scaled(seed, target.eta))
        throw PreconditionViolated("alpha does not act on the seed by eta");
    if (beta.apply(seed) != scaled(seed, target.eta_star))
        throw PreconditionViolated("beta does not act on the seed by eta_star");

    // 4. (a-d)/2 - 1 is not an eigenvalue of tA.
    const Rational below = (target.a - Rational(d)) * Rational(1, 2) - Rational(1);
    if (!eigenspace_basis(ta, below).empty())
        throw PreconditionViolated("(a-d)/2 - 1 is an eigenvalue of A");

    Matrix m(n, d + 1);
    Vec col = seed;
    for (int j = 0; j <= d; ++j) {
        for (int r = 0; r < n; ++r) m(r, j) = col[r];
        if (j < d) {
            Vec next = tb.apply(col);
            for (int r = 0; r < n; ++r) next[r] -= target.theta_star[j] * col[r];
            col = std::move(next);
        }
    }

    const VdModule vd = build_vd(target.a, target.b, d);
    if (ta * m != m * vd.A || tb * m != m * vd.B)
        throw Error("constructed map fails to intertwine the module actions");
    return m;
}

} // namespace terj
