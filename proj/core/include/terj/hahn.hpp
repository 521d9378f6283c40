#pragma once

#include <string>
#include <vector>

#include "terj/checks.hpp"
#include "terj/matrix.hpp"
#include "terj/sl2.hpp"

namespace terj {

/// Images of the Hahn-algebra generators A, B (and the derived elements
/// C = [A,B] and the central elements alpha, beta) on a tensor module
/// L_m (x) L_n, evaluated from the defining displays
///   A     -> (H (x) 1 - 1 (x) H) / 4,
///   B     -> dLambda / 2,
///   C     -> E (x) F - F (x) E,
///   alpha -> (Lambda (x) 1 + 1 (x) Lambda)/2 + dH^2/8,
///   beta  -> (Lambda (x) 1 - 1 (x) Lambda) dH / 2.
struct HahnImages {
    int m = 0, n = 0;
    Matrix A, B, C, alpha, beta;
};

HahnImages natural_images(const TensorRep& t);

/// Verify the defining relations of the algebra on given images:
///   [A,B] = C,  [C,A] + 2A^2 + B = alpha,  [B,C] + 4BA + 2C = beta,
/// plus centrality of alpha and beta (they commute with A and B).
/// Failures are reported, never thrown.
RelationReport check_hahn_relations(const HahnImages& h);

/// Parameter data of the (d+1)-dimensional module V_d(a,b):
///   theta_i      = (a+d)/2 - i                      (i = 0..d)
///   theta_star_i = (b+i)(b+i+1)                     (i = 0..d)
///   phi_i        = i (i-d-1) (a-b-i)                (i = 1..d; empty if d=0)
///   eta          = (a^2 + d(d+2))/2 + b(b+d+1)
///   eta_star     = 2 a b (b+d+1)
/// so that alpha, beta act on V_d(a,b) as eta, eta_star.
struct VdParams {
    Rational a, b;
    int d = 0;
    std::vector<Rational> theta, theta_star, phi;
    Rational eta, eta_star;
};

VdParams make_vd_params(const Rational& a, const Rational& b, int d);

/// The module V_d(a,b): A acts upper bidiagonally (A(i,i) = theta_i,
/// A(i-1,i) = phi_i) and B lower bidiagonally (B(i,i) = theta_star_i,
/// B(i+1,i) = 1) on the basis v_0..v_d. Throws OutOfRange for d < 0.
struct VdModule {
    VdParams params;
    Matrix A, B;
};

VdModule build_vd(const Rational& a, const Rational& b, int d);

/// V_d(a,b) is irreducible iff neither a-b nor -a-b lies in {1, ..., d}.
bool vd_irreducible(const Rational& a, const Rational& b, int d);

/// Isomorphism class label of an irreducible module: the parameters (a,b,d)
/// normalized so that b <= -(d+1)/2 (b and -b-d-1 give the same module).
struct ModuleClass {
    Rational a, b;
    int d = 0;

    friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
    friend bool operator<(const ModuleClass& x, const ModuleClass& y) {
        if (x.d != y.d) return x.d < y.d;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

ModuleClass canonical_class(const Rational& a, const Rational& b, int d);

std::string class_str(const ModuleClass& c);

/// Recover the canonical (a,b,d) of a module from its A matrix and the
/// scalar eta by which alpha acts: d = dim-1, a = 2 tr(A)/(d+1), and b is
/// the root with b <= -(d+1)/2 of
///   x^2 + (d+1) x + (a^2 + d(d+2))/2 - eta = 0.
/// Throws NonRationalParameter when the discriminant is not the square of a
/// rational, ShapeMismatch on non-square or mismatched inputs.
ModuleClass classify_module(const Matrix& a_mat, const Matrix& b_mat, const Rational& eta);

/// Build the intertwining map V_d(a,b) -> W into a module W carrying
/// operator actions tA, tB and a chosen seed vector: column i+1 is
/// (tB - theta_star_i I) applied to column i, starting from the seed.
/// Preconditions (throws PreconditionViolated when violated):
///   1. tA seed = theta_0 seed;
///   2. (tA - theta_1)(tB - theta_star_0) seed = phi_1 seed       (d >= 1);
///   3. the derived central elements act on the seed by eta, eta_star;
///   4. (a-d)/2 - 1 is not an eigenvalue of tA.
/// The returned matrix satisfies tA M = M A and tB M = M B exactly (this is
/// re-verified internally; violation throws Error).
Matrix intertwiner_from_vd(const Matrix& ta, const Matrix& tb, const Vec& seed,
                           const VdParams& target);

} // namespace terj
