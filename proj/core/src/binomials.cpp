#include "terj/binomials.hpp"

#include <gmpxx.h>

#include "terj/errors.hpp"

namespace terj {

mpz_class binom_mpz(long n, long k) {
    if (n < 0) throw OutOfRange("binomial with negative n");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long long binom_ll(long n, long k) {
    const mpz_class r = binom_mpz(n, k);
    if (!r.fits_slong_p()) throw Error("binomial coefficient exceeds long long range");
    return static_cast<long long>(r.get_si());
}

Rational binom_q(long n, long k) {
    return Rational(mpq_class(binom_mpz(n, k)));
}

void BinomialTables::warm(int n_max) {
    if (n_max < 0) throw OutOfRange("negative table size");
    if (n_max <= n_max_) return;
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = n_max_ + 1; n <= n_max; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row.front() = row.back() = 1;
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] =
                rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1] +
                rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
    }
    n_max_ = n_max;
}

long long BinomialTables::at(int n, int k) const {
    if (n < 0 || n > n_max_) throw OutOfRange("binomial table row not warmed");
    if (k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

long long s_ell(int ell, int n) {
    if (ell < 0 || n < 0) throw OutOfRange("s_ell requires ell, n >= 0");
    long long total = 0;
    for (int i = 0; 2 * i <= n; ++i) total += binom_ll(n - 2 * i, ell);
    return total;
}

long long s_closed(int ell, int n) {
    if (ell < 0 || n < 0) throw OutOfRange("s_closed requires ell, n >= 0");

    Rational expr = binom_q(n + 1, ell + 1) * Rational(1, 2);
    Rational sign(1);
    for (int i = 0; i <= ell - 1; ++i) {
        expr += Rational(1, 4) * sign * binom_q(n + 1, ell - i);
        sign *= Rational(-1, 2);
    }

    // Exact reading: add the parity correction for even n.
    Rational exact = expr;
    if (n % 2 == 0) {
        Rational corr(1);
        for (int i = 0; i < ell + 1; ++i) corr *= Rational(1, 2);
        if (ell % 2 == 1) corr = -corr;
        exact += corr;
    }
    if (!exact.is_integer())
        throw Error("closed form for s_" + std::to_string(ell) + "(" + std::to_string(n) +
                    ") is not an integer");

    // Rounded reading: ceiling for even ell, floor for odd ell.
    const mpz_class rounded = (ell % 2 == 0) ? expr.ceil() : expr.floor();
    if (rounded != exact.numerator())
        throw Error("the two closed forms for s_" + std::to_string(ell) + "(" +
                    std::to_string(n) + ") disagree");

    return Rational(mpq_class(exact.numerator())).to_long();
}

namespace {

void expect(IdentityReport& rep, bool ok, const std::string& what) {
    ++rep.total;
    if (!ok) {
        ++rep.failed;
        rep.failures.push_back(what);
    }
}

} // namespace

IdentityReport verify_binomial_identities(int n_max, int ell_max) {
    if (n_max < 0 || ell_max < 0) throw OutOfRange("identity ranges must be >= 0");
    IdentityReport rep;
    for (int n = 0; n <= n_max; ++n) {
        long long sq_half = 0;
        for (int i = 0; 2 * i <= n; ++i)
            sq_half += static_cast<long long>(n - 2 * i) * (n - 2 * i);
        expect(rep, sq_half == binom_ll(n + 2, 3),
               "sum (n-2i)^2 = C(n+2,3) at n=" + std::to_string(n));

        long long sq_full = 0;
        for (int i = 0; i <= n; ++i) sq_full += static_cast<long long>(n - i) * (n - i);
        expect(rep, sq_full == binom_ll(n + 2, 3) + binom_ll(n + 1, 3),
               "sum (n-i)^2 = C(n+2,3)+C(n+1,3) at n=" + std::to_string(n));

        for (int ell = 0; ell <= ell_max; ++ell) {
            long long hockey = 0;
            for (int i = 0; i <= n; ++i) hockey += binom_ll(i, ell);
            expect(rep, hockey == binom_ll(n + 1, ell + 1),
                   "sum C(i,ell) = C(n+1,ell+1) at n=" + std::to_string(n) +
                       " ell=" + std::to_string(ell));

            expect(rep, s_ell(ell, n) == s_closed(ell, n),
                   "s_ell direct = closed at n=" + std::to_string(n) +
                       " ell=" + std::to_string(ell));
        }

        for (int ell = 0; ell + 1 <= ell_max; ++ell) {
            expect(rep,
                   s_ell(ell + 1, n + 1) + s_ell(ell + 1, n) == binom_ll(n + 2, ell + 2),
                   "s recurrence sum at n=" + std::to_string(n) + " ell=" + std::to_string(ell));
            expect(rep, s_ell(ell + 1, n + 1) - s_ell(ell + 1, n) == s_ell(ell, n),
                   "s recurrence difference at n=" + std::to_string(n) +
                       " ell=" + std::to_string(ell));
        }
    }
    return rep;
}

} // namespace terj
