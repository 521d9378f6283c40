#pragma once

#include <string>
#include <vector>

#include "terj/rational.hpp"

namespace terj {

/// C(n, k) as an exact integer; zero when k < 0 or k > n, and OutOfRange for
/// n < 0 (the conventions used throughout the counting arguments here).
mpz_class binom_mpz(long n, long k);

/// C(n, k) as long long; throws Error if the value does not fit.
long long binom_ll(long n, long k);

/// C(n, k) as an exact rational (for mixed arithmetic).
Rational binom_q(long n, long k);

/// Memoized Pascal table: warm once, then read concurrently.
class BinomialTables {
public:
    /// Precompute C(n, k) for all 0 <= k <= n <= n_max.
    void warm(int n_max);

    int warmed_to() const { return n_max_; }

    /// Table lookup; throws OutOfRange if n exceeds the warmed range.
    long long at(int n, int k) const;

private:
    int n_max_ = -1;
    std::vector<std::vector<long long>> rows_;
};

/// s_ell(n) = sum_{i=0}^{floor(n/2)} C(n-2i, ell), by direct summation.
/// Throws OutOfRange for ell < 0 or n < 0.
long long s_ell(int ell, int n);

/// The same quantity by closed form: the alternating binomial expression
///   (1/2) C(n+1, ell+1) + (1/4) sum_{i=0}^{ell-1} (-1/2)^i C(n+1, ell-i)
/// equals s_ell(n) minus the parity correction (-1)^ell / 2^{ell+1} when n
/// is even (no correction when n is odd); equivalently s_ell(n) is the
/// ceiling of the expression for even ell and the floor for odd ell.
/// Both readings are evaluated and cross-checked; throws Error if they ever
/// disagree or the corrected value is not an integer.
long long s_closed(int ell, int n);

/// Batch verification of the binomial layer used by the dimension counts:
///   sum_{i=0}^{floor(n/2)} (n-2i)^2            = C(n+2, 3),
///   sum_{i=0}^{n} (n-i)^2                      = C(n+2, 3) + C(n+1, 3),
///   sum_{i=0}^{n} C(i, ell)                    = C(n+1, ell+1),
///   s_{ell+1}(n+1) + s_{ell+1}(n)              = C(n+2, ell+2),
///   s_{ell+1}(n+1) - s_{ell+1}(n)              = s_ell(n),
///   s_ell(n) (direct)                          = s_closed(ell, n),
/// for 0 <= n <= n_max and 0 <= ell <= ell_max.
struct IdentityReport {
    long long total = 0;
    long long failed = 0;
    std::vector<std::string> failures;

    bool pass() const { return failed == 0; }
};

IdentityReport verify_binomial_identities(int n_max, int ell_max = 6);

} // namespace terj
