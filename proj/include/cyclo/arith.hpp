#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer and modular arithmetic: homogenized cyclotomic
 *        polynomial values, multiplicative orders, Bernoulli regularity
 *        testing and prime iteration.
 *
 * Everything here is a pure function on immutable inputs; safe to call
 * from any number of concurrent workers.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclo/errors.hpp"

namespace cyclo {

using BigInt = mpz_class;
using i64 = std::int64_t;

/// n = d * p^r with gcd(d, p) = 1.
struct PrimePower {
    i64 n = 1;
    i64 d = 1;
    int r = 0;
};

struct RegularityReport {
    i64 p = 0;
    bool regular = true;
    std::vector<i64> irregular_indices;  // even 2k <= p-3 with p | numerator(B_{2k})
};

// ---------------------------------------------------------------------------
// 64-bit helpers
// ---------------------------------------------------------------------------

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);
i64 inv_mod(i64 a, i64 m);  // gcd(a,m)=1 required
i64 gcd_ll(i64 a, i64 b);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(i64 n);

/// Ascending primes in [lo, hi].
std::vector<i64> primes_in(i64 lo, i64 hi);

/// Trial-division factorization, smallest primes first as (prime, exponent).
std::vector<std::pair<i64, int>> factorize(i64 n);

/// Ascending list of positive divisors.
std::vector<i64> divisors(i64 n);

/// Moebius function.
int mobius(i64 n);

i64 euler_phi(i64 n);

// ---------------------------------------------------------------------------
// Spec operations
// ---------------------------------------------------------------------------

/// Phi_n(u,v) = v^phi(n) * Phi_n(u/v), exact. Computed as the Moebius
/// product prod_{e|n} (u^e - v^e)^{mu(n/e)} with exact division; the
/// degenerate directions u = v and u = -v use the classical closed forms
/// Phi_n(1) and Phi_n(-1).
BigInt cyclotomic_value(i64 n, const BigInt& u, const BigInt& v);

/// Least e >= 1 with a^e = 1 mod q. Factors q-1 and descends exponents.
/// Throws NotCoprime if q | a.
i64 mult_order(const BigInt& a, i64 q);

/// Brute-force order, kept as a test oracle.
i64 mult_order_naive(const BigInt& a, i64 q);

PrimePower decompose_n(i64 n, i64 p);

/// Bernoulli-number regularity test in Z/p (one pass of the recurrence
/// sum_{j=0}^{m} C(m+1,j) B_j = 0; denominators are invertible mod p for
/// indices <= p-3 by von Staudt-Clausen).
RegularityReport is_regular(i64 p, i64 bound = 2000);

/// kappa = (q^f - 1)/p. Throws NotDivisible if p does not divide q^f - 1.
BigInt kappa(i64 q, int f, i64 p);

/// Minkowski bound B_p = (4/pi)^((p-1)/2) * (p-1)!/(p-1)^(p-1) * sqrt(p^(p-2)),
/// evaluated at 256-bit precision.
double minkowski_bound(i64 p);
std::string minkowski_bound_str(i64 p, int significant_digits = 12);

/// Least primitive root mod prime q.
i64 least_primitive_root(i64 q);

/// Exact rational Bernoulli numbers B_0..B_max (test oracle for is_regular).
std::vector<mpq_class> bernoulli_rationals(int max_index);

/// Prime factors of |v| found by trial division up to `bound`, ascending;
/// the unfactored cofactor (1 when fully factored) is returned alongside.
struct TrialFactorization {
    std::vector<i64> primes;
    BigInt cofactor;
};
TrialFactorization trial_prime_factors(const BigInt& v, i64 bound);

}  // namespace cyclo
