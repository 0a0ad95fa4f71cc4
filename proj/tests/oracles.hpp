#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <cmath>
#include <map>
#include <vector>

#include "cyclo/symbols.hpp"

namespace oracles {

using cyclo::BigInt;
using cyclo::i64;

// Coefficients of the n-th cyclotomic polynomial, constant term first,
// by exact polynomial division of x^n - 1 by the proper-divisor product.
inline std::vector<BigInt> cyclotomic_coeffs(i64 n) {
    static std::map<i64, std::vector<BigInt>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> num(n + 1);
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    for (i64 d : cyclo::divisors(n)) {
        if (d == n) continue;
        std::vector<BigInt> div = cyclotomic_coeffs(d);
        // exact division num /= div (both monic up to sign handling)
        std::vector<BigInt> quot(num.size() - div.size() + 1);
        std::vector<BigInt> rem = num;
        for (std::size_t k = quot.size(); k-- > 0;) {
            BigInt c = rem[k + div.size() - 1] / div.back();
            quot[k] = c;
            for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= c * div[j];
        }
        num = quot;
    }
    cache[n] = num;
    return num;
}

// Homogenized evaluation sum c_i u^i v^{phi(n)-i}.
inline BigInt phi_homog(i64 n, const BigInt& u, const BigInt& v) {
    std::vector<BigInt> c = cyclotomic_coeffs(n);
    BigInt acc = 0;
    std::size_t deg = c.size() - 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        BigInt up, vp;
        mpz_pow_ui(up.get_mpz_t(), u.get_mpz_t(), i);
        mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), deg - i);
        acc += c[i] * up * vp;
    }
    return acc;
}

// Long-double log-space Minkowski bound, independent of the MPFR path.
inline long double minkowski_logspace(i64 p) {
    long double lg = 0;
    lg += (p - 1) / 2.0L * std::log(4.0L / std::acos(-1.0L));
    lg += std::lgamma(static_cast<long double>(p));            // log (p-1)!
    lg -= (p - 1) * std::log(static_cast<long double>(p - 1));
    lg += (p - 2) / 2.0L * std::log(static_cast<long double>(p));
    return std::exp(lg);
}

// ---------------------------------------------------------------------------
// Independent residue-symbol oracle: recomputes the evaluation, the kappa
// power and the mu scan from scratch with its own dense polynomial
// arithmetic over Z/q. Shares only the context's modulus (the prime Q).
// ---------------------------------------------------------------------------

struct MuOracle {
    i64 q;
    int f;
    std::vector<i64> modulus;  // monic, constant first, length f+1

    using P = std::vector<i64>;  // length f

    static i64 mod(i64 a, i64 m) {
        i64 r = a % m;
        return r < 0 ? r + m : r;
    }

    P zero() const { return P(f, 0); }
    P one() const {
        P o(f, 0);
        o[0] = 1;
        return o;
    }

    P mulp(const P& a, const P& b) const {
        std::vector<i64> full(2 * f - 1, 0);
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) full[i + j] = mod(full[i + j] + a[i] % q * (b[j] % q), q);
        for (int k = 2 * f - 2; k >= f; --k) {
            i64 c = full[k];
            if (!c) continue;
            full[k] = 0;
            for (int j = 0; j < f; ++j) full[k - f + j] = mod(full[k - f + j] - c * modulus[j], q);
        }
        full.resize(f);
        return full;
    }

    P powp(P base, BigInt e) const {
        P acc = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = mulp(acc, base);
            base = mulp(base, base);
            e >>= 1;
        }
        return acc;
    }

    P invp(const P& a) const {
        BigInt order;
        mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(f));
        return powp(a, order - 2);
    }

    bool is_zero(const P& a) const {
        for (i64 x : a)
            if (x) return false;
        return true;
    }

    // eval by repeated multiplication (no fast powering on the exponents)
    P eval_elem(const cyclo::CycElem& e, i64 xi_bar, const P& zeta_bar) const {
        P acc = zero();
        for (const auto& [key, c] : e.coeffs) {
            BigInt cm = c % q;
            if (cm < 0) cm += q;
            i64 scalar = cm.get_si();
            for (i64 i = 0; i < key.i; ++i) scalar = mod(scalar * (xi_bar % q), q);
            P term(f, 0);
            term[0] = scalar;
            for (i64 j = 0; j < key.j; ++j) term = mulp(term, zeta_bar);
            for (int i = 0; i < f; ++i) acc[i] = mod(acc[i] + term[i], q);
        }
        return acc;
    }

    // -1 when a factor vanishes, else mu in [0, p)
    i64 word_mu(const cyclo::SplitContext& ctx, std::size_t qi, const cyclo::RadicalWord& w) const {
        P zb(ctx.q_list[qi].c.begin(), ctx.q_list[qi].c.end());
        P acc = one();
        for (const auto& [elem, expo] : w.factors) {
            P v = eval_elem(elem, ctx.xi_bar, zb);
            if (is_zero(v)) return -1;
            if (expo < 0) v = invp(v);
            i64 mag = expo < 0 ? -expo : expo;
            acc = mulp(acc, powp(v, BigInt(mag)));
        }
        P target = powp(acc, ctx.kappa_value);
        P cur = one();
        for (i64 mu = 0; mu < ctx.p; ++mu) {
            if (cur == target) return mu;
            cur = mulp(cur, zb);
        }
        return -2;  // not in mu_p: impossible
    }
};

inline MuOracle make_mu_oracle(const cyclo::SplitContext& ctx) {
    return MuOracle{ctx.field->q, ctx.field->f, ctx.field->modulus};
}

}  // namespace oracles
