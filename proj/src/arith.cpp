#include "cyclo/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <mpfr.h>

namespace cyclo {

i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
    base %= m;
    if (base < 0) base += m;
    i64 result = 1 % m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

i64 gcd_ll(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 inv_mod(i64 a, i64 m) {
    a %= m;
    if (a < 0) a += m;
    i64 t = 0, new_t = 1, r = m, new_r = a;
    while (new_r != 0) {
        i64 qq = r / new_r;
        i64 tmp = t - qq * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - qq * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw precondition_error(errc::not_coprime, "no inverse mod " + std::to_string(m));
    return t < 0 ? t + m : t;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == s) return true;
        if (n % s == 0) return false;
    }
    i64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic witness set for the 64-bit range
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
    std::vector<i64> out;
    if (lo < 2) lo = 2;
    for (i64 n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 0) n = -n;
    std::vector<std::pair<i64, int>> out;
    if (n < 2) return out;
    for (i64 p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t old = out.size();
        i64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < old; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(i64 n) {
    if (n < 1) throw precondition_error(errc::out_of_range, "mobius of nonpositive argument");
    int k = 0;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        ++k;
    }
    return (k % 2 == 0) ? 1 : -1;
}

i64 euler_phi(i64 n) {
    i64 out = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        out -= out / p;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

BigInt int_pow(const BigInt& b, i64 e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

// Phi_n(1) for n > 1: p if n is a prime power p^k, else 1.
BigInt phi_at_one(i64 n) {
    auto f = factorize(n);
    return (f.size() == 1) ? BigInt(f[0].first) : BigInt(1);
}

// Phi_n(-1) for n > 2.
BigInt phi_at_minus_one(i64 n) {
    if (n % 2 == 1) return 1;
    i64 m = n / 2;
    if (m % 2 == 1) return phi_at_one(m);  // Phi_{2m}(x) = Phi_m(-x), m odd
    // 4 | n: Phi_n(x) = Phi_{n/2}(x^2)
    i64 t = n;
    while (t % 2 == 0) t /= 2;
    return (t == 1) ? BigInt(2) : BigInt(1);
}

}  // namespace

BigInt cyclotomic_value(i64 n, const BigInt& u, const BigInt& v) {
    if (n < 1) throw precondition_error(errc::out_of_range, "cyclotomic_value needs n >= 1");
    if (u == 0 && v == 0)
        throw precondition_error(errc::out_of_range, "cyclotomic_value at (0,0)");
    if (n == 1) return u - v;
    if (n == 2) return u + v;
    if (u == v) return phi_at_one(n) * int_pow(u, euler_phi(n));
    if (u == -v) return phi_at_minus_one(n) * int_pow(u, euler_phi(n));
    BigInt num = 1, den = 1;
    for (i64 e : divisors(n)) {
        int mu = mobius(n / e);
        if (mu == 0) continue;
        BigInt term = int_pow(u, e) - int_pow(v, e);
        if (mu == 1)
            num *= term;
        else
            den *= term;
    }
    BigInt out;
    // division is always exact
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

i64 mult_order(const BigInt& a, i64 q) {
    BigInt am = a % q;
    if (am < 0) am += q;
    i64 r = am.get_si();
    if (r == 0) throw precondition_error(errc::not_coprime, "mult_order: q divides a");
    i64 e = q - 1;
    for (auto [p, k] : factorize(q - 1)) {
        (void)k;
        while (e % p == 0 && pow_mod(r, e / p, q) == 1) e /= p;
    }
    return e;
}

i64 mult_order_naive(const BigInt& a, i64 q) {
    BigInt am = a % q;
    if (am < 0) am += q;
    i64 r = am.get_si();
    if (r == 0) throw precondition_error(errc::not_coprime, "mult_order: q divides a");
    i64 x = r % q, e = 1;
    while (x != 1) {
        x = mul_mod(x, r, q);
        ++e;
    }
    return e;
}

PrimePower decompose_n(i64 n, i64 p) {
    if (n < 1) throw precondition_error(errc::out_of_range, "decompose_n needs n >= 1");
    PrimePower pp;
    pp.n = n;
    pp.d = n;
    pp.r = 0;
    while (pp.d % p == 0) {
        pp.d /= p;
        ++pp.r;
    }
    return pp;
}

RegularityReport is_regular(i64 p, i64 bound) {
    if (p < 3 || !is_prime(p))
        throw precondition_error(errc::out_of_range, "is_regular needs an odd prime");
    if (p > bound)
        throw precondition_error(errc::out_of_range,
                                 "is_regular: p exceeds configured bound " + std::to_string(bound));
    RegularityReport rep;
    rep.p = p;
    if (p == 3) return rep;  // no even index <= p-3

    std::vector<i64> inv(p);
    inv[1] = 1;
    for (i64 i = 2; i < p; ++i) inv[i] = mul_mod(p - p / i, inv[p % i], p);

    std::vector<i64> B(p - 2);  // B_m mod p for m = 0..p-3
    B[0] = 1;
    for (i64 m = 1; m <= p - 3; ++m) {
        // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
        i64 sum = 0, binom = 1;  // binom = C(m+1, j)
        for (i64 j = 0; j < m; ++j) {
            sum = (sum + mul_mod(binom, B[j], p)) % p;
            binom = mul_mod(binom, mul_mod((m + 1 - j) % p, inv[j + 1], p), p);
        }
        B[m] = mul_mod((p - sum) % p, inv[m + 1], p);
    }
    for (i64 k = 2; k <= p - 3; k += 2)
        if (B[k] == 0) rep.irregular_indices.push_back(k);
    rep.regular = rep.irregular_indices.empty();
    return rep;
}

BigInt kappa(i64 q, int f, i64 p) {
    BigInt qf;
    mpz_ui_pow_ui(qf.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(f));
    qf -= 1;
    if (qf % p != 0)
        throw precondition_error(errc::not_divisible, "kappa: p does not divide q^f - 1");
    return qf / p;
}

namespace {

void minkowski_mpfr(i64 p, mpfr_t out) {
    const mpfr_prec_t prec = 256;
    mpfr_t pi, t;
    mpfr_init2(pi, prec);
    mpfr_init2(t, prec);
    mpfr_const_pi(pi, MPFR_RNDN);
    // (4/pi)^((p-1)/2)
    mpfr_ui_div(t, 4, pi, MPFR_RNDN);
    mpfr_pow_ui(out, t, static_cast<unsigned long>((p - 1) / 2), MPFR_RNDN);
    // * (p-1)! / (p-1)^(p-1)
    BigInt fact, den;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(p - 1));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p - 1),
                  static_cast<unsigned long>(p - 1));
    mpfr_set_z(t, fact.get_mpz_t(), MPFR_RNDN);
    mpfr_mul(out, out, t, MPFR_RNDN);
    mpfr_set_z(t, den.get_mpz_t(), MPFR_RNDN);
    mpfr_div(out, out, t, MPFR_RNDN);
    // * sqrt(p^(p-2))
    BigInt pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(p - 2));
    mpfr_set_z(t, pp.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpfr_mul(out, out, t, MPFR_RNDN);
    mpfr_clear(pi);
    mpfr_clear(t);
}

}  // namespace

double minkowski_bound(i64 p) {
    if (p < 3) throw precondition_error(errc::out_of_range, "minkowski_bound needs p >= 3");
    mpfr_t x;
    mpfr_init2(x, 256);
    minkowski_mpfr(p, x);
    double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

std::string minkowski_bound_str(i64 p, int significant_digits) {
    if (p < 3) throw precondition_error(errc::out_of_range, "minkowski_bound needs p >= 3");
    mpfr_t x;
    mpfr_init2(x, 256);
    minkowski_mpfr(p, x);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", significant_digits, x);
    mpfr_clear(x);
    return buf;
}

i64 least_primitive_root(i64 q) {
    if (!is_prime(q)) throw precondition_error(errc::out_of_range, "least_primitive_root: q not prime");
    if (q == 2) return 1;
    auto fac = factorize(q - 1);
    for (i64 g = 2; g < q; ++g) {
        bool ok = true;
        for (auto [ell, e] : fac) {
            (void)e;
            if (pow_mod(g, (q - 1) / ell, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw internal_error("least_primitive_root: none found");
}

std::vector<mpq_class> bernoulli_rationals(int max_index) {
    std::vector<mpq_class> B(max_index + 1);
    B[0] = 1;
    for (int m = 1; m <= max_index; ++m) {
        mpq_class sum = 0;
        BigInt binom = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            sum += mpq_class(binom) * B[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B[m] = -sum / (m + 1);
        B[m].canonicalize();
    }
    return B;
}

TrialFactorization trial_prime_factors(const BigInt& v, i64 bound) {
    TrialFactorization out;
    out.cofactor = abs(v);
    if (out.cofactor == 0) return out;
    for (i64 p = 2; p <= bound && out.cofactor > 1; p == 2 ? p = 3 : p += 2) {
        if (mpz_divisible_ui_p(out.cofactor.get_mpz_t(), static_cast<unsigned long>(p))) {
            out.primes.push_back(p);
            while (mpz_divisible_ui_p(out.cofactor.get_mpz_t(), static_cast<unsigned long>(p)))
                out.cofactor /= p;
        }
        if (out.cofactor > 1 && BigInt(p) * p > out.cofactor) {
            // remaining cofactor is prime; keep it if it is below the bound
            if (out.cofactor <= bound) {
                out.primes.push_back(out.cofactor.get_si());
                out.cofactor = 1;
            }
            break;
        }
    }
    return out;
}

}  // namespace cyclo
