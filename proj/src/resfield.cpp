#include "cyclo/resfield.hpp"

#include <algorithm>

namespace cyclo {

namespace {

// Dense polynomials over Z/q, lowest coefficient first, trailing zeros trimmed.
using Poly = std::vector<i64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b mod (g, q), g monic of degree f.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, i64 q) {
    if (a.empty() || b.empty()) return {};
    std::size_t f = g.size() - 1;
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], q)) % q;
    }
    // reduce by monic g
    for (std::size_t k = prod.size(); k-- > f;) {
        i64 lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (std::size_t j = 0; j < f; ++j)
            prod[k - f + j] = ((prod[k - f + j] - mul_mod(lead, g[j], q)) % q + q) % q;
    }
    prod.resize(f);
    trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, BigInt e, const Poly& g, i64 q) {
    Poly acc{1};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = poly_mulmod(acc, base, g, q);
        base = poly_mulmod(base, base, g, q);
        e >>= 1;
    }
    return acc;
}

Poly poly_mod(Poly a, const Poly& b, i64 q) {
    trim(a);
    std::size_t db = b.size() - 1;
    i64 lead_inv = inv_mod(b.back(), q);
    while (a.size() > db) {
        i64 c = mul_mod(a.back(), lead_inv, q);
        std::size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = ((a[shift + j] - mul_mod(c, b[j], q)) % q + q) % q;
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, i64 q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        i64 inv = inv_mod(a.back(), q);
        for (auto& c : a) c = mul_mod(c, inv, q);
    }
    return a;
}

bool is_irreducible(const Poly& g, i64 q) {
    std::size_t f = g.size() - 1;
    Poly x = {0, 1};  // t
    Poly frob = x;
    for (std::size_t i = 1; i < f; ++i) {
        frob = poly_powmod(frob, q, g, q);
        Poly diff = frob;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % q + q) % q;
        trim(diff);
        if (diff.empty()) return false;  // t^(q^i) = t: factors of degree <= i
        Poly d = poly_gcd(g, diff, q);
        if (d.size() != 1) return false;
    }
    frob = poly_powmod(frob, q, g, q);  // t^(q^f) mod g
    return frob == x;
}

}  // namespace

FieldPtr build_field(i64 q, int f) {
    if (!is_prime(q)) throw precondition_error(errc::out_of_range, "build_field: q not prime");
    if (q >= (i64(1) << 31))
        throw precondition_error(errc::out_of_range, "build_field: q must be < 2^31");
    if (f < 1) throw precondition_error(errc::out_of_range, "build_field: f must be >= 1");
    auto field = std::make_shared<FqfField>();
    field->q = q;
    field->f = f;
    if (f == 1) {
        field->modulus = {0, 1};  // t - 0 convention
        return field;
    }
    // Odometer over (a_0, ..., a_{f-1}), last digit fastest = lexicographic
    // order; a_0 = 0 gives t | g, always reducible, so start at a_0 = 1.
    std::vector<i64> a(f, 0);
    a[0] = 1;
    for (;;) {
        Poly g(f + 1, 0);
        for (int i = 0; i < f; ++i) g[i] = a[i];
        g[f] = 1;
        if (is_irreducible(g, q)) {
            field->modulus = g;
            return field;
        }
        int pos = f - 1;
        while (pos >= 0 && a[pos] == q - 1) a[pos--] = 0;
        if (pos < 0) break;  // unreachable: an irreducible of every degree exists
        ++a[pos];
    }
    throw internal_error("build_field: no irreducible polynomial found");
}

FFElem ff_zero(const FieldPtr& field) { return FFElem{field, std::vector<i64>(field->f, 0)}; }

FFElem ff_one(const FieldPtr& field) {
    FFElem e = ff_zero(field);
    e.c[0] = 1;
    return e;
}

FFElem ff_from_int(const FieldPtr& field, const BigInt& a) {
    FFElem e = ff_zero(field);
    BigInt r = a % field->q;
    if (r < 0) r += field->q;
    e.c[0] = r.get_si();
    return e;
}

bool ff_is_zero(const FFElem& a) {
    return std::all_of(a.c.begin(), a.c.end(), [](i64 x) { return x == 0; });
}

bool ff_equal(const FFElem& a, const FFElem& b) { return a.c == b.c; }

FFElem ff_add(const FFElem& a, const FFElem& b) {
    FFElem out = a;
    for (int i = 0; i < a.field->f; ++i) out.c[i] = (out.c[i] + b.c[i]) % a.field->q;
    return out;
}

FFElem ff_sub(const FFElem& a, const FFElem& b) {
    FFElem out = a;
    for (int i = 0; i < a.field->f; ++i)
        out.c[i] = ((out.c[i] - b.c[i]) % a.field->q + a.field->q) % a.field->q;
    return out;
}

FFElem ff_mul(const FFElem& a, const FFElem& b) {
    const auto& fld = *a.field;
    if (fld.f == 1) return FFElem{a.field, {mul_mod(a.c[0], b.c[0], fld.q)}};
    Poly pa(a.c.begin(), a.c.end());
    Poly pb(b.c.begin(), b.c.end());
    trim(pa);
    trim(pb);
    Poly prod = poly_mulmod(pa, pb, fld.modulus, fld.q);
    FFElem out = ff_zero(a.field);
    for (std::size_t i = 0; i < prod.size(); ++i) out.c[i] = prod[i];
    return out;
}

FFElem ff_pow(const FFElem& a, const BigInt& e) {
    if (e < 0) throw precondition_error(errc::out_of_range, "ff_pow needs e >= 0");
    FFElem acc = ff_one(a.field), base = a;
    BigInt k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = ff_mul(acc, base);
        base = ff_mul(base, base);
        k >>= 1;
    }
    return acc;
}

FFElem ff_inv(const FFElem& a) {
    if (ff_is_zero(a)) throw precondition_error(errc::divide_by_zero, "ff_inv of zero");
    const auto& fld = *a.field;
    if (fld.f == 1) return FFElem{a.field, {inv_mod(a.c[0], fld.q)}};
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(fld.q),
                  static_cast<unsigned long>(fld.f));
    e -= 2;
    return ff_pow(a, e);
}

FFElem mu_p_root(const FieldPtr& field, i64 p) {
    BigInt order;
    mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(field->q),
                  static_cast<unsigned long>(field->f));
    order -= 1;
    if (order % p != 0)
        throw precondition_error(errc::no_root, "mu_p_root: p does not divide q^f - 1");
    BigInt exp = order / p;
    BigInt count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(field->q),
                  static_cast<unsigned long>(field->f));
    for (BigInt enc = 1; enc < count; ++enc) {
        FFElem h = ff_zero(field);
        BigInt rest = enc;
        for (int i = 0; i < field->f; ++i) {
            BigInt digit = rest % field->q;
            h.c[i] = digit.get_si();
            rest /= field->q;
        }
        FFElem w = ff_pow(h, exp);
        if (!ff_equal(w, ff_one(field))) return w;
    }
    throw internal_error("mu_p_root: exhausted field without finding a root");
}

FFElem eval_elem(const CycElem& e, i64 xi_bar, const FFElem& zeta_bar,
                 std::optional<i64> zeta_pin) {
    const FieldPtr& field = zeta_bar.field;
    i64 q = field->q;
    if (zeta_pin) {
        FFElem expect = ff_from_int(field, pow_mod(xi_bar, *zeta_pin, q));
        if (!ff_equal(zeta_bar, expect))
            throw precondition_error(errc::pin_mismatch,
                                     "eval: zeta_bar differs from xi_bar^" + std::to_string(*zeta_pin));
    }
    // collapse the xi direction first: a_j = sum_i c_ij * xi_bar^i mod q
    std::vector<i64> by_zeta(e.ring.p, 0);
    for (const auto& [key, c] : e.coeffs) {
        BigInt cm = c % q;
        if (cm < 0) cm += q;
        i64 term = mul_mod(cm.get_si(), pow_mod(xi_bar, key.i, q), q);
        by_zeta[key.j] = (by_zeta[key.j] + term) % q;
    }
    FFElem acc = ff_zero(field);
    FFElem zpow = ff_one(field);
    for (i64 j = 0; j < e.ring.p; ++j) {
        if (by_zeta[j] != 0) {
            FFElem t = zpow;
            for (auto& coef : t.c) coef = mul_mod(coef, by_zeta[j], q);
            acc = ff_add(acc, t);
        }
        if (j + 1 < e.ring.p) zpow = ff_mul(zpow, zeta_bar);
    }
    return acc;
}

WordEval eval_word(const RadicalWord& w, i64 xi_bar, const FFElem& zeta_bar,
                   std::optional<i64> zeta_pin) {
    const FieldPtr& field = zeta_bar.field;
    FFElem acc = ff_one(field);
    for (std::size_t idx = 0; idx < w.factors.size(); ++idx) {
        const auto& [elem, expo] = w.factors[idx];
        FFElem v = eval_elem(elem, xi_bar, zeta_bar, zeta_pin);
        if (ff_is_zero(v)) return WordEval{acc, idx};
        if (expo < 0) {
            v = ff_inv(v);
            acc = ff_mul(acc, ff_pow(v, BigInt(-expo)));
        } else {
            acc = ff_mul(acc, ff_pow(v, BigInt(expo)));
        }
    }
    return WordEval{acc, std::nullopt};
}

FFElem eval_word_checked(const RadicalWord& w, i64 xi_bar, const FFElem& zeta_bar,
                         std::optional<i64> zeta_pin) {
    WordEval r = eval_word(w, xi_bar, zeta_bar, zeta_pin);
    if (r.zero_index)
        throw zero_factor_error(*r.zero_index,
                                "word factor " + std::to_string(*r.zero_index) + " vanishes at Q");
    return r.value;
}

}  // namespace cyclo
