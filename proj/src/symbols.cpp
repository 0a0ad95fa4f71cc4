#include "cyclo/symbols.hpp"

#include <algorithm>

namespace cyclo {

namespace {

// Exponent e with zeta = xi^e in pinned contexts: zeta_r = xi^c for the CRT
// solution c = 1 mod p^r, c = 0 mod d, and zeta = zeta_r^{p^{r-1}}.
i64 pin_exponent(i64 n, i64 d, int r, i64 p) {
    i64 pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    i64 c = (d * inv_mod(d % pr, pr)) % n;
    i64 e = c % n;
    for (int i = 0; i < r - 1; ++i) e = (e * p) % n;  // e = c * p^{r-1} mod n
    return e;
}

// Smallest positive coset representatives of <q mod p> in (Z/p)^x, ascending.
std::vector<i64> coset_reps(i64 p, i64 q) {
    std::vector<bool> covered(p, false);
    std::vector<i64> reps;
    i64 qm = ((q % p) + p) % p;
    for (i64 m = 1; m < p; ++m) {
        if (covered[m]) continue;
        reps.push_back(m);
        i64 x = m;
        while (!covered[x]) {
            covered[x] = true;
            x = mul_mod(x, qm, p);
        }
    }
    return reps;
}

SplitContext finish_context(i64 p, i64 q, i64 xi_bar,
                            std::optional<std::pair<BigInt, BigInt>> uv) {
    SplitContext ctx;
    ctx.p = p;
    ctx.q = q;
    ctx.uv = std::move(uv);
    ctx.xi_bar = xi_bar;
    ctx.n = mult_order(BigInt(xi_bar), q);
    auto pp = decompose_n(ctx.n, p);
    ctx.d = pp.d;
    ctx.r = pp.r;
    ctx.f = (ctx.r >= 1) ? 1 : static_cast<int>(mult_order(BigInt(q), p));
    ctx.kappa_value = kappa(q, ctx.f, p);
    ctx.field = build_field(q, ctx.f);
    ctx.ring = make_ring(p, ctx.n);
    if (ctx.r >= 1) {
        i64 e = pin_exponent(ctx.n, ctx.d, ctx.r, p);
        ctx.zeta_pin = e;
        ctx.q_list.push_back(ff_from_int(ctx.field, pow_mod(xi_bar, e, q)));
    } else {
        FFElem w = mu_p_root(ctx.field, p);
        for (i64 m : coset_reps(p, q)) ctx.q_list.push_back(ff_pow(w, BigInt(m)));
    }
    return ctx;
}

}  // namespace

SplitContext build_context(i64 p, i64 q, const BigInt& u, const BigInt& v) {
    if (p < 3 || !is_prime(p)) throw precondition_error(errc::out_of_range, "p must be an odd prime");
    if (!is_prime(q)) throw precondition_error(errc::out_of_range, "q must be prime");
    if (q >= (i64(1) << 31)) throw precondition_error(errc::out_of_range, "q must be < 2^31");
    if (gcd(u, v) != 1) throw precondition_error(errc::not_coprime, "u, v must be coprime");
    if (q == p || u % q == 0 || v % q == 0)
        throw precondition_error(errc::divides_puv, "q divides p*u*v");
    BigInt um = u % q;
    if (um < 0) um += q;
    BigInt vm = v % q;
    if (vm < 0) vm += q;
    i64 xi_bar = mul_mod(vm.get_si(), inv_mod(um.get_si(), q), q);
    return finish_context(p, q, xi_bar, std::make_pair(u, v));
}

SplitContext build_context_free(i64 p, i64 q, i64 n, int xi_choice_index) {
    if (p < 3 || !is_prime(p)) throw precondition_error(errc::out_of_range, "p must be an odd prime");
    if (!is_prime(q)) throw precondition_error(errc::out_of_range, "q must be prime");
    if (n <= 2) throw precondition_error(errc::bad_n, "n must exceed 2");
    if ((q - 1) % n != 0) throw precondition_error(errc::bad_n, "n does not divide q-1");
    if (q == p) throw precondition_error(errc::divides_puv, "q divides p*n");
    i64 phi = euler_phi(n);
    if (xi_choice_index < 0 || xi_choice_index >= phi)
        throw precondition_error(errc::out_of_range, "xi_choice_index out of range [0, phi(n))");
    i64 s = 0;
    int seen = -1;
    for (i64 cand = 1; cand <= n; ++cand) {
        if (gcd_ll(cand, n) == 1 && ++seen == xi_choice_index) {
            s = cand;
            break;
        }
    }
    i64 g = least_primitive_root(q);
    i64 xi_bar = pow_mod(g, (q - 1) / n * s, q);
    return finish_context(p, q, xi_bar, std::nullopt);
}

i64 mu_p_log(const SplitContext& ctx, std::size_t q_index, const FFElem& value) {
    const FFElem& zb = ctx.q_list.at(q_index);
    FFElem cur = ff_one(ctx.field);
    for (i64 m = 0; m < ctx.p; ++m) {
        if (ff_equal(cur, value)) return m;
        cur = ff_mul(cur, zb);
    }
    throw internal_error("residue symbol: value not in mu_p (NotInMuP)");
}

SymbolValue residue_symbol(const SplitContext& ctx, std::size_t q_index, const RadicalWord& w) {
    const FFElem& zb = ctx.q_list.at(q_index);
    FFElem v = eval_word_checked(w, ctx.xi_bar, zb, ctx.zeta_pin);
    FFElem target = ff_pow(v, ctx.kappa_value);
    return SymbolValue{mu_p_log(ctx, q_index, target)};
}

SymbolValue symbol_of_zeta(const SplitContext& ctx, std::size_t q_index) {
    (void)q_index;  // independent of the prime
    BigInt m = ctx.kappa_value % ctx.p;
    return SymbolValue{m.get_si()};
}

SymbolValue symbol_of_int(const SplitContext& ctx, std::size_t q_index, const BigInt& a) {
    if (a % ctx.q == 0) throw zero_factor_error(0, "q divides the rational argument");
    FFElem v = ff_from_int(ctx.field, a);
    FFElem target = ff_pow(v, ctx.kappa_value);
    return SymbolValue{mu_p_log(ctx, q_index, target)};
}

}  // namespace cyclo
