#include "cyclo/cyc.hpp"

namespace cyclo {

namespace {

i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

void check_same_ring(const CycRing& a, const CycRing& b) {
    if (!(a == b))
        throw precondition_error(errc::ring_mismatch,
                                 "elements live in different rings (p=" + std::to_string(a.p) +
                                     ",n=" + std::to_string(a.n) + ") vs (p=" + std::to_string(b.p) +
                                     ",n=" + std::to_string(b.n) + ")");
}

void add_term(CycElem& e, i64 i, i64 j, const BigInt& c) {
    if (c == 0) return;
    ExpPair key{mod_floor(i, e.ring.n), mod_floor(j, e.ring.p)};
    auto it = e.coeffs.find(key);
    if (it == e.coeffs.end()) {
        e.coeffs.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) e.coeffs.erase(it);
    }
}

}  // namespace

CycRing make_ring(i64 p, i64 n) {
    if (p < 3 || !is_prime(p)) throw precondition_error(errc::out_of_range, "ring needs odd prime p");
    if (n < 1) throw precondition_error(errc::out_of_range, "ring needs n >= 1");
    auto pp = decompose_n(n, p);
    return CycRing{p, n, pp.d, pp.r};
}

CycElem make_elem(const CycRing& ring, const std::vector<Term>& terms) {
    CycElem e{ring, {}};
    for (const auto& [i, j, c] : terms) add_term(e, i, j, c);
    return e;
}

CycElem int_embed(const CycRing& ring, const BigInt& c) {
    CycElem e{ring, {}};
    add_term(e, 0, 0, c);
    return e;
}

CycElem add(const CycElem& a, const CycElem& b) {
    check_same_ring(a.ring, b.ring);
    CycElem out = a;
    for (const auto& [key, c] : b.coeffs) add_term(out, key.i, key.j, c);
    return out;
}

CycElem neg(const CycElem& a) {
    CycElem out{a.ring, {}};
    for (const auto& [key, c] : a.coeffs) out.coeffs.emplace(key, -c);
    return out;
}

CycElem mul(const CycElem& a, const CycElem& b) {
    check_same_ring(a.ring, b.ring);
    CycElem out{a.ring, {}};
    for (const auto& [ka, ca] : a.coeffs)
        for (const auto& [kb, cb] : b.coeffs) add_term(out, ka.i + kb.i, ka.j + kb.j, ca * cb);
    return out;
}

CycElem elem_pow(const CycElem& a, i64 e) {
    if (e < 0) throw precondition_error(errc::out_of_range, "elem_pow needs e >= 0");
    CycElem acc = int_embed(a.ring, 1), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_zero_table(const CycElem& a) { return a.coeffs.empty(); }

bool table_equal(const CycElem& a, const CycElem& b) {
    return a.ring == b.ring && a.coeffs == b.coeffs;
}

CycElem galois_zeta(const CycElem& e, i64 k) {
    if (mod_floor(k, e.ring.p) == 0)
        throw precondition_error(errc::not_coprime, "galois_zeta: k = 0 mod p");
    CycElem out{e.ring, {}};
    for (const auto& [key, c] : e.coeffs) add_term(out, key.i, key.j * k, c);
    return out;
}

// ---------------------------------------------------------------------------

RadicalWord word_from_elem(const CycElem& e, i64 exponent) {
    if (is_zero_table(e))
        throw precondition_error(errc::semantic_error, "zero element cannot enter a radical word");
    RadicalWord w;
    if (exponent != 0) w.factors.emplace_back(e, exponent);
    return w;
}

RadicalWord word_mul(const RadicalWord& a, const RadicalWord& b) {
    RadicalWord out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

RadicalWord word_inv(const RadicalWord& a) {
    RadicalWord out = a;
    for (auto& [e, exp] : out.factors) exp = -exp;
    return out;
}

RadicalWord word_pow(const RadicalWord& a, i64 e) {
    RadicalWord out;
    if (e == 0) return out;
    out = a;
    for (auto& [el, exp] : out.factors) exp *= e;
    return out;
}

// ---------------------------------------------------------------------------

CycElem vandiver_unit(const CycRing& ring, i64 k) {
    if (k < 0 || k > ring.p - 1)
        throw precondition_error(errc::out_of_range, "vandiver_unit needs 0 <= k <= p-1");
    return make_elem(ring, {{0, 0, 1}, {1, k, 1}});
}

const char* unit_class_name(UnitClass c) {
    switch (c) {
        case UnitClass::CyclotomicUnit: return "CyclotomicUnit";
        case UnitClass::UnitTimesPrimeAboveP: return "UnitTimesPrimeAboveP";
        case UnitClass::Zero: return "Zero";
        case UnitClass::RationalTwo: return "RationalTwo";
    }
    return "?";
}

UnitClass classify_unit(i64 p, i64 d, int r, i64 k) {
    if (k < 0 || k > p - 1)
        throw precondition_error(errc::out_of_range, "classify_unit needs 0 <= k <= p-1");
    // xi zeta^k is a root of unity; eps_k = 0 iff it equals -1 and
    // eps_k = 2 iff it equals 1. Both happen exactly when the zeta_r part
    // dies: r = 0 with k = 0, or r = 1 with k = p-1.
    bool unity_part_trivial = (r == 0 && k == 0) || (r == 1 && k == p - 1);
    if (d == 2) return unity_part_trivial ? UnitClass::Zero : UnitClass::UnitTimesPrimeAboveP;
    if (d == 1) return unity_part_trivial ? UnitClass::RationalTwo : UnitClass::CyclotomicUnit;
    return UnitClass::CyclotomicUnit;
}

CycElem zeta_power(const CycRing& ring, i64 j) {
    return make_elem(ring, {{0, j, 1}});
}

namespace {

RadicalWord real_unit_word(const CycRing& ring, i64 a, int sign) {
    if (a < 1 || a > ring.p - 1)
        throw precondition_error(errc::out_of_range, "real unit needs 1 <= a <= p-1");
    RadicalWord w;
    if (a == 1) return w;
    i64 inv2 = (ring.p + 1) / 2;
    i64 half = mod_floor((1 - a) * inv2, ring.p);
    w = word_from_elem(zeta_power(ring, half));
    w = word_mul(w, word_from_elem(make_elem(ring, {{0, 0, 1}, {0, a, sign}})));
    w = word_mul(w, word_from_elem(make_elem(ring, {{0, 0, 1}, {0, 1, sign}}), -1));
    return w;
}

}  // namespace

RadicalWord real_unit_eps(const CycRing& ring, i64 a) { return real_unit_word(ring, a, +1); }

RadicalWord real_unit_varpi(const CycRing& ring, i64 a) { return real_unit_word(ring, a, -1); }

}  // namespace cyclo
