#include <doctest.h>

#include <random>

#include "cyclo/symbols.hpp"

using namespace cyclo;

namespace {

CycElem random_elem(const CycRing& ring, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5);
    std::uniform_int_distribution<i64> ei(0, ring.n - 1), ej(0, ring.p - 1);
    std::vector<Term> terms;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) terms.emplace_back(ei(rng), ej(rng), coeff(rng));
    return make_elem(ring, terms);
}

}  // namespace

TEST_CASE("table arithmetic basics") {
    CycRing ring = make_ring(3, 3);
    CHECK(is_zero_table(int_embed(ring, 0)));

    // (1 + xi)(1 - xi) = 1 - xi^2
    CycRing r5 = make_ring(3, 5);
    CycElem a = make_elem(r5, {{0, 0, 1}, {1, 0, 1}});
    CycElem b = make_elem(r5, {{0, 0, 1}, {1, 0, -1}});
    CycElem expect = make_elem(r5, {{0, 0, 1}, {2, 0, -1}});
    CHECK(table_equal(mul(a, b), expect));

    // n = 3: xi * xi^2 reduces to the constant 1
    CycElem x1 = make_elem(ring, {{1, 0, 1}});
    CycElem x2 = make_elem(ring, {{2, 0, 1}});
    CHECK(table_equal(mul(x1, x2), int_embed(ring, 1)));
}

TEST_CASE("ring laws on randomized small elements") {
    std::mt19937 rng(42);
    for (auto [p, n] : std::vector<std::pair<i64, i64>>{{3, 4}, {5, 6}, {7, 7}}) {
        CycRing ring = make_ring(p, n);
        for (int iter = 0; iter < 60; ++iter) {
            CycElem a = random_elem(ring, rng);
            CycElem b = random_elem(ring, rng);
            CycElem c = random_elem(ring, rng);
            CHECK(table_equal(add(a, b), add(b, a)));
            CHECK(table_equal(mul(a, b), mul(b, a)));
            CHECK(table_equal(mul(mul(a, b), c), mul(a, mul(b, c))));
            CHECK(table_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
            CHECK(is_zero_table(add(a, neg(a))));
        }
    }
}

TEST_CASE("galois action on zeta") {
    CycRing ring = make_ring(5, 4);
    CycElem z = make_elem(ring, {{0, 1, 1}});
    CHECK(table_equal(galois_zeta(z, 3), make_elem(ring, {{0, 3, 1}})));
    CHECK_THROWS_AS(galois_zeta(z, 5), precondition_error);

    CycElem e = make_elem(ring, {{0, 0, 1}, {1, 1, 1}});  // 1 + xi zeta
    CHECK(table_equal(galois_zeta(e, 4), make_elem(ring, {{0, 0, 1}, {1, 4, 1}})));

    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        CycElem a = random_elem(ring, rng);
        CycElem b = random_elem(ring, rng);
        // group action and multiplicativity
        CHECK(table_equal(galois_zeta(galois_zeta(a, 2), 3), galois_zeta(a, 6 % 5)));
        CHECK(table_equal(galois_zeta(mul(a, b), 3), mul(galois_zeta(a, 3), galois_zeta(b, 3))));
    }
}

TEST_CASE("vandiver unit tables") {
    CycRing ring = make_ring(5, 4);
    CHECK(table_equal(vandiver_unit(ring, 0), make_elem(ring, {{0, 0, 1}, {1, 0, 1}})));
    CHECK(table_equal(vandiver_unit(ring, 3), make_elem(ring, {{0, 0, 1}, {1, 3, 1}})));
    // n = 1: xi = 1 so eps_0 = 2 as a table
    CycRing r1 = make_ring(5, 1);
    CHECK(table_equal(vandiver_unit(r1, 0), int_embed(r1, 2)));
}

TEST_CASE("classify_unit case split") {
    CHECK(classify_unit(7, 5, 0, 3) == UnitClass::CyclotomicUnit);
    CHECK(classify_unit(7, 2, 0, 2) == UnitClass::UnitTimesPrimeAboveP);
    CHECK(classify_unit(7, 1, 0, 0) == UnitClass::RationalTwo);
    CHECK(classify_unit(7, 2, 1, 6) == UnitClass::Zero);
    CHECK(classify_unit(7, 2, 0, 0) == UnitClass::Zero);       // n = 2: 1 + (-1)
    CHECK(classify_unit(7, 1, 1, 6) == UnitClass::RationalTwo);  // 1 + zeta^p = 2
    CHECK(classify_unit(7, 2, 2, 6) == UnitClass::UnitTimesPrimeAboveP);
    CHECK(classify_unit(7, 1, 1, 0) == UnitClass::CyclotomicUnit);
    CHECK(classify_unit(7, 1, 0, 3) == UnitClass::CyclotomicUnit);

    // Zero exactly on d=2 with trivial p-part, for k >= 1 only at (2,1,p-1)
    for (i64 d = 1; d <= 6; ++d)
        for (int r = 0; r <= 2; ++r)
            for (i64 k = 1; k <= 6; ++k) {
                bool zero = classify_unit(7, d, r, k) == UnitClass::Zero;
                CHECK(zero == (d == 2 && r == 1 && k == 6));
            }
}

TEST_CASE("real unit words") {
    CycRing ring = make_ring(5, 1);
    CHECK(real_unit_eps(ring, 1).factors.empty());
    CHECK(real_unit_varpi(ring, 1).factors.empty());

    // p=5, a=2: zeta^{(1-2)*3 mod 5} = zeta^2, then (1+zeta^2), (1+zeta)^{-1}
    RadicalWord w = real_unit_eps(ring, 2);
    REQUIRE(w.factors.size() == 3);
    CHECK(table_equal(w.factors[0].first, make_elem(ring, {{0, 2, 1}})));
    CHECK(w.factors[0].second == 1);
    CHECK(table_equal(w.factors[1].first, make_elem(ring, {{0, 0, 1}, {0, 2, 1}})));
    CHECK(w.factors[2].second == -1);

    // p=5, a=3 varpi: exponent (1-3)*3 = -6 = 4 mod 5
    RadicalWord v = real_unit_varpi(ring, 3);
    REQUIRE(v.factors.size() == 3);
    CHECK(table_equal(v.factors[0].first, make_elem(ring, {{0, 4, 1}})));
    CHECK(table_equal(v.factors[1].first, make_elem(ring, {{0, 0, 1}, {0, 3, -1}})));
}

TEST_CASE("word algebra") {
    CycRing ring = make_ring(3, 4);
    RadicalWord w = word_from_elem(vandiver_unit(ring, 1));
    w = word_mul(w, word_from_elem(vandiver_unit(ring, 2), -2));
    CHECK(word_mul(w, RadicalWord{}).factors.size() == w.factors.size());
    RadicalWord winv = word_inv(word_inv(w));
    REQUIRE(winv.factors.size() == w.factors.size());
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        CHECK(table_equal(winv.factors[i].first, w.factors[i].first));
        CHECK(winv.factors[i].second == w.factors[i].second);
    }
    CHECK_THROWS_AS(word_from_elem(int_embed(ring, 0)), precondition_error);
}

TEST_CASE("evaluated unit identities eps'_{p-a} = eps'_a and varpi_{p-a} = -varpi_a") {
    for (i64 p : {5, 7, 11, 13}) {
        // an f = 1 context (q = 1 mod p via free context with n = p) and an
        // f > 1 context (q | u - v style)
        std::vector<SplitContext> ctxs;
        for (i64 q : primes_in(p + 1, 4000)) {
            if ((q - 1) % p == 0) {
                ctxs.push_back(build_context_free(p, q, p, 0));
                break;
            }
        }
        ctxs.push_back(build_context(p, 7 == p ? 11 : 7, 1 + (7 == p ? 11 : 7), 1));  // n = 1
        for (const auto& ctx : ctxs) {
            for (i64 a = 1; a <= p - 1; ++a) {
                RadicalWord ea = real_unit_eps(ctx.ring, a);
                RadicalWord eb = real_unit_eps(ctx.ring, p - a);
                for (std::size_t qi = 0; qi < ctx.q_list.size(); ++qi) {
                    FFElem va = eval_word_checked(ea, ctx.xi_bar, ctx.q_list[qi], ctx.zeta_pin);
                    FFElem vb = eval_word_checked(eb, ctx.xi_bar, ctx.q_list[qi], ctx.zeta_pin);
                    CHECK(ff_equal(va, vb));
                    RadicalWord wa = real_unit_varpi(ctx.ring, a);
                    RadicalWord wb = real_unit_varpi(ctx.ring, p - a);
                    FFElem ua = eval_word_checked(wa, ctx.xi_bar, ctx.q_list[qi], ctx.zeta_pin);
                    FFElem ub = eval_word_checked(wb, ctx.xi_bar, ctx.q_list[qi], ctx.zeta_pin);
                    CHECK(ff_equal(ua, ff_sub(ff_zero(ctx.field), ub)));
                }
            }
        }
    }
}

TEST_CASE("zero classification matches evaluation on (d, r) grids") {
    for (i64 p : {3, 5}) {
        for (i64 d = 1; d <= 6; ++d) {
            if (d % p == 0) continue;  // (d, r) must be a genuine decomposition
            for (int r = 0; r <= 2; ++r) {
                i64 n = d;
                for (int i = 0; i < r; ++i) n *= p;
                // a couple of odd primes q = 1 mod n, q != p
                int found = 0;
                for (i64 q : primes_in(3, 100000)) {
                    if (q == p || (q - 1) % n != 0) continue;
                    if (++found > 2) break;
                    i64 g = least_primitive_root(q);
                    i64 xi_bar = pow_mod(g, (q - 1) / n, q);
                    SplitContext ctx = n > 2 ? build_context_free(p, q, n, 0)
                                             : build_context(p, q, 1, xi_bar);
                    if (ctx.n != n) continue;  // n <= 2 fallback may differ
                    for (i64 k = 0; k <= p - 1; ++k) {
                        CycElem eps = vandiver_unit(ctx.ring, k);
                        bool zero_class = classify_unit(p, d, r, k) == UnitClass::Zero;
                        for (std::size_t qi = 0; qi < ctx.q_list.size(); ++qi) {
                            FFElem val = eval_elem(eps, ctx.xi_bar, ctx.q_list[qi], ctx.zeta_pin);
                            CHECK(ff_is_zero(val) == zero_class);
                        }
                    }
                }
            }
        }
    }
}
