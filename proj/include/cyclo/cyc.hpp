#pragma once

/**
 * @file cyc.hpp
 * @brief Exact elements of Z[xi, zeta] as integer-coefficient exponent
 *        tables, the Galois actions on zeta, the unit families, and
 *        formal radical words.
 *
 * The representation is intentionally non-canonical: exponents are reduced
 * mod (n, p) but no reduction modulo the cyclotomic polynomials is ever
 * performed. Equality in Z_M is never needed by any algorithm here; every
 * decision goes through residue-field evaluation. Division never occurs on
 * elements; quotients live in RadicalWord exponents.
 */

#include <map>
#include <vector>

#include "cyclo/arith.hpp"

namespace cyclo {

struct CycRing {
    i64 p = 3;  // odd prime, order of zeta
    i64 n = 1;  // order of xi
    i64 d = 1;  // n = d * p^r, gcd(d, p) = 1
    int r = 0;

    friend bool operator==(const CycRing& a, const CycRing& b) {
        return a.p == b.p && a.n == b.n;
    }
};

CycRing make_ring(i64 p, i64 n);

/// Exponent pair (i mod n, j mod p), always stored reduced.
struct ExpPair {
    i64 i = 0;
    i64 j = 0;
    friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

struct CycElem {
    CycRing ring;
    std::map<ExpPair, BigInt> coeffs;  // zero coefficients never stored
};

using Term = std::tuple<i64, i64, BigInt>;  // (i, j, c), exponents arbitrary on entry

CycElem make_elem(const CycRing& ring, const std::vector<Term>& terms);
CycElem int_embed(const CycRing& ring, const BigInt& c);
CycElem add(const CycElem& a, const CycElem& b);
CycElem neg(const CycElem& a);
CycElem mul(const CycElem& a, const CycElem& b);
CycElem elem_pow(const CycElem& a, i64 e);  // e >= 0
bool is_zero_table(const CycElem& a);
bool table_equal(const CycElem& a, const CycElem& b);

/// s_k : zeta -> zeta^k. Throws if k = 0 mod p.
CycElem galois_zeta(const CycElem& e, i64 k);

// ---------------------------------------------------------------------------
// Radical words: formal products prod elem_i ^ e_i
// ---------------------------------------------------------------------------

struct RadicalWord {
    std::vector<std::pair<CycElem, i64>> factors;  // exponents nonzero, elements nonzero tables
};

RadicalWord word_from_elem(const CycElem& e, i64 exponent = 1);
RadicalWord word_mul(const RadicalWord& a, const RadicalWord& b);
RadicalWord word_inv(const RadicalWord& a);
RadicalWord word_pow(const RadicalWord& a, i64 e);

// ---------------------------------------------------------------------------
// Unit families
// ---------------------------------------------------------------------------

/// Vandiver unit eps_k = 1 + xi zeta^k as a table. For r >= 1 the relation
/// zeta = xi^e is applied only at evaluation time, never here.
CycElem vandiver_unit(const CycRing& ring, i64 k);

enum class UnitClass { CyclotomicUnit, UnitTimesPrimeAboveP, Zero, RationalTwo };
const char* unit_class_name(UnitClass c);

/// Case split of eps_k = 1 + xi zeta^k by exact evaluation semantics:
/// Zero iff xi zeta^k = -1, RationalTwo iff xi zeta^k = 1, a generator of the
/// prime above p iff d = 2 otherwise, else a cyclotomic unit.
UnitClass classify_unit(i64 p, i64 d, int r, i64 k);

/// Totally real unit eps_a = zeta^((1-a)/2) (1+zeta^a)/(1+zeta) as a word;
/// a = 1 gives the empty word. Half exponents use inv2 = (p+1)/2.
RadicalWord real_unit_eps(const CycRing& ring, i64 a);

/// varpi_a = zeta^((1-a)/2) (1-zeta^a)/(1-zeta); a = 1 gives the empty word.
RadicalWord real_unit_varpi(const CycRing& ring, i64 a);

/// zeta^j as an element ({(0, j mod p): 1}).
CycElem zeta_power(const CycRing& ring, i64 j);

}  // namespace cyclo
