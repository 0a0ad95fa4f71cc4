#pragma once

/**
 * @file symbols.hpp
 * @brief The full arithmetic situation for a pair (p, q): residue field,
 *        the primes Q above q as zeta-orbit representatives, and p-th
 *        power residue symbols on radical words.
 *
 * Symbols follow the residue-field definition: alpha^kappa = zeta_bar^mu
 * with kappa = (q^f - 1)/p; mu is recovered by a linear scan over the p
 * candidates. Contexts are immutable after construction and own their
 * field; symbol computations are pure.
 */

#include <optional>
#include <utility>

#include "cyclo/resfield.hpp"

namespace cyclo {

struct SplitContext {
    i64 p = 3;
    i64 q = 5;
    std::optional<std::pair<BigInt, BigInt>> uv;  // absent for free contexts
    i64 n = 1;
    i64 d = 1;
    int r = 0;
    int f = 1;
    BigInt kappa_value;
    i64 xi_bar = 1;
    FieldPtr field;
    std::vector<FFElem> q_list;        // one zeta_bar per prime Q above q
    std::optional<i64> zeta_pin;       // e with zeta = xi^e, present iff r >= 1
    CycRing ring;
};

/// Context for the prime ideal (q, u xi - v): n = ord(v/u mod q),
/// xi_bar = v u^{-1}. Throws DividesPUV when q | p*u*v.
SplitContext build_context(i64 p, i64 q, const BigInt& u, const BigInt& v);

/// Context without a (u,v) pair: xi_bar = g^{(q-1)/n * s} where g is the
/// least primitive root mod q and s is the xi_choice_index-th unit mod n in
/// ascending order. Requires n | q-1, n > 2 (BadN otherwise).
SplitContext build_context_free(i64 p, i64 q, i64 n, int xi_choice_index);

struct SymbolValue {
    i64 mu = 0;  // additive representative in [0, p)
};

/// mu with eval(w)^kappa = zeta_bar^mu at the chosen prime.
/// ZeroFactor if some factor of w meets Q; NotInMuP is an internal fault.
SymbolValue residue_symbol(const SplitContext& ctx, std::size_t q_index, const RadicalWord& w);

/// Symbol of zeta itself: kappa mod p, independent of the prime.
SymbolValue symbol_of_zeta(const SplitContext& ctx, std::size_t q_index);

/// Symbol of a rational integer a (ZeroFactor when q | a).
SymbolValue symbol_of_int(const SplitContext& ctx, std::size_t q_index, const BigInt& a);

/// Discrete log of a mu_p element against zeta_bar; internal fault when the
/// argument is not in mu_p.
i64 mu_p_log(const SplitContext& ctx, std::size_t q_index, const FFElem& value);

}  // namespace cyclo
