#pragma once

/**
 * @file resfield.hpp
 * @brief Deterministic construction of F_{q^f}, order-p root extraction,
 *        and evaluation of cyclotomic elements and radical words at a
 *        prime above q.
 *
 * Modulus and generator searches are deterministic (stated enumeration
 * orders) so that reports are bit-stable. q < 2^31 keeps coefficient
 * products in one 64-bit multiply; exponents q^f - 1 are arbitrary
 * precision.
 */

#include <memory>
#include <optional>

#include "cyclo/cyc.hpp"

namespace cyclo {

struct FqfField {
    i64 q = 2;
    int f = 1;
    std::vector<i64> modulus;  // length f+1, constant term first, monic; {0,1} when f = 1
};

using FieldPtr = std::shared_ptr<const FqfField>;

struct FFElem {
    FieldPtr field;
    std::vector<i64> c;  // length f, entries in [0, q)
};

/// Modulus is the first irreducible monic t^f + a_{f-1} t^{f-1} + ... + a_0
/// in lexicographic order of (a_0, a_1, ..., a_{f-1}); irreducibility by the
/// distinct-degree criterion gcd(t^{q^i} - t, g) = 1 for i < f and
/// t^{q^f} = t mod g.
FieldPtr build_field(i64 q, int f);

FFElem ff_zero(const FieldPtr& field);
FFElem ff_one(const FieldPtr& field);
FFElem ff_from_int(const FieldPtr& field, const BigInt& a);
bool ff_is_zero(const FFElem& a);
bool ff_equal(const FFElem& a, const FFElem& b);

FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_sub(const FFElem& a, const FFElem& b);
FFElem ff_mul(const FFElem& a, const FFElem& b);
FFElem ff_pow(const FFElem& a, const BigInt& e);  // e >= 0
FFElem ff_inv(const FFElem& a);                   // DivideByZero on 0

/// First nonzero h, by ascending integer encoding c_0 + c_1 q + ..., with
/// h^((q^f-1)/p) != 1; returns that power, an element of order exactly p.
FFElem mu_p_root(const FieldPtr& field, i64 p);

/// Evaluate sum c_ij xi_bar^i zeta_bar^j. When zeta_pin = e is present
/// (pinned contexts, r >= 1) requires zeta_bar = xi_bar^e, else PinMismatch.
FFElem eval_elem(const CycElem& e, i64 xi_bar, const FFElem& zeta_bar,
                 std::optional<i64> zeta_pin = std::nullopt);

struct WordEval {
    FFElem value;                          // undefined if zero_index is set
    std::optional<std::size_t> zero_index;  // first factor evaluating to 0
};

WordEval eval_word(const RadicalWord& w, i64 xi_bar, const FFElem& zeta_bar,
                   std::optional<i64> zeta_pin = std::nullopt);

/// Throwing variant: ZeroFactor carries the vanishing factor index.
FFElem eval_word_checked(const RadicalWord& w, i64 xi_bar, const FFElem& zeta_bar,
                         std::optional<i64> zeta_pin = std::nullopt);

}  // namespace cyclo
