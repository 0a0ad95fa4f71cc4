#pragma once

/**
 * @file kummer.hpp
 * @brief The named radical families, total-splitting tests, and an
 *        empirical lower bound on the Kummer radical rank.
 *
 * Total splitting of the unramified primes Q in the Kummer p-extension is
 * decided purely by symbol vanishing: every generator must be a local p-th
 * power at every Q. A generator meeting Q (ZeroFactor) is outside the
 * theorem's hypotheses and forces totally_split = false with an explicit
 * skip record rather than a silent verdict.
 */

#include <string>

#include "cyclo/symbols.hpp"

namespace cyclo {

enum class FamilyLabel { Thm1, CritM, Cj3, C2, C4 };
const char* family_label_name(FamilyLabel l);

struct RadicalFamily {
    FamilyLabel label = FamilyLabel::Thm1;
    std::optional<i64> m;  // CritM only
    std::vector<RadicalWord> generators;
    std::vector<std::string> names;  // parallel to generators
};

/// eps_k eps_1^{-1} for k = 2..p-2, plus the k = p-1 generator whenever
/// eps_{p-1} is not the zero element. EmptyFamily when nothing survives
/// (p = 3 with the d = 2, r = 1 zero case).
RadicalFamily family_thm1(const SplitContext& ctx);

/// ((1+xi zeta^k) zeta^{-k^m}) / ((1+xi zeta) zeta^{-1}), k = 2..p-2.
/// BadM when m = 0 mod p.
RadicalFamily family_crit_m(const SplitContext& ctx, i64 m);

/// (1+xi zeta^k)(1+xi zeta)^{-1}, k = 2..p-2 (no k = p-1 extension).
RadicalFamily family_cj3(const SplitContext& ctx);

/// 1 + zeta^j for j = 0..p-2 (j = 0 is the rational 2).
RadicalFamily family_c2(const CycRing& ring);

/// (1 - zeta^j)(1 - zeta)^{-1} for j = 2..p-1.
RadicalFamily family_c4(const CycRing& ring);

struct FamilySpec {
    FamilyLabel label = FamilyLabel::Thm1;
    std::optional<i64> m;
    RadicalFamily build(const SplitContext& ctx) const;
};

struct SplitReport {
    i64 p = 0, q = 0, n = 0;
    FamilyLabel label = FamilyLabel::Thm1;
    std::optional<i64> m;
    std::vector<std::string> generator_names;
    // mu[q_index][gen]; nullopt marks a ZeroFactor skip
    std::vector<std::vector<std::optional<i64>>> mu;
    bool totally_split = false;
    struct Skip {
        std::size_t q_index = 0;
        std::size_t generator = 0;
        std::string reason;
    };
    std::vector<Skip> skipped;
};

/// Fills the full (Q x generator) mu matrix. totally_split iff every
/// computed mu is 0 and nothing was skipped for ZeroFactor.
SplitReport is_totally_split(const SplitContext& ctx, const RadicalFamily& fam);

/// Rank over Z/p of the matrix whose rows are per-(context, Q) symbol
/// vectors of the generators; a lower bound for the radical rank delta.
/// Rows with any undefined entry are dropped. All contexts must yield
/// families of equal width.
struct RankResult {
    i64 rank = 0;
    std::vector<i64> progression;  // rank after each context, in order
    std::size_t rows_used = 0;
    std::size_t rows_dropped = 0;
};
RankResult radical_rank_lower_bound(i64 p, const FamilySpec& spec,
                                    const std::vector<SplitContext>& contexts);

}  // namespace cyclo
