#include "cyclo/kummer.hpp"

namespace cyclo {

const char* family_label_name(FamilyLabel l) {
    switch (l) {
        case FamilyLabel::Thm1: return "Thm1";
        case FamilyLabel::CritM: return "CritM";
        case FamilyLabel::Cj3: return "Cj3";
        case FamilyLabel::C2: return "C2";
        case FamilyLabel::C4: return "C4";
    }
    return "?";
}

namespace {

// Generators eps_k eps_1^{-1}, k = 2..p-2; optionally the k = p-1 generator
// when eps_{p-1} is nonzero. Shared by Thm1 / Cj3 / the cj2 driver.
RadicalFamily quotient_family(const SplitContext& ctx, bool with_last, FamilyLabel label) {
    RadicalFamily fam;
    fam.label = label;
    CycElem eps1 = vandiver_unit(ctx.ring, 1);
    for (i64 k = 2; k <= ctx.p - 2; ++k) {
        RadicalWord w = word_from_elem(vandiver_unit(ctx.ring, k));
        w = word_mul(w, word_from_elem(eps1, -1));
        fam.generators.push_back(w);
        fam.names.push_back("eps_" + std::to_string(k) + "/eps_1");
    }
    if (with_last && classify_unit(ctx.p, ctx.d, ctx.r, ctx.p - 1) != UnitClass::Zero) {
        RadicalWord w = word_from_elem(vandiver_unit(ctx.ring, ctx.p - 1));
        w = word_mul(w, word_from_elem(eps1, -1));
        fam.generators.push_back(w);
        fam.names.push_back("eps_" + std::to_string(ctx.p - 1) + "/eps_1");
    }
    return fam;
}

}  // namespace

RadicalFamily family_thm1(const SplitContext& ctx) {
    RadicalFamily fam = quotient_family(ctx, /*with_last=*/true, FamilyLabel::Thm1);
    if (fam.generators.empty())
        throw precondition_error(errc::empty_family,
                                 "family_thm1: no nonzero generators (p = 3, eps_2 = 0)");
    return fam;
}

RadicalFamily family_cj3(const SplitContext& ctx) {
    RadicalFamily fam = quotient_family(ctx, /*with_last=*/false, FamilyLabel::Cj3);
    if (fam.generators.empty())
        throw precondition_error(errc::empty_family, "family_cj3: empty generator range (p = 3)");
    return fam;
}

RadicalFamily family_crit_m(const SplitContext& ctx, i64 m) {
    if (((m % ctx.p) + ctx.p) % ctx.p == 0)
        throw precondition_error(errc::bad_m, "family_crit_m: m = 0 mod p");
    RadicalFamily fam;
    fam.label = FamilyLabel::CritM;
    fam.m = m;
    for (i64 k = 2; k <= ctx.p - 2; ++k) {
        i64 km = pow_mod(k, m, ctx.p);
        RadicalWord w = word_from_elem(vandiver_unit(ctx.ring, k));
        if (km != 0) w = word_mul(w, word_from_elem(zeta_power(ctx.ring, 1), -km));
        w = word_mul(w, word_from_elem(vandiver_unit(ctx.ring, 1), -1));
        w = word_mul(w, word_from_elem(zeta_power(ctx.ring, 1), 1));
        fam.generators.push_back(w);
        fam.names.push_back("eps_" + std::to_string(k) + " zeta^-" + std::to_string(km) +
                            " / eps_1 zeta^-1");
    }
    if (fam.generators.empty())
        throw precondition_error(errc::empty_family, "family_crit_m: empty generator range (p = 3)");
    return fam;
}

RadicalFamily family_c2(const CycRing& ring) {
    RadicalFamily fam;
    fam.label = FamilyLabel::C2;
    for (i64 j = 0; j <= ring.p - 2; ++j) {
        fam.generators.push_back(word_from_elem(make_elem(ring, {{0, 0, 1}, {0, j, 1}})));
        fam.names.push_back("1+zeta^" + std::to_string(j));
    }
    return fam;
}

RadicalFamily family_c4(const CycRing& ring) {
    RadicalFamily fam;
    fam.label = FamilyLabel::C4;
    CycElem one_minus_zeta = make_elem(ring, {{0, 0, 1}, {0, 1, -1}});
    for (i64 j = 2; j <= ring.p - 1; ++j) {
        RadicalWord w = word_from_elem(make_elem(ring, {{0, 0, 1}, {0, j, -1}}));
        w = word_mul(w, word_from_elem(one_minus_zeta, -1));
        fam.generators.push_back(w);
        fam.names.push_back("(1-zeta^" + std::to_string(j) + ")/(1-zeta)");
    }
    return fam;
}

RadicalFamily FamilySpec::build(const SplitContext& ctx) const {
    switch (label) {
        case FamilyLabel::Thm1: return family_thm1(ctx);
        case FamilyLabel::CritM:
            if (!m) throw precondition_error(errc::bad_m, "CritM family needs m");
            return family_crit_m(ctx, *m);
        case FamilyLabel::Cj3: return family_cj3(ctx);
        case FamilyLabel::C2: return family_c2(ctx.ring);
        case FamilyLabel::C4: return family_c4(ctx.ring);
    }
    throw internal_error("unknown family label");
}

SplitReport is_totally_split(const SplitContext& ctx, const RadicalFamily& fam) {
    SplitReport rep;
    rep.p = ctx.p;
    rep.q = ctx.q;
    rep.n = ctx.n;
    rep.label = fam.label;
    rep.m = fam.m;
    rep.generator_names = fam.names;
    rep.totally_split = true;
    rep.mu.assign(ctx.q_list.size(), std::vector<std::optional<i64>>(fam.generators.size()));
    for (std::size_t qi = 0; qi < ctx.q_list.size(); ++qi) {
        for (std::size_t gi = 0; gi < fam.generators.size(); ++gi) {
            WordEval ev = eval_word(fam.generators[gi], ctx.xi_bar, ctx.q_list[qi], ctx.zeta_pin);
            if (ev.zero_index) {
                rep.skipped.push_back(
                    {qi, gi, "factor " + std::to_string(*ev.zero_index) + " vanishes at Q"});
                rep.totally_split = false;  // Q divides the radical
                continue;
            }
            FFElem target = ff_pow(ev.value, ctx.kappa_value);
            i64 mu = mu_p_log(ctx, qi, target);
            rep.mu[qi][gi] = mu;
            if (mu != 0) rep.totally_split = false;
        }
    }
    return rep;
}

RankResult radical_rank_lower_bound(i64 p, const FamilySpec& spec,
                                    const std::vector<SplitContext>& contexts) {
    if (contexts.empty())
        throw precondition_error(errc::empty_family, "rank bound needs at least one context");
    RankResult res;
    std::vector<std::vector<i64>> basis;  // row-echelon rows mod p
    std::size_t width = 0;
    bool width_set = false;

    auto rank_insert = [&](std::vector<i64> row) {
        for (const auto& b : basis) {
            std::size_t lead = 0;
            while (lead < width && b[lead] == 0) ++lead;
            if (lead < width && row[lead] != 0) {
                i64 c = mul_mod(row[lead], inv_mod(b[lead], p), p);
                for (std::size_t j = lead; j < width; ++j)
                    row[j] = ((row[j] - mul_mod(c, b[j], p)) % p + p) % p;
            }
        }
        bool nonzero = false;
        for (i64 x : row)
            if (x != 0) nonzero = true;
        if (nonzero) basis.push_back(std::move(row));
    };

    for (const auto& ctx : contexts) {
        if (ctx.p != p)
            throw precondition_error(errc::out_of_range, "rank bound: context has different p");
        RadicalFamily fam = spec.build(ctx);
        if (!width_set) {
            width = fam.generators.size();
            width_set = true;
        } else if (fam.generators.size() != width) {
            throw precondition_error(errc::empty_family,
                                     "rank bound: incompatible family widths " +
                                         std::to_string(width) + " vs " +
                                         std::to_string(fam.generators.size()));
        }
        SplitReport rep = is_totally_split(ctx, fam);
        for (std::size_t qi = 0; qi < rep.mu.size(); ++qi) {
            bool complete = true;
            std::vector<i64> row(width, 0);
            for (std::size_t gi = 0; gi < width; ++gi) {
                if (!rep.mu[qi][gi]) {
                    complete = false;
                    break;
                }
                row[gi] = *rep.mu[qi][gi];
            }
            if (!complete) {
                ++res.rows_dropped;
                continue;
            }
            ++res.rows_used;
            rank_insert(std::move(row));
        }
        res.progression.push_back(static_cast<i64>(basis.size()));
    }
    res.rank = static_cast<i64>(basis.size());
    return res;
}

}  // namespace cyclo
