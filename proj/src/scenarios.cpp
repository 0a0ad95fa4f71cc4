#include "cyclo/scenarios.hpp"

#include <fstream>
#include <sstream>

#include "cyclo/parallel.hpp"

namespace cyclo {

const char* principality_name(Principality p) {
    switch (p) {
        case Principality::Principal: return "Principal";
        case Principality::NotPrincipal: return "NotPrincipal";
        case Principality::Unknown: return "Unknown";
    }
    return "?";
}

Policy Policy::from_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error(errc::out_of_range, "cannot open policy table " + path);
    Policy p;
    p.mode = Mode::SuppliedTable;
    p.table_path = path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        i64 q;
        int flag;
        if (!(ls >> q)) continue;  // blank/comment line
        if (!(ls >> flag) || (flag != 0 && flag != 1))
            throw precondition_error(errc::out_of_range,
                                     "policy table " + path + ": bad line " + std::to_string(lineno));
        p.table[q] = (flag == 1);
    }
    return p;
}

Principality p_principality(i64 q, i64 p, const Policy& policy) {
    if (q == p) throw precondition_error(errc::out_of_range, "p_principality needs q != p");
    switch (policy.mode) {
        case Policy::Mode::RegularAutomatic: {
            if (!is_regular(p).regular)
                throw precondition_error(errc::policy_misuse,
                                         "RegularAutomatic requested for irregular p = " +
                                             std::to_string(p));
            return Principality::Principal;  // p does not divide h_K
        }
        case Policy::Mode::SuppliedTable: {
            auto it = policy.table.find(q);
            if (it == policy.table.end()) return Principality::Unknown;
            return it->second ? Principality::Principal : Principality::NotPrincipal;
        }
        case Policy::Mode::Unknown: return Principality::Unknown;
    }
    return Principality::Unknown;
}

// ---------------------------------------------------------------------------

P3Result p3_solutions(i64 s, i64 t) {
    // gcd(s,t) > 1 or s+t = 0 mod 3 forces gcd(u,v) > 1, so the two listed
    // rejection reasons cover the (s,t) preconditions as well.
    P3Result res;
    BigInt S = s, T = t;
    BigInt u = S * S * S + T * T * T - 3 * S * T * T;
    BigInt v = 3 * S * S * T - 3 * S * T * T;
    if (v == 0) {
        res.reject_reason = "v = 0";
        return res;
    }
    if (gcd(u, v) != 1) {
        res.reject_reason = "gcd(u,v) > 1";
        return res;
    }
    res.accepted = true;
    res.u = u;
    res.v = v;
    return res;
}

std::vector<std::pair<BigInt, BigInt>> pth_power_pairs(i64 p, i64 z0, i64 xmin, i64 xmax) {
    if (z0 == 0) throw precondition_error(errc::out_of_range, "pth_power_pairs needs z0 != 0");
    BigInt zp;
    mpz_pow_ui(zp.get_mpz_t(), BigInt(z0).get_mpz_t(), static_cast<unsigned long>(p));
    std::vector<std::pair<BigInt, BigInt>> out;
    for (i64 x = xmin; x <= xmax; ++x) {
        if (x == 0) continue;
        BigInt y = zp - x;
        if (y == 0) continue;
        if (gcd(BigInt(x), y) != 1) continue;
        out.emplace_back(x, y);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

const char* corollary_case_name(CorollaryCase c) {
    switch (c) {
        case CorollaryCase::C2: return "C2";
        case CorollaryCase::C3: return "C3";
        case CorollaryCase::C4: return "C4";
        case CorollaryCase::C6: return "C6";
        case CorollaryCase::C5extra: return "C5extra";
    }
    return "?";
}

CorollaryCase corollary_case_from(const std::string& name) {
    if (name == "C2") return CorollaryCase::C2;
    if (name == "C3") return CorollaryCase::C3;
    if (name == "C4") return CorollaryCase::C4;
    if (name == "C6") return CorollaryCase::C6;
    if (name == "C5extra") return CorollaryCase::C5extra;
    throw precondition_error(errc::out_of_range, "unknown corollary case " + name);
}

namespace {

std::string ll_str(i64 v) { return std::to_string(v); }

void push_condition(VerifyReport& rep, const std::string& desc, const std::string& expected,
                    const std::string& observed) {
    rep.conditions.push_back({desc, expected, observed, expected == observed});
}

void push_condition_bool(VerifyReport& rep, const std::string& desc, bool observed) {
    rep.conditions.push_back({desc, "true", observed ? "true" : "false", observed});
}

i64 sym_int(const SplitContext& ctx, std::size_t qi, const BigInt& a) {
    return symbol_of_int(ctx, qi, a).mu;
}

i64 sym_elem(const SplitContext& ctx, std::size_t qi, const CycElem& e) {
    return residue_symbol(ctx, qi, word_from_elem(e)).mu;
}

i64 sym_word(const SplitContext& ctx, std::size_t qi, const RadicalWord& w) {
    return residue_symbol(ctx, qi, w).mu;
}

// 1 + zeta^j / 1 - zeta^j as elements of the context ring
CycElem one_plus_zeta(const CycRing& ring, i64 j) {
    return make_elem(ring, {{0, 0, 1}, {0, j, 1}});
}
CycElem one_minus_zeta(const CycRing& ring, i64 j) {
    return make_elem(ring, {{0, 0, 1}, {0, j, -1}});
}

// q^f = 1 mod p^2 <=> kappa = 0 mod p
bool qf_is_one_mod_p2(const SplitContext& ctx) { return ctx.kappa_value % ctx.p == 0; }

void check_divisor(CorollaryCase c, i64 p, const BigInt& u, const BigInt& v, i64 q) {
    if (q == 2)
        throw precondition_error(errc::wrong_divisor,
                                 std::string(corollary_case_name(c)) + ": q must be odd");
    BigInt target;
    switch (c) {
        case CorollaryCase::C2: target = cyclotomic_value(p, u, v); break;
        case CorollaryCase::C3: target = u - v; break;
        case CorollaryCase::C4:
        case CorollaryCase::C5extra: target = cyclotomic_value(2 * p, u, v); break;
        case CorollaryCase::C6: target = u + v; break;
    }
    if (target % q != 0)
        throw precondition_error(errc::wrong_divisor,
                                 std::string(corollary_case_name(c)) +
                                     ": q does not divide the case's Phi value");
    i64 n_case = (c == CorollaryCase::C2)   ? p
                 : (c == CorollaryCase::C3) ? 1
                 : (c == CorollaryCase::C6) ? 2
                                            : 2 * p;
    if (n_case % q == 0)
        throw precondition_error(errc::wrong_divisor,
                                 std::string(corollary_case_name(c)) + ": q divides n = " +
                                     ll_str(n_case));
}

// Symbols of 1+zeta^j at every prime of K above q (q = 1 mod p, f = 1):
// one condition per primitive p-th root c, the per-prime zeta_bar.
void c2_all_primes_clause(VerifyReport& rep, const SplitContext& ctx) {
    FFElem w = mu_p_root(ctx.field, ctx.p);
    BigInt kv = ctx.kappa_value;
    for (i64 i = 1; i < ctx.p; ++i) {
        FFElem c = ff_pow(w, BigInt(i));
        std::string first_fail;
        for (i64 j = 0; j < ctx.p; ++j) {
            // (1 + c^j)^kappa against base c
            FFElem val = ff_add(ff_one(ctx.field), ff_pow(c, BigInt(j)));
            if (ff_is_zero(val)) {
                first_fail = "1+zeta^" + ll_str(j) + " vanishes";
                break;
            }
            FFElem target = ff_pow(val, kv);
            if (!ff_equal(target, ff_one(ctx.field))) {
                first_fail = "1+zeta^" + ll_str(j) + " nontrivial";
                break;
            }
        }
        push_condition(rep, "all (1+zeta^j) trivial at prime with zeta_bar = w^" + ll_str(i),
                       "pass", first_fail.empty() ? "pass" : first_fail);
    }
}

}  // namespace

VerifyReport verify_corollary(CorollaryCase c, i64 p, const BigInt& u, const BigInt& v, i64 q,
                              const Policy& policy) {
    VerifyReport rep;
    rep.label = corollary_case_name(c);
    check_divisor(c, p, u, v, q);
    SplitContext ctx = build_context(p, q, u, v);

    i64 n_case = (c == CorollaryCase::C2)   ? p
                 : (c == CorollaryCase::C3) ? 1
                 : (c == CorollaryCase::C6) ? 2
                                            : 2 * p;
    if (ctx.n != n_case)
        throw precondition_error(errc::wrong_divisor,
                                 rep.label + ": order of v/u mod q is " + ll_str(ctx.n) +
                                     ", expected " + ll_str(n_case));

    Principality pr = p_principality(q, p, policy);
    rep.notes.push_back(std::string("policy: ") + principality_name(pr));
    rep.probative = (pr == Principality::Principal);
    if (p == 3 && c != CorollaryCase::C3) {
        rep.probative = false;
        rep.notes.push_back("derivation requires p > 3; conditions evaluated literally");
    }

    switch (c) {
        case CorollaryCase::C2: {
            push_condition_bool(rep, "q = 1 mod p^2", (q - 1) % (p * p) == 0);
            push_condition(rep, "(2/q_K)", "0", ll_str(sym_int(ctx, 0, 2)));
            push_condition(rep, "(u/q_K)", "0", ll_str(sym_int(ctx, 0, u)));
            push_condition(rep, "(v/q_K)", "0", ll_str(sym_int(ctx, 0, v)));
            for (i64 j = 0; j < p; ++j)
                push_condition(rep, "(1+zeta^" + ll_str(j) + "/q_K)", "0",
                               ll_str(sym_elem(ctx, 0, one_plus_zeta(ctx.ring, j))));
            c2_all_primes_clause(rep, ctx);
            break;
        }
        case CorollaryCase::C3: {
            push_condition_bool(rep, "q^f = 1 mod p^2", qf_is_one_mod_p2(ctx));
            push_condition(rep, "(u/q_K)", "0", ll_str(sym_int(ctx, 0, u)));
            push_condition(rep, "(v/q_K)", "0", ll_str(sym_int(ctx, 0, v)));
            push_condition(rep, "(2/q_K)", "0", ll_str(sym_int(ctx, 0, 2)));
            for (std::size_t qi = 0; qi < ctx.q_list.size(); ++qi) {
                std::string first_fail;
                for (i64 j = 0; j < p && first_fail.empty(); ++j) {
                    i64 mu = sym_elem(ctx, qi, one_plus_zeta(ctx.ring, j));
                    if (mu != 0) first_fail = "1+zeta^" + ll_str(j) + " has mu=" + ll_str(mu);
                }
                push_condition(rep, "all (1+zeta^j) trivial at Q_" + ll_str(qi), "pass",
                               first_fail.empty() ? "pass" : first_fail);
            }
            break;
        }
        case CorollaryCase::C4:
        case CorollaryCase::C5extra: {
            push_condition_bool(rep, "q = 1 mod p^2", (q - 1) % (p * p) == 0);
            i64 su = sym_int(ctx, 0, u);
            i64 sv = sym_int(ctx, 0, v);
            i64 sp = sym_int(ctx, 0, p);
            push_condition(rep, "(u/q_K) = (v/q_K)", ll_str(su), ll_str(sv));
            push_condition(rep, "(v/q_K) = (p/q_K)", ll_str(sv), ll_str(sp));
            for (i64 j = 1; j < p; ++j) {
                i64 sj = sym_elem(ctx, 0, one_minus_zeta(ctx.ring, j));
                push_condition(rep, "(p/q_K) = (1-zeta^" + ll_str(j) + "/q_K)^-1", ll_str(sp),
                               ll_str((p - sj) % p));
            }
            SplitReport fam = is_totally_split(ctx, family_c4(ctx.ring));
            push_condition_bool(rep, "family (1-zeta^j)/(1-zeta) totally split", fam.totally_split);
            if (c == CorollaryCase::C5extra) {
                push_condition(rep, "(p/q_K)", "0", ll_str(sp));
                for (i64 j = 1; j < p; ++j)
                    push_condition(rep, "(1-zeta^" + ll_str(j) + "/q_K)", "0",
                                   ll_str(sym_elem(ctx, 0, one_minus_zeta(ctx.ring, j))));
            }
            break;
        }
        case CorollaryCase::C6: {
            push_condition_bool(rep, "q^f = 1 mod p^2", qf_is_one_mod_p2(ctx));
            for (std::size_t qi = 0; qi < ctx.q_list.size(); ++qi) {
                i64 su = sym_int(ctx, qi, u);
                i64 sv = sym_int(ctx, qi, v);
                i64 sp = sym_int(ctx, qi, p);
                push_condition(rep, "(u/Q_" + ll_str(qi) + ") = (v/Q_" + ll_str(qi) + ")",
                               ll_str(su), ll_str(sv));
                push_condition(rep, "(v/Q_" + ll_str(qi) + ") = (p/Q_" + ll_str(qi) + ")",
                               ll_str(sv), ll_str(sp));
                for (i64 j = 1; j < p; ++j) {
                    i64 sj = sym_elem(ctx, qi, one_minus_zeta(ctx.ring, j));
                    push_condition(rep,
                                   "(p/Q_" + ll_str(qi) + ") = (1-zeta^" + ll_str(j) + "/Q_" +
                                       ll_str(qi) + ")^-1",
                                   ll_str(sp), ll_str((p - sj) % p));
                }
            }
            SplitReport fam = is_totally_split(ctx, family_c4(ctx.ring));
            push_condition_bool(rep, "family (1-zeta^j)/(1-zeta) totally split", fam.totally_split);
            break;
        }
    }

    rep.overall = true;
    for (const auto& c2 : rep.conditions) rep.overall = rep.overall && c2.pass;
    return rep;
}

// ---------------------------------------------------------------------------

const char* lemma_variant_name(LemmaVariant v) {
    switch (v) {
        case LemmaVariant::eps: return "eps";
        case LemmaVariant::varpi: return "varpi";
        case LemmaVariant::eps_p_shift: return "eps_p_shift";
    }
    return "?";
}

LemmaVariant lemma_variant_from(const std::string& name) {
    if (name == "eps") return LemmaVariant::eps;
    if (name == "varpi") return LemmaVariant::varpi;
    if (name == "eps_p_shift") return LemmaVariant::eps_p_shift;
    throw precondition_error(errc::out_of_range, "unknown lemma variant " + name);
}

namespace {

// x + y = z0^p exactly?
bool is_perfect_pth_power(const BigInt& value, i64 p) {
    if (value == 0) return false;
    BigInt root;
    int exact = mpz_root(root.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
    return exact != 0;
}

// x + y = p^{nu p - 1} c^p with nu >= 1 and an exact p-th power cofactor?
bool is_shifted_pth_power(const BigInt& value, i64 p) {
    if (value == 0) return false;
    BigInt rest = value;
    i64 val_p = 0;
    while (rest % p == 0) {
        rest /= p;
        ++val_p;
    }
    if (val_p < p - 1 || (val_p + 1) % p != 0) return false;
    return is_perfect_pth_power(rest, p);
}

}  // namespace

VerifyReport verify_lemma_relation(LemmaVariant variant, i64 p, const BigInt& x, const BigInt& y,
                                   i64 q) {
    VerifyReport rep;
    rep.label = lemma_variant_name(variant);
    BigInt sum = x + y;
    bool eps_like = (variant != LemmaVariant::varpi);
    if (variant == LemmaVariant::eps_p_shift) {
        if (!is_shifted_pth_power(sum, p))
            throw precondition_error(errc::wrong_divisor,
                                     "x+y is not of the form p^{nu p - 1} c^p");
    } else if (!is_perfect_pth_power(sum, p)) {
        throw precondition_error(errc::wrong_divisor, "x+y is not a perfect p-th power");
    }
    BigInt divisor = eps_like ? cyclotomic_value(p, x, y) : cyclotomic_value(2 * p, x, y);
    if (divisor % q != 0)
        throw precondition_error(errc::wrong_divisor, "q does not divide the required Phi value");
    if (x % q == 0 || y % q == 0 || q == 2 || q == p)
        throw precondition_error(errc::wrong_divisor, "q divides 2p·x·y");

    SplitContext ctx = build_context(p, q, x, y);
    i64 n_case = eps_like ? p : 2 * p;
    if (ctx.n != n_case)
        throw precondition_error(errc::wrong_divisor, "order of y/x mod q is " + ll_str(ctx.n) +
                                                          ", expected " + ll_str(n_case));

    i64 inv2 = (p + 1) / 2;
    i64 sym_zeta = symbol_of_zeta(ctx, 0).mu;
    i64 shift = (variant == LemmaVariant::eps_p_shift) ? sym_int(ctx, 0, p) : 0;
    for (i64 k = 1; k <= p - 2; ++k) {
        CycElem lhs_elem = make_elem(ctx.ring, {{0, 0, x}, {0, k, y}});
        i64 lhs = (sym_elem(ctx, 0, lhs_elem) + shift) % p;
        RadicalWord unit = eps_like ? real_unit_eps(ctx.ring, k + 1) : real_unit_varpi(ctx.ring, k + 1);
        i64 unit_sym = unit.factors.empty() ? 0 : sym_word(ctx, 0, unit);
        i64 rhs = (mul_mod(mul_mod(k, inv2, p), sym_zeta, p) + unit_sym) % p;
        const char* left_extra = (variant == LemmaVariant::eps_p_shift) ? "+sym(p)" : "";
        push_condition(rep, "k=" + ll_str(k) + ": sym(x+zeta^k y)" + left_extra +
                                " = (k/2) sym(zeta) + sym(U_" + ll_str(k + 1) + ")",
                       ll_str(rhs), ll_str(lhs));
    }
    rep.probative = true;
    rep.overall = true;
    for (const auto& c : rep.conditions) rep.overall = rep.overall && c.pass;
    return rep;
}

// ---------------------------------------------------------------------------

const char* pred_case_name(PredCase c) {
    switch (c) {
        case PredCase::T32_i: return "T32_i";
        case PredCase::T32_ii: return "T32_ii";
        case PredCase::T31: return "T31";
    }
    return "?";
}

PredCase pred_case_from(const std::string& name) {
    if (name == "T32_i") return PredCase::T32_i;
    if (name == "T32_ii") return PredCase::T32_ii;
    if (name == "T31") return PredCase::T31;
    throw precondition_error(errc::out_of_range, "unknown predicted-symbol case " + name);
}

VerifyReport verify_predicted_symbols(PredCase c, i64 p, const BigInt& x, const BigInt& y, i64 q) {
    VerifyReport rep;
    rep.label = pred_case_name(c);
    bool plus = (c == PredCase::T31);  // q_K | x zeta + y <=> n = 2p
    BigInt divisor = plus ? cyclotomic_value(2 * p, x, y) : cyclotomic_value(p, x, y);
    if (divisor % q != 0)
        throw precondition_error(errc::wrong_divisor, "q does not divide the required Phi value");
    if (x % q == 0 || y % q == 0 || q == p)
        throw precondition_error(errc::wrong_divisor, "q divides p·x·y");
    SplitContext ctx = build_context(p, q, x, y);
    i64 n_case = plus ? 2 * p : p;
    if (ctx.n != n_case)
        throw precondition_error(errc::wrong_divisor, "order of y/x mod q is " + ll_str(ctx.n) +
                                                          ", expected " + ll_str(n_case));
    i64 sym_zeta = symbol_of_zeta(ctx, 0).mu;
    switch (c) {
        case PredCase::T32_i: {
            i64 inv4 = inv_mod(4, p);
            for (i64 kp = 1; kp <= (p - 3) / 2; ++kp) {
                i64 lhs1 = sym_word(ctx, 0, real_unit_eps(ctx.ring, p - 2 * kp - 1));
                i64 rhs1 = mul_mod(((-kp * (kp + 1)) % p + p) % p, sym_zeta, p);
                push_condition(rep, "sym(eps'_{p-2k'-1}) = -k'(k'+1) sym(zeta), k'=" + ll_str(kp),
                               ll_str(rhs1), ll_str(lhs1));
                RadicalWord w2 = real_unit_eps(ctx.ring, p - 2 * kp);
                i64 lhs2 = w2.factors.empty() ? 0 : sym_word(ctx, 0, w2);
                i64 rhs2 = mul_mod(((inv4 - kp * kp) % p + p) % p, sym_zeta, p);
                push_condition(rep, "sym(eps'_{p-2k'}) = (1/4 - k'^2) sym(zeta), k'=" + ll_str(kp),
                               ll_str(rhs2), ll_str(lhs2));
            }
            break;
        }
        case PredCase::T32_ii: {
            for (i64 j = 1; j < p; ++j)
                push_condition(rep, "(1+zeta^" + ll_str(j) + "/q_K)", "0",
                               ll_str(sym_elem(ctx, 0, one_plus_zeta(ctx.ring, j))));
            break;
        }
        case PredCase::T31: {
            push_condition(rep, "(p/q_K)", "0", ll_str(sym_int(ctx, 0, p)));
            for (i64 j = 1; j < p; ++j)
                push_condition(rep, "(1-zeta^" + ll_str(j) + "/q_K)", "0",
                               ll_str(sym_elem(ctx, 0, one_minus_zeta(ctx.ring, j))));
            break;
        }
    }
    rep.overall = true;
    for (const auto& cond : rep.conditions) rep.overall = rep.overall && cond.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// Witness-search drivers
// ---------------------------------------------------------------------------

namespace {

// cj2/scan share this per-q outcome
struct Cj2Outcome {
    bool skipped = false;
    std::string skip_reason;
    bool nonsplit = false;  // some nonzero mu
    std::optional<SplitReport> report;
};

}  // namespace

WitnessResult witness_search_cj2(i64 p, const BigInt& u, const BigInt& v, i64 q_max,
                                 const Policy& policy, int jobs) {
    if (gcd(u, v) != 1) throw precondition_error(errc::not_coprime, "u, v must be coprime");
    WitnessResult res;
    std::vector<i64> primes = primes_in(3, q_max);  // q odd throughout the paper

    auto outcome_for = [&](std::size_t idx) -> Cj2Outcome {
        i64 q = primes[idx];
        Cj2Outcome out;
        if (q == p || u % q == 0 || v % q == 0) {
            out.skipped = true;
            out.skip_reason = "divides puv";
            return out;
        }
        Principality pr = p_principality(q, p, policy);
        if (pr != Principality::Principal) {
            out.skipped = true;
            out.skip_reason = (pr == Principality::Unknown) ? "principality unknown"
                                                            : "not p-principal";
            return out;
        }
        SplitContext ctx = build_context(p, q, u, v);
        // conjecture-text generators: eps_k/eps_1, k = 2..p-2 (empty for p=3)
        RadicalFamily fam;
        fam.label = FamilyLabel::Cj3;
        try {
            fam = family_cj3(ctx);
        } catch (const precondition_error& e) {
            if (e.code() != errc::empty_family) throw;
        }
        SplitReport rep = is_totally_split(ctx, fam);
        for (const auto& row : rep.mu)
            for (const auto& mu : row)
                if (mu && *mu != 0) out.nonsplit = true;
        if (out.nonsplit) out.report = std::move(rep);
        return out;
    };

    const std::size_t chunk = 64;
    for (std::size_t base = 0; base < primes.size() && !res.found; base += chunk) {
        std::size_t count = std::min(chunk, primes.size() - base);
        auto outcomes = parallel_map_indexed<Cj2Outcome>(
            count, jobs, [&](std::size_t i) { return outcome_for(base + i); });
        for (std::size_t i = 0; i < count; ++i) {
            const auto& out = outcomes[i];
            if (out.skipped) {
                res.skipped.push_back({primes[base + i], out.skip_reason});
                continue;
            }
            ++res.primes_scanned;
            if (out.nonsplit && !res.found) {
                res.found = true;
                res.q = primes[base + i];
                res.detail_split = out.report;
                break;
            }
        }
    }
    return res;
}

WitnessResult witness_search_crit(i64 p, const std::vector<i64>& S,
                                  const std::vector<i64>& m_values) {
    if (S.empty()) throw precondition_error(errc::bad_s, "S is empty");
    for (i64 q : S)
        if (!is_prime(q)) throw precondition_error(errc::bad_s, "S contains non-prime " + ll_str(q));
    for (i64 m : m_values)
        if (m < 1 || m > p - 1) throw precondition_error(errc::bad_m, "m out of range 1..p-1");

    WitnessResult res;
    if (is_regular(p).regular) {
        res.marker = "p regular: criterion vacuous, reduction holds implicitly";
        res.criterion_satisfied = true;
        return res;
    }
    std::vector<i64> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (i64 q : sorted) {
        if (q == p) {
            res.skipped.push_back({q, "q = p"});
            continue;
        }
        ++res.primes_scanned;
        for (i64 n : divisors(q - 1)) {
            if (n <= 2) {
                res.skipped.push_back({q, "n=" + ll_str(n) + " skipped (n <= 2)"});
                continue;
            }
            i64 phi = euler_phi(n);
            for (int idx = 0; idx < phi; ++idx) {
                SplitContext ctx = build_context_free(p, q, n, idx);
                for (i64 m : m_values) {
                    SplitReport rep = is_totally_split(ctx, family_crit_m(ctx, m));
                    if (rep.totally_split) res.crit_findings.push_back({q, n, idx, m});
                }
            }
        }
    }
    res.criterion_satisfied = res.crit_findings.empty();
    res.found = !res.crit_findings.empty();
    return res;
}

WitnessResult witness_search_cj3(i64 p, i64 q_max, const Policy& policy, int jobs) {
    if (p <= 3) throw precondition_error(errc::out_of_range, "witness_search_cj3 needs p > 3");
    WitnessResult res;
    std::vector<i64> primes;
    for (i64 q : primes_in(3, q_max))
        if (q % 4 == 3) primes.push_back(q);

    struct Cj3Outcome {
        bool skipped = false;
        std::string skip_reason;
        bool witness = false;
        std::vector<SubContextReport> subs;
    };

    auto outcome_for = [&](std::size_t idx) -> Cj3Outcome {
        i64 q = primes[idx];
        Cj3Outcome out;
        if (q == p) {
            out.skipped = true;
            out.skip_reason = "q = p";
            return out;
        }
        Principality pr = p_principality(q, p, policy);
        if (pr != Principality::Principal) {
            out.skipped = true;
            out.skip_reason = (pr == Principality::Unknown) ? "principality unknown"
                                                            : "not p-principal";
            return out;
        }
        int f = static_cast<int>(mult_order(BigInt(q), p));
        BigInt kv = kappa(q, f, p);
        if (kv % p == 0) {
            out.skipped = true;
            out.skip_reason = "p not prime to kappa";
            return out;
        }
        out.witness = true;
        for (i64 n : divisors(q - 1)) {
            if (n <= 2) continue;
            i64 phi = euler_phi(n);
            for (int xi = 0; xi < phi; ++xi) {
                SplitContext ctx = build_context_free(p, q, n, xi);
                SplitReport rep = is_totally_split(ctx, family_cj3(ctx));
                out.subs.push_back({n, xi, rep.totally_split});
                if (rep.totally_split) out.witness = false;
            }
        }
        return out;
    };

    const std::size_t chunk = 16;
    for (std::size_t base = 0; base < primes.size() && !res.found; base += chunk) {
        std::size_t count = std::min(chunk, primes.size() - base);
        auto outcomes = parallel_map_indexed<Cj3Outcome>(
            count, jobs, [&](std::size_t i) { return outcome_for(base + i); });
        for (std::size_t i = 0; i < count; ++i) {
            auto& out = outcomes[i];
            if (out.skipped) {
                res.skipped.push_back({primes[base + i], out.skip_reason});
                continue;
            }
            ++res.primes_scanned;
            if (out.witness && !res.found) {
                res.found = true;
                res.q = primes[base + i];
                res.sub_reports = std::move(out.subs);
                break;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------

P3ScanResult scan_p3(i64 smax, i64 qmax, int jobs) {
    P3ScanResult result;
    std::vector<std::pair<i64, i64>> grid;
    for (i64 s = -smax; s <= smax; ++s)
        for (i64 t = -smax; t <= smax; ++t) grid.emplace_back(s, t);

    auto pair_report = [&](std::size_t idx) -> std::optional<P3PairReport> {
        auto [s, t] = grid[idx];
        P3Result sol = p3_solutions(s, t);
        if (!sol.accepted) return std::nullopt;
        P3PairReport rep;
        rep.s = s;
        rep.t = t;
        rep.u = sol.u;
        rep.v = sol.v;
        for (i64 q : primes_in(2, qmax)) {
            if (q == 3 || sol.u % q == 0 || sol.v % q == 0) continue;
            SplitContext ctx = build_context(3, q, sol.u, sol.v);
            ++rep.primes_checked;
            bool ok = true;
            CycElem u_elem = int_embed(ctx.ring, sol.u);
            for (i64 k = 1; k <= 2 && ok; ++k) {
                if (classify_unit(3, ctx.d, ctx.r, k) == UnitClass::Zero) continue;
                RadicalWord w = word_from_elem(u_elem);
                w = word_mul(w, word_from_elem(vandiver_unit(ctx.ring, k)));
                for (std::size_t qi = 0; qi < ctx.q_list.size() && ok; ++qi)
                    ok = residue_symbol(ctx, qi, w).mu == 0;
            }
            if (ok) {
                try {
                    SplitReport rep2 = is_totally_split(ctx, family_thm1(ctx));
                    ok = rep2.totally_split;
                } catch (const precondition_error& e) {
                    if (e.code() != errc::empty_family) throw;  // vacuous for d=2, r=1
                }
            }
            if (!ok) {
                rep.all_split = false;
                rep.failing_q = q;
                break;
            }
        }
        return rep;
    };

    auto reports = parallel_map_indexed<std::optional<P3PairReport>>(
        grid.size(), jobs, [&](std::size_t i) { return pair_report(i); });
    for (auto& r : reports) {
        if (!r) {
            ++result.pairs_rejected;
            continue;
        }
        result.all_split = result.all_split && r->all_split;
        result.pairs.push_back(std::move(*r));
    }
    return result;
}

}  // namespace cyclo
