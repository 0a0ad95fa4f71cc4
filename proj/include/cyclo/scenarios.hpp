#pragma once

/**
 * @file scenarios.hpp
 * @brief Solution/data generators, corollary-conclusion verifiers,
 *        witness-search drivers for the conjectures, and the
 *        p-principality policy.
 *
 * The corollary verifiers never assume their hypotheses hold: they are
 * refutation instruments. Reports carry a "probative" flag set only when
 * all preconditions are established. Principality-Unknown primes are
 * skipped but logged, never silently treated as principal.
 */

#include <map>
#include <string>

#include "cyclo/kummer.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// p-principality policy
// ---------------------------------------------------------------------------

struct Policy {
    enum class Mode { RegularAutomatic, SuppliedTable, Unknown };
    Mode mode = Mode::Unknown;
    std::map<i64, bool> table;  // q -> p-principal
    std::string table_path;

    static Policy regular_automatic() { return Policy{Mode::RegularAutomatic, {}, {}}; }
    static Policy unknown() { return Policy{Mode::Unknown, {}, {}}; }
    static Policy from_table_file(const std::string& path);
    static Policy from_table(std::map<i64, bool> t) {
        return Policy{Mode::SuppliedTable, std::move(t), {}};
    }
};

enum class Principality { Principal, NotPrincipal, Unknown };
const char* principality_name(Principality p);

/// RegularAutomatic + regular p -> Principal for every q (PolicyMisuse for
/// irregular p); SuppliedTable -> lookup; otherwise Unknown.
Principality p_principality(i64 q, i64 p, const Policy& policy);

// ---------------------------------------------------------------------------
// Data generators
// ---------------------------------------------------------------------------

/// u + zeta v = (s + zeta t)^3 for p = 3: u = s^3+t^3-3st^2, v = 3s^2t-3st^2.
struct P3Result {
    bool accepted = false;
    BigInt u, v;
    std::string reject_reason;
};
P3Result p3_solutions(i64 s, i64 t);

/// All (x, y) with x in [xmin, xmax], y = z0^p - x, gcd(x,y) = 1, xy != 0.
std::vector<std::pair<BigInt, BigInt>> pth_power_pairs(i64 p, i64 z0, i64 xmin, i64 xmax);

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

struct ConditionRecord {
    std::string description;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct VerifyReport {
    std::string label;
    std::vector<ConditionRecord> conditions;
    bool overall = false;  // all conditions pass
    bool probative = false;
    std::vector<std::string> notes;
};

enum class CorollaryCase { C2, C3, C4, C6, C5extra };
const char* corollary_case_name(CorollaryCase c);
CorollaryCase corollary_case_from(const std::string& name);

/// Evaluates the stated conclusions of the n in {p, 1, 2p, 2} corollaries as
/// condition records. WrongDivisor when q fails the case's divisibility
/// precondition.
VerifyReport verify_corollary(CorollaryCase c, i64 p, const BigInt& u, const BigInt& v, i64 q,
                              const Policy& policy);

enum class LemmaVariant { eps, varpi, eps_p_shift };
const char* lemma_variant_name(LemmaVariant v);
LemmaVariant lemma_variant_from(const std::string& name);

/// Checks sym(x + zeta^k y) = (k/2) sym(zeta) + sym(U_{k+1}) for k = 1..p-2
/// (plus sym(p) on the left for the shift variant). Unconditional algebra on
/// generated data; every k must pass.
VerifyReport verify_lemma_relation(LemmaVariant variant, i64 p, const BigInt& x, const BigInt& y,
                                   i64 q);

enum class PredCase { T32_i, T32_ii, T31 };
const char* pred_case_name(PredCase c);
PredCase pred_case_from(const std::string& name);

/// Predicted-symbol checkers; report which predictions hold, with no
/// assumption that (x, y) comes from a true FLT2 solution.
VerifyReport verify_predicted_symbols(PredCase c, i64 p, const BigInt& x, const BigInt& y, i64 q);

// ---------------------------------------------------------------------------
// Witness-search drivers
// ---------------------------------------------------------------------------

struct ScanLogEntry {
    i64 q = 0;
    std::string reason;
};

struct TotalSplitFinding {
    i64 q = 0;
    i64 n = 0;
    int xi_index = 0;
    i64 m = 0;
};

struct SubContextReport {
    i64 n = 0;
    int xi_index = 0;
    bool totally_split = false;
};

struct WitnessResult {
    bool found = false;
    std::optional<i64> q;
    i64 primes_scanned = 0;
    std::vector<ScanLogEntry> skipped;
    std::optional<SplitReport> detail_split;       // cj2: report of the witness
    std::vector<SubContextReport> sub_reports;     // cj3: per-(n, index) at the witness
    std::vector<TotalSplitFinding> crit_findings;  // crit: every total split found
    bool criterion_satisfied = false;              // crit
    std::optional<std::string> marker;             // crit refusal for regular p
};

/// Scans primes ascending, skipping q | puv and non-Principal q; tests the
/// conjecture-text generators eps_k/eps_1 (k = 2..p-2); returns the first q
/// with a nonzero symbol.
WitnessResult witness_search_cj2(i64 p, const BigInt& u, const BigInt& v, i64 q_max,
                                 const Policy& policy, int jobs = 1);

/// Corollary-criterion enumeration over the supplied set S of non-p-principal
/// primes: reports every (q, n, index, m) whose CritM family splits totally.
WitnessResult witness_search_crit(i64 p, const std::vector<i64>& S, const std::vector<i64>& m_values);

/// Scans primes q = 3 mod 4 with Principal policy and p prime to kappa; a
/// witness is a q for which no (n > 2 | q-1, xi index) makes the Cj3 family
/// totally split.
WitnessResult witness_search_cj3(i64 p, i64 q_max, const Policy& policy, int jobs = 1);

// ---------------------------------------------------------------------------
// Whole-grid p = 3 scan (CLI scan-p3)
// ---------------------------------------------------------------------------

struct P3PairReport {
    i64 s = 0, t = 0;
    BigInt u, v;
    bool all_split = true;
    i64 primes_checked = 0;
    std::optional<i64> failing_q;
};

struct P3ScanResult {
    std::vector<P3PairReport> pairs;
    i64 pairs_rejected = 0;
    bool all_split = true;
};

/// For every accepted (s,t) with |s|,|t| <= smax and every prime q <= qmax
/// with q not dividing 3uv: all symbols of u(1+xi zeta^k) (k = 1, 2 with
/// eps_k nonzero) vanish at every Q and family_thm1 splits totally
/// (vacuously when the family is empty).
P3ScanResult scan_p3(i64 smax, i64 qmax, int jobs = 1);

}  // namespace cyclo
