#include "cyclo/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclo/parser.hpp"
#include "cyclo/report.hpp"

namespace cyclo::cli {

namespace {

struct Config {
    i64 q_max = 10000;
    i64 p_max = 101;
    i64 factor_bound = 1000000;
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw precondition_error(errc::out_of_range, "cannot open config file " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        i64 v = 0;
        try {
            v = std::stoll(value);
        } catch (...) {
            throw precondition_error(errc::out_of_range,
                                     "config " + path + " line " + std::to_string(lineno) +
                                         ": bad value for " + key);
        }
        if (key == "q_max")
            cfg.q_max = v;
        else if (key == "p_max")
            cfg.p_max = v;
        else if (key == "factor_bound")
            cfg.factor_bound = v;
        // unknown keys ignored
    }
    return cfg;
}

Policy make_policy(const std::string& spec) {
    if (spec.empty() || spec == "unknown") return Policy::unknown();
    if (spec == "regular") return Policy::regular_automatic();
    if (spec.rfind("table:", 0) == 0) return Policy::from_table_file(spec.substr(6));
    throw precondition_error(errc::out_of_range, "bad --policy value '" + spec + "'");
}

std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

void check_p_limit(i64 p, const Config& cfg) {
    if (p > cfg.p_max)
        throw precondition_error(errc::out_of_range,
                                 "p exceeds configured p_max " + std::to_string(cfg.p_max));
}

// Minimal CSV writer; our fields never contain commas or quotes, but quote
// defensively when they do.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << csv_escape(header[i]);
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << "\n";
    }
}

std::vector<std::vector<std::string>> verify_csv_rows(const VerifyReport& rep) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : rep.conditions)
        rows.push_back({c.description, c.expected, c.observed, c.pass ? "true" : "false"});
    return rows;
}

SplitContext context_from_flags(i64 p, i64 q, const std::string& u_str, const std::string& v_str,
                                i64 n, int xi_index, bool have_uv) {
    if (have_uv) return build_context(p, q, BigInt(u_str), BigInt(v_str));
    if (n == 0)
        throw precondition_error(errc::out_of_range, "need either --u/--v or --n (free context)");
    return build_context_free(p, q, n, xi_index);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclotomic splitting toolkit"};
    app.require_subcommand(1);

    std::string config_path, policy_spec, format = "json", elem_src, u_str, v_str;
    std::string family_name = "thm1", case_name, variant_name, driver_name = "cj2";
    std::string s_list, m_list;
    i64 p = 0, q = 0, n = 0, m = 0, qmax = 0, smax = 5, a = 0, bound = 2000;
    int xi_index = 0, jobs = 1;
    bool times_u = false, with_timing = false;

    app.add_option("--config", config_path, "key=value config file");

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
        cmd->add_flag("--timing", with_timing);
    };

    auto* phi = app.add_subcommand("phi", "homogenized cyclotomic value Phi_n(u,v)");
    phi->add_option("--n", n)->required();
    phi->add_option("--u", u_str)->required();
    phi->add_option("--v", v_str)->required();
    add_common(phi);

    auto* order = app.add_subcommand("order", "multiplicative order mod q");
    order->add_option("--q", q)->required();
    order->add_option("--a", a);
    order->add_option("--u", u_str);
    order->add_option("--v", v_str);
    add_common(order);

    auto* regular = app.add_subcommand("regular", "Bernoulli regularity test");
    regular->add_option("--p", p)->required();
    regular->add_option("--bound", bound);
    add_common(regular);

    auto* context = app.add_subcommand("context", "build and print a split context");
    context->add_option("--p", p)->required();
    context->add_option("--q", q)->required();
    context->add_option("--u", u_str);
    context->add_option("--v", v_str);
    context->add_option("--n", n);
    context->add_option("--xi-index", xi_index);
    add_common(context);

    auto* symbol = app.add_subcommand("symbol", "residue symbol of an element expression");
    symbol->add_option("--p", p)->required();
    symbol->add_option("--q", q)->required();
    symbol->add_option("--u", u_str);
    symbol->add_option("--v", v_str);
    symbol->add_option("--n", n);
    symbol->add_option("--xi-index", xi_index);
    symbol->add_option("--elem", elem_src)->required();
    symbol->add_flag("--times-u", times_u);
    add_common(symbol);

    auto* split = app.add_subcommand("split", "total-splitting test for a radical family");
    split->add_option("--p", p)->required();
    split->add_option("--q", q)->required();
    split->add_option("--u", u_str);
    split->add_option("--v", v_str);
    split->add_option("--n", n);
    split->add_option("--xi-index", xi_index);
    split->add_option("--family", family_name)
        ->check(CLI::IsMember({"thm1", "cj3", "critm", "c2", "c4"}));
    split->add_option("--m", m);
    add_common(split);

    auto* verify = app.add_subcommand("verify", "corollary / predicted-symbol verifier");
    verify->add_option("--case", case_name)->required();
    verify->add_option("--p", p)->required();
    verify->add_option("--q", q)->required();
    verify->add_option("--u", u_str)->required();
    verify->add_option("--v", v_str)->required();
    verify->add_option("--policy", policy_spec);
    add_common(verify);

    auto* lemma = app.add_subcommand("lemma", "lemma-relation checks on (x, y) = (--u, --v)");
    lemma->add_option("--variant", variant_name)
        ->required()
        ->check(CLI::IsMember({"eps", "varpi", "eps_p_shift"}));
    lemma->add_option("--p", p)->required();
    lemma->add_option("--u", u_str)->required();
    lemma->add_option("--v", v_str)->required();
    lemma->add_option("--q", q);
    add_common(lemma);

    auto* witness = app.add_subcommand("witness", "witness-search drivers");
    witness->add_option("--driver", driver_name)->check(CLI::IsMember({"cj2", "cj3", "crit"}));
    witness->add_option("--p", p)->required();
    witness->add_option("--u", u_str);
    witness->add_option("--v", v_str);
    witness->add_option("--qmax", qmax);
    witness->add_option("--policy", policy_spec);
    witness->add_option("--s", s_list);
    witness->add_option("--m-values", m_list);
    add_common(witness);

    auto* scanp3 = app.add_subcommand("scan-p3", "p = 3 solution-family scan");
    scanp3->add_option("--smax", smax);
    scanp3->add_option("--qmax", qmax);
    add_common(scanp3);

    auto* rank = app.add_subcommand("rank", "radical rank lower bound over scanned contexts");
    rank->add_option("--p", p)->required();
    rank->add_option("--u", u_str)->required();
    rank->add_option("--v", v_str)->required();
    rank->add_option("--qmax", qmax);
    rank->add_option("--family", family_name)->check(CLI::IsMember({"thm1", "cj3", "critm", "c2", "c4"}));
    rank->add_option("--m", m);
    add_common(rank);

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("cyclosplit");
        for (const auto& s : argv) cargs.push_back(s.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        Config cfg = load_config(config_path);
        if (qmax == 0) qmax = cfg.q_max;
        bool have_uv = !u_str.empty() && !v_str.empty();

        Json inputs, results;
        std::string command;
        std::vector<std::string> csv_header;
        std::vector<std::vector<std::string>> csv_rows;

        if (*phi) {
            command = "phi";
            BigInt value = cyclotomic_value(n, BigInt(u_str), BigInt(v_str));
            inputs = Json{{"n", n}, {"u", u_str}, {"v", v_str}};
            results = Json{{"value", big_str(value)}};
            csv_header = {"n", "u", "v", "value"};
            csv_rows = {{std::to_string(n), u_str, v_str, big_str(value)}};
        } else if (*order) {
            command = "order";
            BigInt base;
            if (order->count("--a")) {
                base = a;
            } else if (have_uv) {
                BigInt u(u_str), v(v_str);
                BigInt um = u % q;
                if (um < 0) um += q;
                if (um == 0) throw precondition_error(errc::not_coprime, "q divides u");
                base = v * inv_mod(um.get_si(), q);
            } else {
                throw precondition_error(errc::out_of_range, "order needs --a or --u/--v");
            }
            i64 ord = mult_order(base, q);
            inputs = Json{{"q", q}};
            if (order->count("--a")) inputs["a"] = a;
            if (have_uv) {
                inputs["u"] = u_str;
                inputs["v"] = v_str;
            }
            results = Json{{"order", ord}};
            csv_header = {"q", "order"};
            csv_rows = {{std::to_string(q), std::to_string(ord)}};
        } else if (*regular) {
            command = "regular";
            check_p_limit(p, cfg);
            RegularityReport rep = is_regular(p, bound);
            inputs = Json{{"p", p}, {"bound", bound}};
            results = to_json(rep);
            std::string idx;
            for (i64 i : rep.irregular_indices) idx += (idx.empty() ? "" : ";") + std::to_string(i);
            csv_header = {"p", "regular", "irregular_indices"};
            csv_rows = {{std::to_string(p), rep.regular ? "true" : "false", idx}};
        } else if (*context) {
            command = "context";
            check_p_limit(p, cfg);
            SplitContext ctx = context_from_flags(p, q, u_str, v_str, n, xi_index, have_uv);
            inputs = Json{{"p", p}, {"q", q}};
            if (have_uv) {
                inputs["u"] = u_str;
                inputs["v"] = v_str;
            } else {
                inputs["n"] = n;
                inputs["xi_index"] = xi_index;
            }
            results = to_json(ctx);
            csv_header = {"p", "q", "n", "d", "r", "f", "kappa", "xi_bar", "num_primes"};
            csv_rows = {{std::to_string(ctx.p), std::to_string(ctx.q), std::to_string(ctx.n),
                         std::to_string(ctx.d), std::to_string(ctx.r), std::to_string(ctx.f),
                         big_str(ctx.kappa_value), std::to_string(ctx.xi_bar),
                         std::to_string(ctx.q_list.size())}};
        } else if (*symbol) {
            command = "symbol";
            check_p_limit(p, cfg);
            SplitContext ctx = context_from_flags(p, q, u_str, v_str, n, xi_index, have_uv);
            RadicalWord w = parse_element(elem_src, ctx.ring);
            if (times_u) {
                if (!ctx.uv)
                    throw precondition_error(errc::out_of_range, "--times-u needs a (u,v) context");
                w = word_mul(word_from_elem(int_embed(ctx.ring, ctx.uv->first)), w);
            }
            Json mus = Json::array();
            for (std::size_t qi = 0; qi < ctx.q_list.size(); ++qi) {
                i64 mu = residue_symbol(ctx, qi, w).mu;
                mus.push_back(mu);
                csv_rows.push_back({std::to_string(qi), std::to_string(mu)});
            }
            inputs = Json{{"p", p}, {"q", q}, {"elem", elem_src}, {"times_u", times_u}};
            if (have_uv) {
                inputs["u"] = u_str;
                inputs["v"] = v_str;
            }
            results = Json{{"word", serialize_word(w)}, {"mu_per_Q", mus}};
            csv_header = {"q_index", "mu"};
        } else if (*split) {
            command = "split";
            check_p_limit(p, cfg);
            SplitContext ctx = context_from_flags(p, q, u_str, v_str, n, xi_index, have_uv);
            FamilySpec spec;
            if (family_name == "thm1") spec.label = FamilyLabel::Thm1;
            if (family_name == "cj3") spec.label = FamilyLabel::Cj3;
            if (family_name == "critm") {
                spec.label = FamilyLabel::CritM;
                spec.m = m;
            }
            if (family_name == "c2") spec.label = FamilyLabel::C2;
            if (family_name == "c4") spec.label = FamilyLabel::C4;
            SplitReport rep = is_totally_split(ctx, spec.build(ctx));
            inputs = Json{{"p", p}, {"q", q}, {"family", family_name}};
            if (split->count("--m")) inputs["m"] = m;
            if (have_uv) {
                inputs["u"] = u_str;
                inputs["v"] = v_str;
            } else {
                inputs["n"] = n;
                inputs["xi_index"] = xi_index;
            }
            results = to_json(rep);
            csv_header = {"q_index", "generator", "mu"};
            for (std::size_t qi = 0; qi < rep.mu.size(); ++qi)
                for (std::size_t gi = 0; gi < rep.mu[qi].size(); ++gi)
                    csv_rows.push_back({std::to_string(qi), rep.generator_names[gi],
                                        rep.mu[qi][gi] ? std::to_string(*rep.mu[qi][gi]) : "skip"});
        } else if (*verify) {
            command = "verify";
            check_p_limit(p, cfg);
            Policy policy = make_policy(policy_spec);
            VerifyReport rep;
            if (case_name == "T32_i" || case_name == "T32_ii" || case_name == "T31") {
                rep = verify_predicted_symbols(pred_case_from(case_name), p, BigInt(u_str),
                                               BigInt(v_str), q);
            } else {
                rep = verify_corollary(corollary_case_from(case_name), p, BigInt(u_str),
                                       BigInt(v_str), q, policy);
            }
            inputs = Json{{"case", case_name}, {"p", p}, {"q", q}, {"u", u_str}, {"v", v_str},
                          {"policy", policy_spec.empty() ? "unknown" : policy_spec}};
            results = to_json(rep);
            csv_header = {"condition", "expected", "observed", "pass"};
            csv_rows = verify_csv_rows(rep);
        } else if (*lemma) {
            command = "lemma";
            check_p_limit(p, cfg);
            LemmaVariant variant = lemma_variant_from(variant_name);
            BigInt x(u_str), y(v_str);
            inputs = Json{{"variant", variant_name}, {"p", p}, {"u", u_str}, {"v", v_str}};
            csv_header = {"q", "condition", "expected", "observed", "pass"};
            if (lemma->count("--q")) {
                VerifyReport rep = verify_lemma_relation(variant, p, x, y, q);
                inputs["q"] = q;
                results = to_json(rep);
                for (auto& row : verify_csv_rows(rep)) {
                    row.insert(row.begin(), std::to_string(q));
                    csv_rows.push_back(row);
                }
            } else {
                // factor the relevant Phi value by trial division and run all q
                bool eps_like = (variant != LemmaVariant::varpi);
                BigInt target = eps_like ? cyclotomic_value(p, x, y) : cyclotomic_value(2 * p, x, y);
                TrialFactorization fac = trial_prime_factors(target, cfg.factor_bound);
                Json reports = Json::array();
                for (i64 qq : fac.primes) {
                    if (qq == 2 || qq == p || x % qq == 0 || y % qq == 0) continue;
                    VerifyReport rep = verify_lemma_relation(variant, p, x, y, qq);
                    Json jr = to_json(rep);
                    jr["q"] = qq;
                    reports.push_back(jr);
                    for (auto& row : verify_csv_rows(rep)) {
                        row.insert(row.begin(), std::to_string(qq));
                        csv_rows.push_back(row);
                    }
                }
                results = Json{{"phi_value", big_str(target)},
                               {"unfactored_cofactor", big_str(fac.cofactor)},
                               {"reports", reports}};
            }
        } else if (*witness) {
            command = "witness";
            check_p_limit(p, cfg);
            Policy policy = make_policy(policy_spec);
            WitnessResult res;
            inputs = Json{{"driver", driver_name}, {"p", p},
                          {"policy", policy_spec.empty() ? "unknown" : policy_spec}};
            if (driver_name == "cj2") {
                if (!have_uv)
                    throw precondition_error(errc::out_of_range, "cj2 driver needs --u and --v");
                res = witness_search_cj2(p, BigInt(u_str), BigInt(v_str), qmax, policy, jobs);
                inputs["u"] = u_str;
                inputs["v"] = v_str;
                inputs["qmax"] = qmax;
            } else if (driver_name == "cj3") {
                res = witness_search_cj3(p, qmax, policy, jobs);
                inputs["qmax"] = qmax;
            } else {
                std::vector<i64> S = parse_int_list(s_list);
                std::vector<i64> ms = parse_int_list(m_list);
                if (ms.empty())
                    for (i64 i = 1; i <= p - 1; ++i) ms.push_back(i);
                res = witness_search_crit(p, S, ms);
                inputs["s"] = s_list;
                inputs["m_values"] = m_list.empty() ? "1..p-1" : m_list;
            }
            results = to_json(res);
            if (driver_name == "crit") results["minkowski_bound"] = minkowski_bound_str(p);
            csv_header = {"found", "q", "primes_scanned"};
            csv_rows = {{res.found ? "true" : "false", res.q ? std::to_string(*res.q) : "",
                         std::to_string(res.primes_scanned)}};
            for (const auto& f : res.crit_findings)
                csv_rows.push_back({"total_split", std::to_string(f.q),
                                    std::to_string(f.n) + ":" + std::to_string(f.xi_index) + ":m" +
                                        std::to_string(f.m)});
        } else if (*scanp3) {
            command = "scan-p3";
            if (qmax == 0) qmax = cfg.q_max;
            P3ScanResult res = scan_p3(smax, qmax, jobs);
            inputs = Json{{"smax", smax}, {"qmax", qmax}};
            results = to_json(res);
            csv_header = {"s", "t", "u", "v", "all_split", "primes_checked", "failing_q"};
            for (const auto& r : res.pairs)
                csv_rows.push_back({std::to_string(r.s), std::to_string(r.t), big_str(r.u),
                                    big_str(r.v), r.all_split ? "true" : "false",
                                    std::to_string(r.primes_checked),
                                    r.failing_q ? std::to_string(*r.failing_q) : ""});
        } else if (*rank) {
            command = "rank";
            check_p_limit(p, cfg);
            BigInt u(u_str), v(v_str);
            FamilySpec spec;
            spec.label = FamilyLabel::Cj3;
            if (family_name == "thm1") spec.label = FamilyLabel::Thm1;
            if (family_name == "critm") {
                spec.label = FamilyLabel::CritM;
                spec.m = m;
            }
            if (family_name == "c2") spec.label = FamilyLabel::C2;
            if (family_name == "c4") spec.label = FamilyLabel::C4;
            std::vector<SplitContext> contexts;
            for (i64 qq : primes_in(3, qmax)) {
                if (qq == p || u % qq == 0 || v % qq == 0) continue;
                contexts.push_back(build_context(p, qq, u, v));
            }
            RankResult res = radical_rank_lower_bound(p, spec, contexts);
            inputs = Json{{"p", p}, {"u", u_str}, {"v", v_str}, {"qmax", qmax},
                          {"family", family_name}};
            results = to_json(res);
            csv_header = {"contexts", "rank"};
            for (std::size_t i = 0; i < res.progression.size(); ++i)
                csv_rows.push_back({std::to_string(i + 1), std::to_string(res.progression[i])});
        }

        std::optional<double> timing;
        if (with_timing) {
            auto dt = std::chrono::steady_clock::now() - t0;
            timing = std::chrono::duration<double>(dt).count();
            err << "elapsed: " << *timing << " s\n";
        }
        if (format == "csv") {
            write_csv(out, csv_header, csv_rows);
        } else {
            out << make_envelope(command, std::move(inputs), std::move(results), timing).dump(2)
                << "\n";
        }
        return 0;
    } catch (const precondition_error& e) {
        err << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        err << "internal fault: " << e.what() << "\n";
        return 4;
    } catch (const std::logic_error& e) {
        err << "internal fault: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace cyclo::cli
