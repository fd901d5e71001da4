// bei: invariants, bounds and exact Betti-table checks for binomial edge
// ideals of (generalized block) graphs.
//
// Subcommands:
//   analyze    combinatorial report: invariants, classification, bounds,
//              extremal prediction
//   oracle     graded Betti table of the lex initial ideal, with reg/pd and
//              extremal entries
//   verify     run the combinatorial predictions against the oracle
//   decompose  split into indecomposable pieces
//   gen        emit seeded random generalized block graphs
//
// Exit codes: 0 success, 1 input error, 2 verification failure, 3 resource
// limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bei/errors.hpp"
#include "bei/graph_io.hpp"
#include "bei/invariants.hpp"
#include "bei/json_io.hpp"
#include "bei/oracle.hpp"
#include "bei/rng.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitResource = 3;

struct Check {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string reason;
    json witness = json::object();
};

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const Check& c : checks) {
        json j;
        j["check"] = c.name;
        j["status"] = c.status;
        if (!c.reason.empty()) j["reason"] = c.reason;
        if (!c.witness.empty()) j["witness"] = c.witness;
        arr.push_back(j);
    }
    return arr;
}

void print_checks_table(const std::vector<Check>& checks) {
    for (const Check& c : checks) {
        std::cout << (c.status == "pass"   ? "PASS "
                      : c.status == "fail" ? "FAIL "
                                           : "SKIP ")
                  << c.name;
        if (!c.reason.empty()) std::cout << "  (" << c.reason << ")";
        std::cout << "\n";
    }
}

int default_max_vars() {
    if (const char* env = std::getenv("BEI_MAX_VARS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20;
}

void print_invariants_table(const bei::InvariantReport& r) {
    std::cout << "n = " << r.n << ", components = " << r.c << "\n";
    std::cout << "classification: " << bei::to_string(r.certificate.verdict) << "\n";
    std::cout << "omega = " << r.omega << ", cl = " << r.cl << ", f = " << r.f
              << ", iv = " << r.iv << ", pv = " << r.pv << "\n";
    std::cout << "minimal cut sets: m = " << r.m << " (";
    bool first = true;
    for (const auto& [size, count] : r.a) {
        if (!first) std::cout << ", ";
        std::cout << "a_" << size << " = " << count;
        first = false;
    }
    std::cout << ")\n";
    if (r.p) std::cout << "projective dimension p = " << *r.p << "\n";
    if (r.ell) std::cout << "longest induced path = " << *r.ell << "\n";
    std::cout << "alpha = " << r.alpha_type1 << ", k = " << r.k_pdeg
              << (r.is_star ? ", star graph" : "") << "\n";
}

void print_bound(const char* name, const bei::Bound& b) {
    std::cout << name << ": ";
    if (b.applicable)
        std::cout << *b.value;
    else
        std::cout << "n/a (" << b.reason << ")";
    std::cout << "\n";
}

int cmd_analyze(const std::string& path, const std::string& format, int ell_cap) {
    bei::Graph g = bei::load_graph_file(path);
    bei::InvariantOptions opts{.ell_cap = ell_cap};
    bei::InvariantReport r = bei::invariant_report(g, opts);
    bei::BoundsReport b = bei::bounds_report(g, opts);
    std::optional<bei::ExtremalPrediction> pred;
    if (r.certificate.is_gbg()) pred = bei::extremal_prediction(g);
    if (format == "json") {
        json j;
        j["invariants"] = bei::to_json(r);
        j["bounds"] = bei::to_json(b);
        if (pred) j["extremal_prediction"] = bei::to_json(*pred);
        std::cout << j.dump(2) << "\n";
    } else {
        print_invariants_table(r);
        print_bound("lower bound (induced path)", b.lower_mm);
        print_bound("lower bound (m + c)", b.lower_gbg);
        print_bound("upper bound (n - 1)", b.upper_general);
        print_bound("upper bound (cl)", b.upper_cl);
        print_bound("upper bound (componentwise cl + alpha - pv)", b.upper_improved);
        print_bound("exact regularity (unique extremal case)", b.exact_reg);
        if (pred && pred->applicable) {
            std::cout << "extremal Betti number at (" << pred->position.first << ", "
                      << pred->position.second << ")";
            if (pred->value) std::cout << " with value " << *pred->value;
            std::cout << (pred->unique ? " (unique)" : " (not unique)") << "\n";
        }
    }
    return kExitOk;
}

int cmd_oracle(const std::string& path, const std::string& format,
               const bei::OracleOptions& opts) {
    bei::Graph g = bei::load_graph_file(path);
    bei::OracleSummary s = bei::oracle_summary(g, opts);
    if (format == "json") {
        std::cout << bei::to_json(s).dump(2) << "\n";
    } else {
        std::cout << "reg = " << s.reg << ", pd = " << s.pd << "\n";
        std::cout << "betti (i, j, value):\n";
        for (const auto& [ij, v] : s.table.entries)
            std::cout << "  " << ij.first << " " << ij.second << " " << v << "\n";
        std::cout << "extremal:\n";
        for (const auto& [i, j, v] : s.extremal)
            std::cout << "  " << i << " " << j << " " << v << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& format) {
    bei::Graph g = bei::load_graph_file(path);
    bei::Decomposition d = bei::decompose(g);
    if (format == "json") {
        std::cout << bei::to_json(d).dump(2) << "\n";
    } else {
        std::cout << d.component_vertex_sets.size() << " indecomposable piece(s)\n";
        for (const auto& c : d.component_vertex_sets) std::cout << "  " << c.to_string() << "\n";
        std::cout << "glue vertices:";
        for (int v : d.glue_vertices) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitOk;
}

std::vector<Check> run_verification(const bei::Graph& g, const bei::OracleOptions& opts) {
    std::vector<Check> checks;
    bei::InvariantOptions iopts{.ell_cap = 20};
    bei::InvariantReport r = bei::invariant_report(g, iopts);
    bei::OracleSummary s = bei::oracle_summary(g, opts);
    bool gbg = r.certificate.is_gbg();
    bool connected = r.c == 1;

    if (gbg) {
        Check c{"pd-formula", "pass", "", {}};
        if (s.pd != *r.p) {
            c.status = "fail";
            c.witness = {{"expected", *r.p}, {"oracle", s.pd}};
        }
        checks.push_back(c);
    } else {
        checks.push_back({"pd-formula", "skipped", "not a generalized block graph", {}});
    }

    if (gbg && connected && g.n() >= 2) {
        bei::ExtremalPrediction pred = bei::extremal_prediction(g);
        auto [pi, pj] = pred.position;
        bool extremal = false;
        for (const auto& [i, j, v] : s.extremal) extremal |= (i == pi && j == pj);
        Check pos{"extremal-position", "pass", "", {}};
        if (s.table.at(pi, pj) == 0 || !extremal) {
            pos.status = "fail";
            pos.witness = {{"position", {pi, pj}},
                           {"value", s.table.at(pi, pj)},
                           {"extremal", extremal}};
        }
        checks.push_back(pos);
        if (pred.value) {
            Check val{"extremal-value", "pass", "", {}};
            if (s.table.at(pi, pj) != *pred.value) {
                val.status = "fail";
                val.witness = {{"expected", *pred.value}, {"oracle", s.table.at(pi, pj)}};
            }
            checks.push_back(val);
        } else {
            checks.push_back(
                {"extremal-value", "skipped", "an internal vertex lies in only two cliques", {}});
        }
        bei::UniqueExtremalResult u = bei::classify_unique_extremal(g);
        Check uq{"unique-classifier", "pass", "", {}};
        if (u.unique != s.table.unique_extremal() || (u.unique && s.reg != *u.exact_reg)) {
            uq.status = "fail";
            uq.witness = {{"classifier", u.unique},
                          {"oracle_unique", s.table.unique_extremal()},
                          {"oracle_reg", s.reg}};
            if (u.exact_reg) uq.witness["classifier_reg"] = *u.exact_reg;
        }
        checks.push_back(uq);
    } else {
        std::string why = !gbg         ? "not a generalized block graph"
                          : !connected ? "graph is disconnected"
                                       : "single vertex";
        checks.push_back({"extremal-position", "skipped", why, {}});
        checks.push_back({"extremal-value", "skipped", why, {}});
        checks.push_back({"unique-classifier", "skipped", why, {}});
    }

    {
        bei::BoundsReport b = bei::bounds_report(g, iopts);
        Check c{"bounds-sandwich", "pass", "", {}};
        json bad = json::array();
        if (b.lower_mm.applicable && s.reg < *b.lower_mm.value) bad.push_back("induced-path");
        if (b.upper_general.applicable && s.reg > *b.upper_general.value) bad.push_back("n-1");
        if (b.upper_cl.applicable && s.reg > *b.upper_cl.value) bad.push_back("cl");
        if (b.lower_gbg.applicable && s.reg < *b.lower_gbg.value) bad.push_back("m+c");
        if (b.upper_improved.applicable && s.reg > *b.upper_improved.value)
            bad.push_back("cl+alpha-pv");
        if (b.exact_reg.applicable && s.reg != *b.exact_reg.value) bad.push_back("exact");
        if (!bad.empty()) {
            c.status = "fail";
            c.witness = {{"violated", bad}, {"oracle_reg", s.reg}};
        }
        if (!gbg) c.reason = "general bounds only";
        checks.push_back(c);
    }

    if (r.certificate.verdict != bei::GraphClass::NotChordal) {
        bei::Decomposition d = bei::decompose(g);
        if (d.component_vertex_sets.size() < 2) {
            checks.push_back({"betti-product", "skipped", "graph is indecomposable", {}});
        } else {
            int reg_sum = 0, pd_sum = 0;
            long long corner = 1;
            bool all_unique = true;
            for (const auto& piece : d.components) {
                bei::OracleSummary ps = bei::oracle_summary(piece.graph, opts);
                reg_sum += ps.reg;
                pd_sum += ps.pd;
                all_unique = all_unique && ps.table.unique_extremal();
                corner *= ps.table.at(ps.pd, ps.pd + ps.reg);
            }
            Check c{"betti-product", "pass", "", {}};
            bool ok = s.reg == reg_sum && s.pd == pd_sum;
            if (all_unique) ok = ok && s.table.at(s.pd, s.pd + s.reg) == corner;
            if (!ok) {
                c.status = "fail";
                c.witness = {{"reg", s.reg},
                             {"reg_sum", reg_sum},
                             {"pd", s.pd},
                             {"pd_sum", pd_sum},
                             {"corner", s.table.at(s.pd, s.pd + s.reg)},
                             {"corner_product", corner}};
            }
            checks.push_back(c);
        }
    } else {
        checks.push_back({"betti-product", "skipped", "not chordal", {}});
    }
    return checks;
}

int cmd_verify(const std::string& path, const std::string& format,
               const bei::OracleOptions& opts) {
    bei::Graph g = bei::load_graph_file(path);
    std::vector<Check> checks = run_verification(g, opts);
    if (format == "json")
        std::cout << checks_json(checks).dump(2) << "\n";
    else
        print_checks_table(checks);
    for (const Check& c : checks)
        if (c.status == "fail") return kExitVerifyFail;
    return kExitOk;
}

int cmd_gen(uint64_t seed, int facets, int max_clique, int count, const std::string& out) {
    if (count > 1 && out.empty()) {
        std::cerr << "error: --count above 1 needs --out PREFIX\n";
        return kExitInput;
    }
    bei::SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) {
        bei::GeneratedGraph g = bei::random_gbg(i == 0 ? seed : rng.next(), facets, max_clique);
        std::string text = bei::to_text(g.graph);
        if (out.empty()) {
            std::cout << text;
        } else {
            char suffix[16];
            std::snprintf(suffix, sizeof suffix, "_%03d.txt", i);
            std::string name = out + suffix;
            std::ofstream f(name);
            if (!f) {
                std::cerr << "error: cannot write " << name << "\n";
                return kExitInput;
            }
            f << text;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial edge ideal toolkit"};
    app.require_subcommand(1);

    std::string path, format = "table";
    int ell_cap = 24;
    bei::OracleOptions oopts;
    oopts.max_vars = default_max_vars();

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "combinatorial invariants and bounds");
    analyze->add_option("file", path)->required();
    add_format(analyze);
    analyze->add_option("--ell-cap", ell_cap, "skip induced-path search above this n");

    CLI::App* oracle = app.add_subcommand("oracle", "Betti table of the initial ideal");
    oracle->add_option("file", path)->required();
    add_format(oracle);
    oracle->add_option("--char", oopts.field_char, "field characteristic (0 or prime)");
    oracle->add_option("--max-vars", oopts.max_vars, "variable cap (env BEI_MAX_VARS)");
    oracle->add_option("--threads", oopts.threads, "worker threads (0 = auto)");
    bool no_prune = false;
    oracle->add_flag("--no-prune", no_prune, "disable cone pruning (reference mode)");

    CLI::App* verify = app.add_subcommand("verify", "check predictions against the oracle");
    verify->add_option("file", path)->required();
    add_format(verify);
    verify->add_option("--char", oopts.field_char, "field characteristic (0 or prime)");
    verify->add_option("--max-vars", oopts.max_vars, "variable cap (env BEI_MAX_VARS)");
    verify->add_option("--budget", oopts.wall_limit, "oracle wall-clock budget in seconds");
    verify->add_option("--threads", oopts.threads, "worker threads (0 = auto)");

    CLI::App* decomp = app.add_subcommand("decompose", "indecomposable pieces");
    decomp->add_option("file", path)->required();
    add_format(decomp);

    CLI::App* gen = app.add_subcommand("gen", "seeded random generalized block graphs");
    uint64_t seed = 1;
    int facets = 3, max_clique = 4, count = 1;
    std::string out;
    gen->add_option("--seed", seed)->required();
    gen->add_option("--facets", facets, "number of maximal cliques");
    gen->add_option("--max-clique", max_clique, "largest clique size");
    gen->add_option("--count", count, "how many graphs to emit");
    gen->add_option("--out", out, "file prefix (stdout when absent)");

    CLI11_PARSE(app, argc, argv);
    oopts.prune = !no_prune;

    try {
        if (*analyze) return cmd_analyze(path, format, ell_cap);
        if (*oracle) return cmd_oracle(path, format, oopts);
        if (*verify) return cmd_verify(path, format, oopts);
        if (*decomp) return cmd_decompose(path, format);
        if (*gen) return cmd_gen(seed, facets, max_clique, count, out);
    } catch (const bei::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const bei::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
