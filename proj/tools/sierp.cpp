// sierp - edge-isoperimetric toolkit for Sierpinski graphs S(n,m).
//
// Subcommands: graph (edge list), profile (isoperimetric profile table),
// verify (subadditivity / lex optimality / splitting lemmas), metrics
// (bisection width, max profile, Cheeger constant), steiner (compression
// and subadditivation demos).
//
// Exit codes: 0 success, 1 mathematical violation detected, 2 usage or
// size-cap error.  Data goes to stdout (or --out FILE), logs to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sierp/metrics.hpp"
#include "sierp/reporting.hpp"
#include "sierp/steiner.hpp"
#include "sierp/verifier.hpp"

namespace {

using sierp::json;

void write_output(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        if (!data.empty() && data.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << data;
    if (!data.empty() && data.back() != '\n') f << '\n';
}

// comma-separated vertex words and/or 1-based rank ranges "lo-hi"
sierp::VertexSet parse_set(const std::string& spec, const sierp::GraphParams& p) {
    sierp::VertexSet s(p.vcount);
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto dash = token.find('-');
        if (dash != std::string::npos) {
            const uint64_t lo = std::stoull(token.substr(0, dash));
            const uint64_t hi = std::stoull(token.substr(dash + 1));
            if (lo < 1 || hi < lo || hi > p.vcount)
                throw std::invalid_argument("rank range out of bounds: " + token);
            for (uint64_t r = lo; r <= hi; ++r) s.insert(r - 1);
        } else {
            s.insert(sierp::vertex_index(sierp::parse_vertex(token, p), p));
        }
    }
    return s;
}

std::string set_text(const sierp::VertexSet& s, const sierp::GraphParams& p) {
    std::string out;
    s.for_each([&](uint64_t v) {
        if (!out.empty()) out += ',';
        out += sierp::vertex_text(sierp::vertex_at(p, v), p);
    });
    return out;
}

json set_json(const sierp::VertexSet& s, const sierp::GraphParams& p) {
    json arr = json::array();
    s.for_each([&](uint64_t v) { arr.push_back(sierp::vertex_text(sierp::vertex_at(p, v), p)); });
    return arr;
}

int run_graph(int n, int m, const std::string& format, const std::string& out) {
    const sierp::GraphParams p(n, m);
    if (format == "json") {
        json edges = json::array();
        sierp::for_each_edge(p, [&](uint64_t a, uint64_t b) {
            edges.push_back({sierp::vertex_text(sierp::vertex_at(p, a), p),
                             sierp::vertex_text(sierp::vertex_at(p, b), p)});
        });
        write_output(json{{"edges", edges}}.dump(), out);
    } else {
        std::string data;
        sierp::for_each_edge(p, [&](uint64_t a, uint64_t b) {
            data += sierp::vertex_text(sierp::vertex_at(p, a), p);
            data += ' ';
            data += sierp::vertex_text(sierp::vertex_at(p, b), p);
            data += '\n';
        });
        write_output(data, out);
    }
    return 0;
}

int run_profile(int n, int m, const std::string& method, const std::string& format,
                const std::string& out) {
    const sierp::GraphParams p(n, m);
    sierp::ProfileTable table{p, {}};
    if (method == "recurrence") {
        table = sierp::profile_recurrence(p);
    } else if (method == "direct") {
        table = sierp::profile_direct_table(p);
    } else if (method == "brute") {
        table.values = sierp::profile_bruteforce_table(p);
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    write_output(format == "json" ? sierp::profile_json(table).dump()
                                  : sierp::profile_csv(table),
                 out);
    return 0;
}

int run_verify_subadd(int n, int m, int max_nm, int jobs, const std::string& out) {
    if (max_nm > 0) {
        json reports = json::array();
        uint64_t violations = 0;
        for (int mm = 2; mm <= max_nm - 1; ++mm)
            for (int nn = 1; nn + mm <= max_nm; ++nn) {
                if (sierp::pow_u64(mm, nn) > sierp::pair_sweep_vertex_limit) break;
                const auto rep = sierp::verify_subadditivity(sierp::GraphParams(nn, mm), jobs);
                violations += rep.violations.size() + rep.branch_mismatches;
                reports.push_back(sierp::subadd_report_json(rep));
            }
        write_output(json{{"max_nm", max_nm},
                          {"reports", reports},
                          {"total_violations", violations},
                          {"pass", violations == 0}}
                         .dump(),
                     out);
        return violations == 0 ? 0 : 1;
    }
    const auto rep = sierp::verify_subadditivity(sierp::GraphParams(n, m), jobs);
    write_output(sierp::subadd_report_json(rep).dump(), out);
    return rep.pass() ? 0 : 1;
}

int run_verify_optimal(int n, int m, const std::string& out) {
    const auto rep = sierp::verify_lex_optimality(sierp::GraphParams(n, m));
    write_output(sierp::optimality_report_json(rep).dump(), out);
    return rep.pass() ? 0 : 1;
}

int run_verify_lemmas(int n, int m, int max_nm, const std::string& out) {
    if (max_nm > 0) {
        json reports = json::array();
        bool pass = true;
        for (int mm = 2; mm <= max_nm - 1; ++mm)
            for (int nn = 1; nn + mm <= max_nm; ++nn) {
                if (sierp::pow_u64(mm, nn) > sierp::theta_edge_scan_limit) break;
                const auto rep = sierp::verify_lemma_suite(sierp::GraphParams(nn, mm));
                pass = pass && rep.pass();
                reports.push_back(sierp::lemma_report_json(rep));
            }
        write_output(json{{"max_nm", max_nm}, {"reports", reports}, {"pass", pass}}.dump(),
                     out);
        return pass ? 0 : 1;
    }
    const auto rep = sierp::verify_lemma_suite(sierp::GraphParams(n, m));
    write_output(sierp::lemma_report_json(rep).dump(), out);
    return rep.pass() ? 0 : 1;
}

int run_metrics(int n, int m, const std::string& out) {
    const auto me = sierp::compute_metrics(sierp::GraphParams(n, m));
    write_output(sierp::metrics_json(me).dump(), out);
    return 0;
}

int run_steiner(const std::string& op, int n, int m, int s, int t,
                const std::string& set_spec, int copy, const std::string& format,
                const std::string& out) {
    const sierp::GraphParams p(n, m);
    const sierp::Decoration d(s, t);
    d.check(p);
    const sierp::VertexSet before = parse_set(set_spec, p);
    const int64_t theta_before = sierp::theta_decorated(before, p, d);

    sierp::VertexSet after(p.vcount);
    if (op == "compress") {
        after = copy >= 0 ? sierp::compress_h(before, p, d, copy)
                          : sierp::compress_inf(before, p, d);
    } else if (op == "subadd") {
        after = sierp::subadd(before, p, d);
    } else {
        throw std::invalid_argument("unknown steiner operation: " + op);
    }
    const int64_t theta_after = sierp::theta_decorated(after, p, d);

    if (format == "json") {
        write_output(json{{"op", op},
                          {"set", set_json(after, p)},
                          {"size", after.size()},
                          {"theta_before", theta_before},
                          {"theta_after", theta_after}}
                         .dump(),
                     out);
    } else {
        std::string data;
        data += "set: " + set_text(after, p) + "\n";
        data += "size: " + std::to_string(after.size()) + "\n";
        data += "theta_before: " + std::to_string(theta_before) + "\n";
        data += "theta_after: " + std::to_string(theta_after) + "\n";
        write_output(data, out);
    }
    if (after.size() != before.size() || theta_after > theta_before) {
        std::cerr << "steiner: operation violated a Steiner property\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-isoperimetric profiles of Sierpinski graphs S(n,m)"};
    app.require_subcommand(1);

    int n = 1, m = 2, s = 0, t = 0, jobs = 0, max_nm = 0, copy = -1;
    std::string format, method = "recurrence", out, set_spec, steiner_op;

    auto* graph = app.add_subcommand("graph", "write the edge list of S(n,m)");
    graph->add_option("--n", n, "recursion depth")->required();
    graph->add_option("--m", m, "alphabet size")->required();
    graph->add_option("--format", format, "text or json")->default_val("text");
    graph->add_option("--out", out, "output file (default stdout)");

    auto* profile = app.add_subcommand("profile", "isoperimetric profile of S(n,m)");
    profile->add_option("--n", n, "recursion depth")->required();
    profile->add_option("--m", m, "alphabet size")->required();
    profile->add_option("--method", method, "recurrence, direct, or brute")
        ->default_val("recurrence");
    profile->add_option("--format", format, "csv or json")->default_val("csv");
    profile->add_option("--out", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->require_subcommand(1);
    auto* vsub = verify->add_subcommand("subadd", "subadditivity+sigma of the profile");
    vsub->add_option("--n", n, "recursion depth");
    vsub->add_option("--m", m, "alphabet size");
    vsub->add_option("--max-nm", max_nm, "sweep all (n,m) with n+m <= bound");
    vsub->add_option("--jobs", jobs, "worker threads (default: all cores)");
    vsub->add_option("--out", out, "output file (default stdout)");
    auto* vopt = verify->add_subcommand("optimal", "lex segments vs brute-force minima");
    vopt->add_option("--n", n, "recursion depth")->required();
    vopt->add_option("--m", m, "alphabet size")->required();
    vopt->add_option("--out", out, "output file (default stdout)");
    auto* vlem = verify->add_subcommand("lemmas", "k/q splitting lemmas and duality");
    vlem->add_option("--n", n, "recursion depth");
    vlem->add_option("--m", m, "alphabet size");
    vlem->add_option("--max-nm", max_nm, "sweep all (n,m) with n+m <= bound");
    vlem->add_option("--out", out, "output file (default stdout)");

    auto* metrics = app.add_subcommand("metrics", "bisection width, max profile, Cheeger");
    metrics->add_option("--n", n, "recursion depth")->required();
    metrics->add_option("--m", m, "alphabet size")->required();
    metrics->add_option("--out", out, "output file (default stdout)");

    auto* steiner = app.add_subcommand("steiner", "apply a Steiner operation to a set");
    steiner->add_option("op", steiner_op, "compress or subadd")->required();
    steiner->add_option("--n", n, "recursion depth")->required();
    steiner->add_option("--m", m, "alphabet size")->required();
    steiner->add_option("--s", s, "decoration: corners counted inside")->default_val(0);
    steiner->add_option("--t", t, "decoration: undecorated corners")->default_val(0);
    steiner->add_option("--set", set_spec, "vertices and/or rank ranges, e.g. 00,01,11 or 1-5")
        ->required();
    steiner->add_option("--copy", copy, "compress a single copy instead of cycling");
    steiner->add_option("--format", format, "text or json")->default_val("text");
    steiner->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (graph->parsed()) return run_graph(n, m, format, out);
        if (profile->parsed()) return run_profile(n, m, method, format, out);
        if (verify->parsed()) {
            if (vsub->parsed()) {
                if (max_nm == 0 && (vsub->count("--n") == 0 || vsub->count("--m") == 0))
                    throw std::invalid_argument("verify subadd needs --n/--m or --max-nm");
                return run_verify_subadd(n, m, max_nm, jobs, out);
            }
            if (vopt->parsed()) return run_verify_optimal(n, m, out);
            if (vlem->parsed()) {
                if (max_nm == 0 && (vlem->count("--n") == 0 || vlem->count("--m") == 0))
                    throw std::invalid_argument("verify lemmas needs --n/--m or --max-nm");
                return run_verify_lemmas(n, m, max_nm, out);
            }
        }
        if (metrics->parsed()) return run_metrics(n, m, out);
        if (steiner->parsed())
            return run_steiner(steiner_op, n, m, s, t, set_spec, copy, format, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
