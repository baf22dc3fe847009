// forcing-lab: command-line front end.
//   compute          F / F_t of a single input graph (SolveResult JSON)
//   certify          TF-certificate for a claw-free cubic graph
//   verify-theorems  bound + extremal checks over a graph6 corpus
//   ratio-scan       F_t/F ratio table over diamond-necklaces
//   generate         family generators (graph6 / multigraph text)
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 instance too
// large, 4 precondition violated.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcing/builders.hpp"
#include "forcing/codec.hpp"
#include "forcing/families.hpp"
#include "forcing/harness.hpp"
#include "forcing/solver.hpp"

namespace {

using namespace forcing;

int exit_code_for(errc code) {
    switch (code) {
        case errc::instance_too_large:
            return 3;
        case errc::is_k4:
        case errc::not_claw_free_cubic:
        case errc::has_diamond_unit:
        case errc::partition_failure:
        case errc::layering_stalled:
            return 4;
        default:
            return 2;
    }
}

std::string slurp(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SimpleGraph read_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "edgelist") return from_edgelist(text);
    if (format == "multigraph") throw Error(errc::parse_error, "multigraph format carries no simple graph");
    // graph6: first non-empty line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) return from_graph6(line);
    throw Error(errc::parse_error, "no graph6 line in input");
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "graph6";
    int workers = 0;
    bool force = false;
    bool json = false;
    int max_n = 16;
};

SolveOptions solve_opts(const CommonOpts& c) {
    SolveOptions o;
    o.workers = c.workers;
    o.force = c.force;
    return o;
}

int run_compute(const CommonOpts& c, bool want_f, bool want_ft) {
    SimpleGraph g = read_graph(c.input, c.format);
    SolveOptions opts = solve_opts(c);
    nlohmann::json out;
    if (want_f && want_ft) {
        out["F"] = nlohmann::json::parse(solve_result_to_json(forcing_number(g, opts)));
        out["Ft"] = nlohmann::json::parse(solve_result_to_json(total_forcing_number(g, opts)));
    } else if (want_ft) {
        out = nlohmann::json::parse(solve_result_to_json(total_forcing_number(g, opts)));
    } else {
        out = nlohmann::json::parse(solve_result_to_json(forcing_number(g, opts)));
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_certify(const CommonOpts& c) {
    SimpleGraph g = read_graph(c.input, c.format);
    TFCertificate cert = tfset_clawfree(g);
    std::cout << certificate_to_json(cert) << "\n";
    return cert.is_valid && cert.meets_bound ? 0 : 1;
}

int run_verify(const CommonOpts& c) {
    std::string text = slurp(c.input);
    std::istringstream in(text);
    std::string line;
    std::vector<SimpleGraph> graphs;
    std::vector<std::string> ids;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            graphs.push_back(from_graph6(line));
            ids.push_back("line " + std::to_string(lineno));
        } catch (const Error& e) {
            std::cerr << "skipping line " << lineno << ": " << e.what() << "\n";
        }
    }
    VerificationReport rep = verify_theorems(graphs, ids, c.max_n, solve_opts(c));
    std::cout << (c.json ? report_to_json(rep) : report_to_text(rep));
    return rep.all_pass ? 0 : 1;
}

int run_ratio_scan(const CommonOpts& c, int k_max) {
    auto rows = ratio_scan(k_max, solve_opts(c));
    bool ok = true;
    if (c.json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            arr.push_back({{"k", r.k},
                           {"F", r.forcing},
                           {"Ft", r.total_forcing},
                           {"ratio", r.ratio()},
                           {"source", r.from_solver ? "solver" : "formula"},
                           {"identity_holds", r.identity_holds}});
            ok = ok && r.identity_holds;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "k\tF\tFt\tratio\tsource\n";
        for (const auto& r : rows) {
            std::cout << r.k << "\t" << r.forcing << "\t" << r.total_forcing << "\t" << r.ratio() << "\t"
                      << (r.from_solver ? "solver" : "formula") << (r.identity_holds ? "" : "\tIDENTITY-FAIL")
                      << "\n";
            ok = ok && r.identity_holds;
        }
    }
    return ok ? 0 : 1;
}

int run_generate(const std::string& family, int param, const std::string& multigraph_input) {
    if (family == "necklace") {
        std::cout << to_graph6(diamond_necklace(param).graph) << "\n";
    } else if (family == "prism") {
        std::cout << to_graph6(prism()) << "\n";
    } else if (family == "fig4") {
        std::cout << to_graph6(paper_graph_fig4(param).graph) << "\n";
    } else if (family == "fig7") {
        std::cout << to_graph6(paper_graph_fig7().graph) << "\n";
    } else if (family == "fig9") {
        std::cout << to_graph6(paper_graph_fig9().graph) << "\n";
    } else if (family == "expand") {
        Multigraph m = from_multigraph_text(slurp(multigraph_input));
        std::cout << to_graph6(triangle_expansion(m).graph) << "\n";
    } else if (family == "multigraphs") {
        for (const auto& m : enumerate_cubic_multigraphs(param)) std::cout << to_multigraph_text(m) << "\n";
    } else {
        throw Error(errc::bad_parameter, "unknown family: " + family);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing / total forcing laboratory for claw-free cubic graphs"};
    app.require_subcommand(1);
    CommonOpts common;

    auto add_common = [&](CLI::App* sub, bool with_max_n = false) {
        sub->add_option("--input", common.input, "input file or - for stdin");
        sub->add_option("--format", common.format, "graph6|edgelist|multigraph")
            ->check(CLI::IsMember({"graph6", "edgelist", "multigraph"}));
        sub->add_option("--workers", common.workers, "solver worker threads (default: FORCING_LAB_WORKERS or 1)");
        sub->add_flag("--force", common.force, "lift the solver's soft instance limit");
        sub->add_flag("--json", common.json, "emit JSON");
        if (with_max_n) sub->add_option("--max-n", common.max_n, "skip corpus graphs above this order");
    };

    auto* compute = app.add_subcommand("compute", "exact F and/or F_t of one graph");
    bool want_f = false, want_ft = false, want_both = false;
    compute->add_flag("--f", want_f, "forcing number");
    compute->add_flag("--ft", want_ft, "total forcing number");
    compute->add_flag("--both", want_both, "both numbers");
    add_common(compute);

    auto* certify = app.add_subcommand("certify", "constructive TF-certificate of size <= n/2");
    add_common(certify);

    auto* verify = app.add_subcommand("verify-theorems", "run all bound/extremal checks over a graph6 corpus");
    add_common(verify, /*with_max_n=*/true);

    auto* ratio = app.add_subcommand("ratio-scan", "F_t/F over diamond-necklaces");
    int k_max = 10;
    ratio->add_option("k_max", k_max, "largest necklace size")->required();
    add_common(ratio);

    auto* generate = app.add_subcommand("generate", "emit a named family graph");
    std::string family;
    int param = 0;
    std::string multigraph_input = "-";
    generate->add_option("family", family, "necklace|prism|fig4|fig7|fig9|expand|multigraphs")->required();
    generate->add_option("param", param, "k for necklace, ring length for fig4, n for multigraphs");
    generate->add_option("--multigraph", multigraph_input, "multigraph text input for expand");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            if (want_both || (!want_f && !want_ft)) want_f = want_ft = true;
            return run_compute(common, want_f, want_ft);
        }
        if (certify->parsed()) return run_certify(common);
        if (verify->parsed()) return run_verify(common);
        if (ratio->parsed()) return run_ratio_scan(common, k_max);
        if (generate->parsed()) return run_generate(family, param, multigraph_input);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
