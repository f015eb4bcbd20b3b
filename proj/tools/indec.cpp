// Command-line front end: constructions, verification and exhaustive search.
//
// Exit codes: 0 ok, 1 usage, 2 unsupported or unknown, 3 infeasible,
// 4 verification failure.

#include "indec/blowup.hpp"
#include "indec/dense.hpp"
#include "indec/designs.hpp"
#include "indec/embedded.hpp"
#include "indec/error.hpp"
#include "indec/oracle.hpp"
#include "indec/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace indec;

namespace {

enum Exit : int { Ok = 0, Usage = 1, Unsupported = 2, Infeasible = 3, VerifyFailed = 4 };

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument:
        return Usage;
    case ErrorKind::NoFeasibleParameters:
    case ErrorKind::NoDecomposition:
    case ErrorKind::DivisibilityViolation:
        return Infeasible;
    case ErrorKind::InternalInvariant:
        return VerifyFailed;
    default:
        return Unsupported;
    }
}

struct Options {
    std::size_t order = 0;
    std::size_t count = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t p = 0;
    std::string pattern;
    std::string out;
    std::string graph_out;
    std::string format = "json";
    std::string graph_file;
    std::string decomposition_file;
    bool induced = false;
    std::uint64_t budget = 0;
};

SearchBudget budget_from(const Options& opt)
{
    auto budget = SearchBudget::from_env();
    if (opt.budget > 0)
        budget.max_nodes = opt.budget;
    return budget;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    file << text;
    if (!file)
        throw Error(ErrorKind::InvalidArgument, "failed writing " + path);
}

std::string read_file(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

/// Artifact to --out when given (summary on stdout), else to stdout.
void emit(const Options& opt, const std::string& artifact, const std::string& summary)
{
    if (opt.out.empty()) {
        std::cout << artifact;
        return;
    }
    write_file(opt.out, artifact);
    std::cout << summary;
}

std::string artifact(const Options& opt, const nlohmann::json& j, const SmallGraph& graph)
{
    if (opt.format == "edgelist")
        return to_edge_list(graph);
    return dump(j);
}

int cmd_mols(const Options& opt)
{
    if (opt.order == 0)
        throw Error(ErrorKind::InvalidArgument, "--order must be positive");
    const auto family = mols(opt.order, opt.count);
    if (!is_mols(family))
        throw Error(ErrorKind::InternalInvariant, "constructed squares are not mutually orthogonal");
    emit(opt, dump(to_json(family)),
         std::to_string(family.size()) + " MOLS of order " + std::to_string(family.order) + "\n");
    return Ok;
}

int cmd_td(const Options& opt)
{
    if (opt.k < 2 || opt.n == 0)
        throw Error(ErrorKind::InvalidArgument, "--k must be >= 2 and --n positive");
    if (!td_constructible(opt.k, opt.n))
        throw Error(ErrorKind::UnsupportedOrder,
                    "TD(" + std::to_string(opt.k) + "," + std::to_string(opt.n) + ") needs " +
                        std::to_string(opt.k - 2) + " MOLS of order " + std::to_string(opt.n) +
                        "; MacNeish bound is " + std::to_string(macneish(opt.n)));
    const auto td = make_td(opt.k, opt.n);
    const auto report = verify_td(td);
    if (!report.ok()) {
        std::cerr << "design failed verification: " << report.violations.front().message << "\n";
        return VerifyFailed;
    }
    emit(opt, dump(to_json(td)),
         "TD(" + std::to_string(opt.k) + "," + std::to_string(opt.n) + ") with " +
             std::to_string(td.blocks().size()) + " blocks, verified\n");
    return Ok;
}

int check_and_emit(const Options& opt, const Decomposition& d, const nlohmann::json& j, const std::string& what)
{
    const auto graph = d.host.to_graph();
    const auto report = verify_decomposition(graph, d.pattern, d.copies, d.induced);
    if (!report.ok()) {
        std::cerr << what << " failed verification: " << report.violation->message << "\n";
        return VerifyFailed;
    }
    if (!opt.graph_out.empty())
        write_file(opt.graph_out, to_edge_list(graph));
    emit(opt, artifact(opt, j, graph),
         what + ": " + std::to_string(d.copies.size()) + " induced copies of K" + d.pattern.to_string() +
             " covering " + std::to_string(graph.edge_count()) + " edges, verified\n");
    return Ok;
}

int cmd_blowup(const Options& opt)
{
    const auto pattern = Pattern::parse(opt.pattern);
    const auto d = blowup_decompose(pattern);
    return check_and_emit(opt, d, to_json(d), "blow-up decomposition");
}

int cmd_embedded(const Options& opt)
{
    const auto pattern = Pattern::parse(opt.pattern);
    const auto d = embedded_decompose(pattern, opt.p);
    const auto report = verify_embedded(d);
    if (!report.ok()) {
        std::cerr << "embedded decomposition failed verification: " << report.violation->message << "\n";
        return VerifyFailed;
    }
    return check_and_emit(opt, d.base, to_json(d), "embedded decomposition");
}

int cmd_dense(const Options& opt)
{
    const auto pattern = Pattern::parse(opt.pattern);
    const auto cert = assemble(pattern, opt.n, budget_from(opt));
    const auto graph = cert.decomposition.host.to_graph();
    if (!opt.graph_out.empty())
        write_file(opt.graph_out, to_edge_list(graph));
    const auto& pr = cert.params;
    std::ostringstream summary;
    summary << "n = " << pr.n << " = " << pr.n_prime << "*" << pr.p << " + " << pr.t << "  (p=" << pr.p
            << " q=" << pr.q << " r=" << pr.r << " s=" << pr.s << ")\n"
            << "copies: " << cert.decomposition.copies.size() << ", non-edges: " << cert.non_edge_count << "\n"
            << "bound: lhs = " << cert.bound_lhs << " < rhs = (pq + p/2)*n = "
            << static_cast<double>(cert.bound_rhs_twice) / 2.0 << "\n";
    const auto text = artifact(opt, to_json(cert), graph);
    if (opt.out.empty()) {
        std::cout << text;
        std::cerr << summary.str();
    } else {
        write_file(opt.out, text);
        std::cout << summary.str();
    }
    return Ok;
}

int cmd_verify(const Options& opt)
{
    std::ifstream graph_in(opt.graph_file);
    if (!graph_in)
        throw Error(ErrorKind::InvalidArgument, "cannot read " + opt.graph_file);
    const auto graph = parse_edge_list(graph_in);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(opt.decomposition_file));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
    const auto d = decomposition_from_json(j);
    const auto report = verify_decomposition(graph, d.pattern, d.copies, opt.induced);
    if (!report.ok()) {
        const auto& v = *report.violation;
        std::cout << "FAIL " << v.kind << ": " << v.message << "\n";
        if (!v.witness.empty()) {
            std::cout << "witness:";
            for (auto w : v.witness)
                std::cout << " " << w + 1;
            std::cout << "\n";
        }
        return VerifyFailed;
    }
    std::cout << "ok: " << d.copies.size() << " " << (opt.induced ? "induced " : "") << "copies of K"
              << d.pattern.to_string() << " decompose " << graph.edge_count() << " edges\n";
    return Ok;
}

int cmd_cex(const Options& opt)
{
    const auto pattern = Pattern::parse(opt.pattern);
    const auto result = cex_exact(opt.n, pattern, budget_from(opt));
    std::cout << "cex(" << opt.n << ", K" << pattern.to_string() << ") = " << result.value << "\n";
    std::cout << to_edge_list(result.witness);
    if (!opt.out.empty())
        write_file(opt.out, artifact(opt, to_json(result), result.witness));
    return Ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Induced decompositions of dense graphs into complete multipartite patterns"};
    app.require_subcommand(1);
    Options opt;

    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Artifact output path (default: stdout)");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Artifact format")->check(CLI::IsMember({"json", "edgelist"}));
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", opt.budget, "Search node budget (overrides INDUCED_DECOMP_BUDGET_NODES)");
    };

    auto* mols_cmd = app.add_subcommand("mols", "Mutually orthogonal Latin squares");
    mols_cmd->add_option("--order", opt.order, "Order n")->required();
    mols_cmd->add_option("--count", opt.count, "Number of squares")->required();
    add_out(mols_cmd);

    auto* td_cmd = app.add_subcommand("td", "Transversal design TD(k,n)");
    td_cmd->add_option("--k", opt.k, "Block size")->required();
    td_cmd->add_option("--n", opt.n, "Group size")->required();
    add_out(td_cmd);

    auto* blowup_cmd = app.add_subcommand("blowup", "Decompose K_{ma_1,...,ma_k} into m^2 induced copies");
    blowup_cmd->add_option("--pattern", opt.pattern, "Part sizes, e.g. 1,2")->required();
    blowup_cmd->add_option("--graph-out", opt.graph_out, "Also write the host as an edge list");
    add_out(blowup_cmd);
    add_format(blowup_cmd);

    auto* embedded_cmd = app.add_subcommand("embedded", "Embedded decomposition of K_{pa_1,...,pa_k}");
    embedded_cmd->add_option("--pattern", opt.pattern, "Part sizes, e.g. 1,2")->required();
    embedded_cmd->add_option("--p", opt.p, "Blow-up factor p")->required()->check(CLI::PositiveNumber);
    embedded_cmd->add_option("--graph-out", opt.graph_out, "Also write the host as an edge list");
    add_out(embedded_cmd);
    add_format(embedded_cmd);

    auto* dense_cmd = app.add_subcommand("dense", "Near-complete n-vertex graph with an induced decomposition");
    dense_cmd->add_option("--pattern", opt.pattern, "Part sizes, e.g. 1,2")->required();
    dense_cmd->add_option("--n", opt.n, "Number of vertices")->required();
    dense_cmd->add_option("--graph-out", opt.graph_out, "Also write G as an edge list");
    add_out(dense_cmd);
    add_format(dense_cmd);
    add_budget(dense_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition against a graph");
    verify_cmd->add_option("--graph", opt.graph_file, "Edge-list file")->required();
    verify_cmd->add_option("--decomposition", opt.decomposition_file, "Decomposition JSON")->required();
    verify_cmd->add_flag("--induced", opt.induced, "Require every copy to be induced");

    auto* cex_cmd = app.add_subcommand("cex", "Exact cex(n,F) by exhaustive search");
    cex_cmd->add_option("--pattern", opt.pattern, "Part sizes, e.g. 1,2")->required();
    cex_cmd->add_option("--n", opt.n, "Number of vertices")->required();
    add_budget(cex_cmd);
    add_out(cex_cmd);
    add_format(cex_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    try {
        if (*mols_cmd)
            return cmd_mols(opt);
        if (*td_cmd)
            return cmd_td(opt);
        if (*blowup_cmd)
            return cmd_blowup(opt);
        if (*embedded_cmd)
            return cmd_embedded(opt);
        if (*dense_cmd)
            return cmd_dense(opt);
        if (*verify_cmd)
            return cmd_verify(opt);
        if (*cex_cmd)
            return cmd_cex(opt);
    } catch (const Error& e) {
        std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
