#include "awgraph/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "awgraph/graph.hpp"
#include "awgraph/pipeline.hpp"
#include "awgraph/report.hpp"

namespace awgraph {

namespace {

struct Options {
    std::string family;
    int size = 0;
    std::string input;
    std::string format_in = "edgelist";
    std::string vertex = "0";
    std::optional<double> tol;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string q_branch = "canonical";
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--family", o.family, "built-in graph family")
        ->check(CLI::IsMember({"cycle", "crown", "hadamard", "hypercube"}));
    cmd->add_option("--size", o.size, "family size parameter");
    cmd->add_option("--input", o.input, "graph file");
    cmd->add_option("--format-in", o.format_in, "input format")->check(CLI::IsMember({"edgelist", "dense"}));
    cmd->add_option("--vertex", o.vertex, "base vertex index or 'all'");
    cmd->add_option("--tol", o.tol, "relative residual tolerance (default 1e-8, or $AWGRAPH_TOL)");
    cmd->add_option("--seed", o.seed, "seed for the module decomposition");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--q-branch", o.q_branch, "q candidates to try")->check(CLI::IsMember({"canonical", "all"}));
}

double resolve_tol(const Options& o)
{
    if (o.tol)
        return *o.tol;
    if (const char* env = std::getenv("AWGRAPH_TOL")) {
        try {
            std::size_t used = 0;
            const double t = std::stod(env, &used);
            if (used == std::string(env).size())
                return t;
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::InvalidArgument, std::string("AWGRAPH_TOL is not a number: ") + env);
    }
    return 1e-8;
}

Graph load(const Options& o)
{
    if (!o.family.empty() && !o.input.empty())
        throw Error(ErrorKind::InvalidArgument, "--family and --input are mutually exclusive");
    if (!o.family.empty())
        return generate_family(parse_family(o.family), o.size);
    if (!o.input.empty())
        return load_graph_file(o.input, parse_graph_format(o.format_in));
    throw Error(ErrorKind::InvalidArgument, "one of --family or --input is required");
}

std::vector<int> resolve_vertices(const std::string& v)
{
    if (v == "all")
        return {};
    try {
        std::size_t used = 0;
        const int x = std::stoi(v, &used);
        if (used == v.size() && x >= 0)
            return {x};
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, "--vertex must be a nonnegative integer or 'all'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Askey-Wilson relations for Q-polynomial distance-regular graphs", "awgraph"};
    app.require_subcommand(1);
    Options o;
    struct Command {
        const char* name;
        const char* help;
        Stage stage;
    };
    const Command commands[] = {
        {"analyze", "full pipeline through the Askey-Wilson triple", Stage::Analyze},
        {"modules", "irreducible T-module inventory", Stage::Modules},
        {"spectrum", "eigenvalues, multiplicities and Q-polynomial orderings", Stage::Spectrum},
        {"qracah", "q-Racah fit of the eigenvalue sequences", Stage::QRacah},
    };
    std::vector<std::pair<CLI::App*, Stage>> subs;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, o);
        subs.emplace_back(sub, c.stage);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream cli_out, cli_err;
        const int code = app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return code == 0 ? 0 : 1;
    }

    try {
        PipelineConfig config;
        for (const auto& [sub, stage] : subs)
            if (sub->parsed())
                config.stage = stage;
        config.tol = resolve_tol(o);
        if (!(config.tol > 0))
            throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
        config.seed = o.seed;
        config.q_branch = o.q_branch == "all" ? QBranch::All : QBranch::Canonical;
        const auto vertices = resolve_vertices(o.vertex);

        auto run = run_pipeline(load(o), vertices, config);
        const auto reports = build_reports(run, config.stage);
        out << (o.format == "text" ? render_text(reports) : render_json_lines(reports));
        if (run.graph.error)
            err << "awgraph: " << to_string(run.graph.error->kind()) << ": " << run.graph.error->what() << '\n';
        for (const auto& a : run.attempts)
            if (a.error)
                err << "awgraph: vertex " << a.vertex << ": " << a.message << '\n';
        return run.exit_code;
    } catch (const Error& e) {
        err << "awgraph: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

} // namespace awgraph
