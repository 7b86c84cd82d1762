#include "awgraph/pipeline.hpp"

#include <algorithm>
#include <future>

namespace awgraph {

namespace {

std::string status_for(ErrorKind kind)
{
    switch (exit_code(kind)) {
    case 1: return "input_error";
    case 2: return "not_distance_regular";
    case 3: return "not_q_polynomial";
    case 4: return "not_q_racah";
    case 5: return "non_thin";
    default: return "numerical_failure";
    }
}

void record(Attempt& a, const Error& e)
{
    a.error = e.kind();
    a.status = status_for(e.kind());
    a.message = std::string(to_string(e.kind())) + ": " + e.what();
}

// Type classification and module inventory, shared by `modules` and
// `analyze`. Arrays are taken from the raw A, A* so no q-Racah fit is needed.
void decompose(Attempt& a, const GraphStages& g, const std::vector<Matrix>& E, const PipelineConfig& config)
{
    const Matrix A = g.drg->adjacency().cast<Complex>();
    const DualData& dual = *a.dual;

    DecompositionOptions opts;
    opts.seed = config.seed;
    opts.tol = config.tol;
    auto decomp = decompose_modules(A, dual, opts);
    a.commutant_dim = decomp.commutant_dim;
    a.modules = std::move(decomp.modules);
    for (auto& m : a.modules)
        profile_module(m, E, dual);
    sort_modules(a.modules);
    a.thin = std::all_of(a.modules.begin(), a.modules.end(), [](const auto& m) { return m.thin; });

    const int n = g.graph.n;
    const std::vector<Matrix> gens{A, dual.dual_adjacency};
    a.algebra = algebra_closure(gens, n * n);

    if (!*a.thin)
        throw Error(ErrorKind::NonThinModule, "the standard module has a non-thin irreducible T-submodule");

    std::vector<ParameterArray> arrays;
    for (const auto& m : a.modules)
        arrays.push_back(parameter_array(restrict_operators(m, A, dual.dual_adjacency, E, dual)));
    auto types = classify_types(a.modules, arrays, A, dual.dual_adjacency, config.grouping_tol);
    for (auto& t : types)
        a.types.push_back({std::move(t), std::nullopt, 0.0, 0.0});
}

void run_attempt(Attempt& a, const GraphStages& g, const PipelineConfig& config)
{
    const auto& spec = *g.spectrum;
    const auto E = ordered_idempotents(spec, *a.ordering);
    const auto thetas = ordered_eigenvalues(spec, *a.ordering);
    const DualData& dual = *a.dual;

    if (config.stage == Stage::Modules) {
        decompose(a, g, E, config);
        return;
    }

    a.fit = fit_qracah(thetas, dual.dual_eigenvalues, *a.q);
    if (config.stage == Stage::QRacah)
        return;

    const Matrix A = g.drg->adjacency().cast<Complex>();
    a.gens = normalize_generators(A, dual.dual_adjacency, *a.fit, E, dual.dual_idempotents, config.tol);

    decompose(a, g, E, config);

    for (const auto& m : a.modules) {
        auto lr = restrict_leonard(m, *a.gens, E, dual, *a.fit, config.tol);
        split_sequences(lr.data, lr.ops, config.tol);
        a.leonard.push_back(std::move(lr));
    }

    std::vector<TypeScalars> scalars;
    std::vector<TypeData> plain;
    for (auto& t : a.types) {
        auto& rep = a.leonard[t.type.representative];
        std::tie(rep.data.kappa, rep.data.c) = compute_kappa_c(rep.data, *a.q);
        verify_leonard_pair(rep.ops, config.tol);
        t.kappa = rep.data.kappa;
        t.c = rep.data.c;
        t.leonard = rep.data;
        for (int member : t.type.members) {
            a.leonard[member].data.kappa = t.kappa;
            a.leonard[member].data.c = t.c;
        }
        scalars.push_back(type_scalars(rep.data));
        plain.push_back(t.type);
    }

    a.central = build_central_elements(plain, scalars, *a.q, a.gens->A, a.gens->B, config.tol);
    a.triple = build_C(*a.gens, *a.central, *a.q, config.tol);
    const auto central = verify_centrality(*a.triple, *a.q);
    for (int k = 0; k < 3; ++k)
        if (central[k].relative > config.tol)
            throw Error(ErrorKind::CentralityDefect,
                        "central expression " + std::to_string(k + 1) + " does not commute with A, B");
    if (verify_T_membership(*a.triple, *a.algebra).relative > config.tol)
        throw Error(ErrorKind::RelationResidual, "C does not lie in the subconstituent algebra");
}

} // namespace

int Attempt::exit_code() const
{
    return error ? awgraph::exit_code(*error) : 0;
}

GraphStages run_graph_stages(Graph graph, const PipelineConfig& config)
{
    GraphStages g;
    g.graph = std::move(graph);
    try {
        g.drg = compute_distance_data(g.graph);
        if (g.drg->below_min_diameter && config.stage != Stage::Spectrum)
            throw Error(ErrorKind::DiameterTooSmall,
                        "diameter " + std::to_string(g.drg->diameter) + " is below 3");
        g.spectrum = spectral_decomposition(*g.drg, config.tol);
        g.krein = krein_parameters(*g.spectrum, config.tol * g.graph.n);
        g.orderings = find_qpoly_orderings(*g.krein);
        if (g.orderings.empty() && config.stage != Stage::Spectrum)
            throw Error(ErrorKind::NoQPolynomialOrdering, "no ordering of the idempotents is Q-polynomial");
    } catch (const Error& e) {
        g.error = e;
    }
    return g;
}

std::vector<Attempt> run_vertex(const GraphStages& g, int vertex, const PipelineConfig& config)
{
    std::vector<Attempt> out;
    for (const auto& ordering : g.orderings) {
        Attempt base;
        base.vertex = vertex;
        base.ordering = ordering;
        std::vector<Complex> candidates;
        try {
            base.dual = build_dual_data(*g.spectrum, ordering, *g.drg, vertex);
            if (config.stage != Stage::Modules) {
                candidates = fit_base_q(ordered_eigenvalues(*g.spectrum, ordering), config.tol);
                if (config.q_branch == QBranch::Canonical)
                    candidates.resize(1);
            }
        } catch (const Error& e) {
            record(base, e);
            out.push_back(std::move(base));
            continue;
        }
        if (config.stage == Stage::Modules)
            candidates.push_back(Complex(0.0)); // placeholder, q is not used
        for (Complex q : candidates) {
            Attempt a = base;
            if (config.stage != Stage::Modules)
                a.q = q;
            try {
                run_attempt(a, g, config);
            } catch (const Error& e) {
                record(a, e);
            }
            out.push_back(std::move(a));
        }
    }
    return out;
}

PipelineRun run_pipeline(Graph graph, const std::vector<int>& vertices, const PipelineConfig& config)
{
    PipelineRun run;
    run.graph = run_graph_stages(std::move(graph), config);
    if (run.graph.error) {
        run.exit_code = exit_code(run.graph.error->kind());
        return run;
    }
    if (config.stage == Stage::Spectrum)
        return run;

    std::vector<int> targets = vertices;
    if (targets.empty())
        for (int v = 0; v < run.graph.graph.n; ++v)
            targets.push_back(v);
    for (int v : targets)
        if (v < 0 || v >= run.graph.graph.n) {
            run.graph.error = Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
            run.exit_code = 1;
            return run;
        }

    std::vector<std::future<std::vector<Attempt>>> jobs;
    for (int v : targets)
        jobs.push_back(std::async(std::launch::async, [&run, v, &config] { return run_vertex(run.graph, v, config); }));
    for (auto& job : jobs)
        for (auto& a : job.get())
            run.attempts.push_back(std::move(a));

    int worst = 0;
    bool success = false;
    for (const auto& a : run.attempts) {
        success = success || a.exit_code() == 0;
        worst = std::max(worst, a.exit_code());
    }
    run.exit_code = success ? 0 : worst;
    return run;
}

Attempt analyze(const Graph& graph, int vertex, const PipelineConfig& config)
{
    auto run = run_pipeline(graph, {vertex}, config);
    if (run.graph.error)
        throw *run.graph.error;
    if (run.attempts.empty())
        throw Error(ErrorKind::InvalidArgument, "nothing was attempted");
    for (auto& a : run.attempts)
        if (a.exit_code() == 0)
            return std::move(a);
    return std::move(run.attempts.front());
}

} // namespace awgraph
