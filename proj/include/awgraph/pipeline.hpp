#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "awgraph/awalgebra.hpp"
#include "awgraph/graph.hpp"
#include "awgraph/leonard.hpp"
#include "awgraph/qracah.hpp"
#include "awgraph/spectral.hpp"
#include "awgraph/tmodule.hpp"
#include "awgraph/types.hpp"

namespace awgraph {

/// Last stage a run goes through.
enum class Stage { Spectrum, QRacah, Modules, Analyze };

enum class QBranch { Canonical, All };

struct PipelineConfig {
    double tol = 1e-8;
    std::uint64_t seed = 0;
    QBranch q_branch = QBranch::Canonical;
    Stage stage = Stage::Analyze;
    // Tolerance for grouping modules by parameter array.
    double grouping_tol = 1e-6;
};

/// Vertex-independent data, computed once per graph.
struct GraphStages {
    Graph graph;
    std::optional<DistanceRegularData> drg;
    std::optional<SpectralData> spectrum;
    std::optional<KreinTensor> krein;
    std::vector<QPolyOrdering> orderings;
    std::optional<Error> error;
};

GraphStages run_graph_stages(Graph graph, const PipelineConfig& config);

struct TypeReport {
    TypeData type;
    std::optional<LeonardSystemData> leonard; // representative's data
    Complex kappa, c;
};

/// One (vertex, ordering, q) attempt.
struct Attempt {
    int vertex = 0;
    std::optional<QPolyOrdering> ordering;
    std::optional<Complex> q;

    std::optional<DualData> dual;
    std::optional<QRacahFit> fit;
    std::optional<NormalizedGenerators> gens;
    std::vector<IrreducibleModule> modules;
    std::vector<LeonardRestriction> leonard; // per module, analyze only
    std::vector<TypeReport> types;
    std::optional<int> commutant_dim;
    std::optional<AlgebraBasis> algebra;
    std::optional<CentralElements> central;
    std::optional<AWTriple> triple;
    std::optional<bool> thin;

    std::string status = "ok";
    std::optional<ErrorKind> error;
    std::string message;

    int exit_code() const;
};

/// Runs every attempt for one base vertex.
std::vector<Attempt> run_vertex(const GraphStages& graph, int vertex, const PipelineConfig& config);

struct PipelineRun {
    GraphStages graph;
    std::vector<Attempt> attempts;
    int exit_code = 0;
};

/// Whole run; `vertices` empty means every vertex. Distinct vertices run
/// concurrently and results are ordered by vertex.
PipelineRun run_pipeline(Graph graph, const std::vector<int>& vertices, const PipelineConfig& config);

/// Convenience for a single vertex and the canonical branch.
Attempt analyze(const Graph& graph, int vertex, const PipelineConfig& config = {});

} // namespace awgraph
