#include "awgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>

namespace awgraph {

namespace {

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (ch != '\r') {
            current.push_back(ch);
        }
    }
    if (!current.empty())
        lines.push_back(current);
    return lines;
}

bool is_blank(const std::string& s)
{
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

IntMatrix parse_edge_list(std::string_view text)
{
    auto lines = split_lines(text);
    lines.erase(std::remove_if(lines.begin(), lines.end(), is_blank), lines.end());
    if (lines.empty())
        throw Error(ErrorKind::Parse, "empty edge list");

    long long n = -1, m = -1;
    {
        std::istringstream header(lines[0]);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra))
            throw Error(ErrorKind::Parse, "edge list header must be \"n m\"");
    }
    if (n <= 0 || m < 0)
        throw Error(ErrorKind::Parse, "edge list header has invalid counts");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw Error(ErrorKind::Parse, "edge list declares " + std::to_string(m) + " edges but has "
                                          + std::to_string(lines.size() - 1));

    IntMatrix adj = IntMatrix::Zero(n, n);
    for (std::size_t e = 1; e < lines.size(); ++e) {
        std::istringstream row(lines[e]);
        long long u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra))
            throw Error(ErrorKind::Parse, "malformed edge on line " + std::to_string(e + 1));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::Parse, "vertex out of range on line " + std::to_string(e + 1));
        if (u == v)
            throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(u));
        if (adj(u, v) != 0)
            throw Error(ErrorKind::Parse, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adj(u, v) = 1;
        adj(v, u) = 1;
    }
    return adj;
}

IntMatrix parse_dense(std::string_view text)
{
    auto lines = split_lines(text);
    while (!lines.empty() && is_blank(lines.back()))
        lines.pop_back();
    const auto n = static_cast<Eigen::Index>(lines.size());
    if (n == 0)
        throw Error(ErrorKind::Parse, "empty dense matrix");

    IntMatrix adj(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        // Entries may be packed ("0110") or separated by blanks ("0 1 1 0").
        std::string line;
        for (char ch : lines[r])
            if (!std::isspace(static_cast<unsigned char>(ch)))
                line += ch;
        if (static_cast<Eigen::Index>(line.size()) != n)
            throw Error(ErrorKind::Parse, "dense row " + std::to_string(r) + " has length "
                                              + std::to_string(line.size()) + ", expected "
                                              + std::to_string(n));
        for (Eigen::Index c = 0; c < n; ++c) {
            if (line[c] != '0' && line[c] != '1')
                throw Error(ErrorKind::Parse, "dense entries must be 0 or 1");
            adj(r, c) = line[c] - '0';
        }
    }
    return adj;
}

} // namespace

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "edgelist" || name == "edge-list")
        return GraphFormat::EdgeList;
    if (name == "dense")
        return GraphFormat::Dense;
    throw Error(ErrorKind::InvalidArgument, "unknown graph format: " + std::string(name));
}

Graph make_graph(IntMatrix adjacency, std::string name)
{
    const auto n = adjacency.rows();
    if (n == 0 || adjacency.cols() != n)
        throw Error(ErrorKind::Parse, "adjacency matrix must be square and nonempty");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (adjacency(i, i) != 0)
            throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(i));
        for (Eigen::Index j = 0; j < n; ++j) {
            if (adjacency(i, j) != 0 && adjacency(i, j) != 1)
                throw Error(ErrorKind::Parse, "adjacency entries must be 0 or 1");
            if (adjacency(i, j) != adjacency(j, i))
                throw Error(ErrorKind::Asymmetric, "adjacency is not symmetric at ("
                                                       + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    }

    Graph g;
    g.name = std::move(name);
    g.n = static_cast<int>(n);
    g.adjacency = std::move(adjacency);

    const IntMatrix dist = bfs_distances(g);
    for (int v = 0; v < g.n; ++v)
        if (dist(0, v) < 0)
            throw Error(ErrorKind::Disconnected, "graph is disconnected: vertex " + std::to_string(v)
                                                     + " unreachable from 0");
    return g;
}

Graph load_graph(std::string_view text, GraphFormat format, std::string name)
{
    IntMatrix adj = format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_dense(text);
    return make_graph(std::move(adj), std::move(name));
}

Graph load_graph_file(const std::string& path, GraphFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str(), format, path);
}

Family parse_family(std::string_view name)
{
    if (name == "cycle")
        return Family::Cycle;
    if (name == "crown")
        return Family::Crown;
    if (name == "hadamard")
        return Family::Hadamard;
    if (name == "hypercube")
        return Family::Hypercube;
    throw Error(ErrorKind::InvalidArgument, "unknown family: " + std::string(name));
}

std::string family_name(Family family)
{
    switch (family) {
    case Family::Cycle: return "cycle";
    case Family::Crown: return "crown";
    case Family::Hadamard: return "hadamard";
    case Family::Hypercube: return "hypercube";
    }
    return "unknown";
}

Graph generate_family(Family family, int size)
{
    const std::string name = family_name(family) + "(" + std::to_string(size) + ")";
    auto invalid = [&](const std::string& why) {
        return Error(ErrorKind::InvalidArgument, "invalid size for " + name + ": " + why);
    };

    switch (family) {
    case Family::Cycle: {
        if (size < 6 || size % 2 != 0)
            throw invalid("cycle length must be even and at least 6");
        IntMatrix adj = IntMatrix::Zero(size, size);
        for (int i = 0; i < size; ++i) {
            adj(i, (i + 1) % size) = 1;
            adj((i + 1) % size, i) = 1;
        }
        return make_graph(std::move(adj), name);
    }
    case Family::Crown: {
        if (size < 3)
            throw invalid("crown order must be at least 3");
        // u_i = i, v_j = size + j; u_i ~ v_j iff i != j
        IntMatrix adj = IntMatrix::Zero(2 * size, 2 * size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                if (i != j) {
                    adj(i, size + j) = 1;
                    adj(size + j, i) = 1;
                }
        return make_graph(std::move(adj), name);
    }
    case Family::Hadamard: {
        if (size != 4 && size != 8)
            throw invalid("built-in Hadamard matrices have order 4 or 8");
        // Sylvester matrix H(i,j) = (-1)^popcount(i & j).
        // Vertices: rows (i, s) -> s*m + i and columns (j, t) -> 2m + t*m + j
        // with sign s, t in {0 -> +, 1 -> -}. (i, s) ~ (j, t) iff
        // H(i,j) * (-1)^(s+t) = 1, so every vertex has valency m.
        const int m = size;
        IntMatrix adj = IntMatrix::Zero(4 * m, 4 * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const int h = (__builtin_popcount(static_cast<unsigned>(i & j)) % 2 == 0) ? 1 : -1;
                for (int s = 0; s < 2; ++s)
                    for (int t = 0; t < 2; ++t) {
                        const int sign = (s == t) ? 1 : -1;
                        if (h * sign == 1) {
                            const int r = s * m + i;
                            const int c = 2 * m + t * m + j;
                            adj(r, c) = 1;
                            adj(c, r) = 1;
                        }
                    }
            }
        return make_graph(std::move(adj), name);
    }
    case Family::Hypercube: {
        if (size < 3 || size > 6)
            throw invalid("hypercube dimension must be in 3..6");
        const int n = 1 << size;
        IntMatrix adj = IntMatrix::Zero(n, n);
        for (int v = 0; v < n; ++v)
            for (int bit = 0; bit < size; ++bit)
                adj(v, v ^ (1 << bit)) = 1;
        return make_graph(std::move(adj), name);
    }
    }
    throw invalid("unknown family");
}

IntMatrix bfs_distances(const Graph& g)
{
    const int n = g.n;
    IntMatrix dist = IntMatrix::Constant(n, n, -1);
    std::vector<std::vector<int>> nbrs(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacency(u, v))
                nbrs[u].push_back(v);

    for (int s = 0; s < n; ++s) {
        std::queue<int> frontier;
        dist(s, s) = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int v : nbrs[u])
                if (dist(s, v) < 0) {
                    dist(s, v) = dist(s, u) + 1;
                    frontier.push(v);
                }
        }
    }
    return dist;
}

DistanceRegularData compute_distance_data(const Graph& g)
{
    const int n = g.n;
    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k)
            throw Error(ErrorKind::NotRegular, "graph is not regular: deg(0) = " + std::to_string(k)
                                                   + ", deg(" + std::to_string(v)
                                                   + ") = " + std::to_string(g.degree(v)));

    DistanceRegularData drg;
    drg.distance = bfs_distances(g);
    drg.diameter = drg.distance.maxCoeff();
    drg.valency = k;
    drg.below_min_diameter = drg.diameter < 3;
    const int D = drg.diameter;

    drg.distance_matrices.assign(D + 1, IntMatrix::Zero(n, n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            drg.distance_matrices[drg.distance(x, y)](x, y) = 1;

    // For each pair (x, y) count z by (∂(x,z), ∂(y,z)) and compare against
    // the first pair seen at the same distance.
    drg.intersection = IntersectionNumbers(D);
    std::vector<int> first_x(D + 1, -1), first_y(D + 1, -1);
    std::vector<int> counts((D + 1) * (D + 1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int z = 0; z < n; ++z)
                ++counts[drg.distance(x, z) * (D + 1) + drg.distance(y, z)];
            const int h = drg.distance(x, y);
            if (first_x[h] < 0) {
                first_x[h] = x;
                first_y[h] = y;
                for (int i = 0; i <= D; ++i)
                    for (int j = 0; j <= D; ++j)
                        drg.intersection(h, i, j) = counts[i * (D + 1) + j];
                continue;
            }
            for (int i = 0; i <= D; ++i)
                for (int j = 0; j <= D; ++j) {
                    const int c = counts[i * (D + 1) + j];
                    if (c != drg.intersection(h, i, j)) {
                        NotDistanceRegularError::Witness w{h, i, j, first_x[h], first_y[h],
                                                           drg.intersection(h, i, j), x, y, c};
                        std::ostringstream msg;
                        msg << "graph is not distance-regular: |Γ_" << i << "(x) ∩ Γ_" << j
                            << "(y)| at distance " << h << " is " << w.count1 << " for ("
                            << w.x1 << "," << w.y1 << ") but " << w.count2 << " for (" << w.x2
                            << "," << w.y2 << ")";
                        throw NotDistanceRegularError(w, msg.str());
                    }
                }
        }
    return drg;
}

long long bose_mesner_product_defect(const DistanceRegularData& drg)
{
    const int D = drg.diameter;
    const int n = drg.vertex_count();
    using LongMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
    std::vector<LongMatrix> A;
    A.reserve(D + 1);
    for (const auto& m : drg.distance_matrices)
        A.push_back(m.cast<long long>());

    long long worst = 0;
    for (int i = 0; i <= D; ++i)
        for (int j = 0; j <= D; ++j) {
            LongMatrix lhs = A[i] * A[j];
            LongMatrix rhs = LongMatrix::Zero(n, n);
            for (int h = 0; h <= D; ++h)
                rhs += static_cast<long long>(drg.intersection(h, i, j)) * A[h];
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    return worst;
}

} // namespace awgraph
