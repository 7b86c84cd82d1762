#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "awgraph/types.hpp"

namespace awgraph {

enum class GraphFormat { EdgeList, Dense };

GraphFormat parse_graph_format(std::string_view name);

/// Finite simple undirected connected graph on vertices 0..n-1.
struct Graph {
    std::string name;
    int n = 0;
    IntMatrix adjacency;
    std::vector<std::string> labels;

    int degree(int v) const { return adjacency.row(v).sum(); }
};

/// Validates symmetry, zero diagonal, 0/1 entries and connectivity.
Graph make_graph(IntMatrix adjacency, std::string name = {});

/// Parses an edge list ("n m" header then m lines "u v") or a dense 0/1
/// matrix, one row per line, entries packed or blank-separated. CRLF line endings are accepted.
Graph load_graph(std::string_view text, GraphFormat format, std::string name = {});

Graph load_graph_file(const std::string& path, GraphFormat format);

enum class Family { Cycle, Crown, Hadamard, Hypercube };

Family parse_family(std::string_view name);
std::string family_name(Family family);

/// Built-in graphs. cycle(2D) for even size >= 6, crown(n) = K_{n,n} minus a
/// perfect matching for n >= 3, hadamard(m) for m in {4, 8}, hypercube(D)
/// for D >= 3.
Graph generate_family(Family family, int size);

/// Intersection numbers p^h_ij stored densely, indices 0..D.
class IntersectionNumbers {
public:
    IntersectionNumbers() = default;
    explicit IntersectionNumbers(int diameter)
        : d_(diameter), values_((diameter + 1) * (diameter + 1) * (diameter + 1), 0) {}

    int operator()(int h, int i, int j) const { return values_[index(h, i, j)]; }
    int& operator()(int h, int i, int j) { return values_[index(h, i, j)]; }
    int diameter() const { return d_; }

    // c_i = p^i_{1,i-1}, a_i = p^i_{1,i}, b_i = p^i_{1,i+1}
    int c(int i) const { return i == 0 ? 0 : (*this)(i, 1, i - 1); }
    int a(int i) const { return (*this)(i, 1, i); }
    int b(int i) const { return i == d_ ? 0 : (*this)(i, 1, i + 1); }

private:
    std::size_t index(int h, int i, int j) const {
        return static_cast<std::size_t>((h * (d_ + 1) + i) * (d_ + 1) + j);
    }
    int d_ = 0;
    std::vector<int> values_;
};

struct DistanceRegularData {
    int diameter = 0;
    int valency = 0;
    IntMatrix distance;                     // path-length distances
    std::vector<IntMatrix> distance_matrices; // A_0..A_D
    IntersectionNumbers intersection;
    // Set when D < 3: the data is valid but the downstream pipeline refuses it.
    bool below_min_diameter = false;

    const IntMatrix& adjacency() const { return distance_matrices.at(1); }
    int vertex_count() const { return static_cast<int>(distance.rows()); }
};

/// Raised by compute_distance_data when two vertex pairs at the same distance
/// disagree on |Γ_i(x) ∩ Γ_j(y)|.
class NotDistanceRegularError : public Error {
public:
    struct Witness {
        int h = 0, i = 0, j = 0;
        int x1 = 0, y1 = 0, count1 = 0;
        int x2 = 0, y2 = 0, count2 = 0;
    };

    NotDistanceRegularError(const Witness& w, const std::string& what)
        : Error(ErrorKind::NotDistanceRegular, what), witness_(w) {}

    const Witness& witness() const noexcept { return witness_; }

private:
    Witness witness_;
};

IntMatrix bfs_distances(const Graph& g);

/// Exact integer certification of distance-regularity.
DistanceRegularData compute_distance_data(const Graph& g);

/// max |A_iA_j - Σ_h p^h_ij A_h| over all entries and i, j. Zero for every
/// distance-regular graph.
long long bose_mesner_product_defect(const DistanceRegularData& drg);

} // namespace awgraph
