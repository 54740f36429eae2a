#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace unilog {

// Undirected edge. Canonical storage keeps a < b; the fixed orientation used
// for e⁺/e⁻ labelling is tail = smaller index, head = larger index.
struct Edge {
    int a;
    int b;
    int tail() const { return a < b ? a : b; }
    int head() const { return a < b ? b : a; }
    friend bool operator==(const Edge& x, const Edge& y) {
        return x.tail() == y.tail() && x.head() == y.head();
    }
};

// Simple finite graph: no self-loops, no duplicate edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    static Graph ring(int n);      // cycle C_n, n ≥ 3
    static Graph path(int n);      // path P_n, n ≥ 1
    static Graph complete(int n);  // K_n, n ≥ 1
    static Graph edgeless(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // Text format: first line "n m", then m lines "u v" (0-based).
    static Graph read_text(std::istream& in);
    void write_text(std::ostream& out) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_flat_;
    std::vector<int> adj_offset_;
    void check_vertex(int v) const;
};

inline constexpr int kUnreachable = -1;

int max_degree(const Graph& g);

// BFS shortest-path length; nullopt when no path exists.
std::optional<int> graph_distance(const Graph& g, int v, int w);

// BFS distances from a single source; kUnreachable for disconnected vertices.
std::vector<int> distances_from(const Graph& g, int v);

// n×n boolean occupancy mask.
class SparsityPattern {
public:
    SparsityPattern() = default;
    explicit SparsityPattern(int n) : n_(n), mask_(static_cast<size_t>(n) * n, 0) {}

    static SparsityPattern identity(int n);
    static SparsityPattern adjacency(const Graph& g);

    int dim() const { return n_; }
    bool test(int i, int j) const { return mask_[idx(i, j)] != 0; }
    void set(int i, int j, bool v = true) { mask_[idx(i, j)] = v ? 1 : 0; }
    int count() const;
    bool is_symmetric() const;

    SparsityPattern transpose() const;
    friend SparsityPattern operator|(const SparsityPattern& a, const SparsityPattern& b);
    friend SparsityPattern operator*(const SparsityPattern& a, const SparsityPattern& b);
    friend bool operator==(const SparsityPattern& a, const SparsityPattern& b);
    bool subset_of(const SparsityPattern& other) const;

    // Set entries as a coordinate list, one "i j" per line.
    void write_coordinates(std::ostream& out) const;

private:
    int n_ = 0;
    std::vector<std::uint8_t> mask_;
    size_t idx(int i, int j) const;
};

// Boolean k-th power: entry (v,w) set iff a walk of length exactly k joins
// v and w. k = 0 gives the identity pattern.
SparsityPattern pattern_power(const SparsityPattern& p, int k);

// Union of the boolean powers 0..k: the sparsity envelope of degree-k
// polynomials in a matrix with pattern p.
SparsityPattern reach_pattern(const SparsityPattern& p, int k);

// Graph with an edge wherever the (symmetric) pattern is set off-diagonal.
Graph pattern_graph(const SparsityPattern& p);

// Proper edge coloring: classes partition the edge set, each class is a
// matching, and the class count is at most D(G)+1.
struct EdgeColoring {
    std::vector<std::vector<Edge>> classes;
    int color_count() const { return static_cast<int>(classes.size()); }
    bool valid_for(const Graph& g) const;
};

// Constructive Δ+1 edge coloring (Misra–Gries). Deterministic for a fixed
// input edge ordering.
EdgeColoring edge_color(const Graph& g);

}  // namespace unilog
