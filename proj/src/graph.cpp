#include "unilog/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <string>

#include "unilog/errors.hpp"

namespace unilog {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidArgumentError("negative vertex count");
    for (auto& e : edges_) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
            throw InvalidArgumentError("edge endpoint out of range");
        if (e.a == e.b) throw InvalidArgumentError("self-loop");
        if (e.a > e.b) std::swap(e.a, e.b);
    }
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgumentError("duplicate edge");

    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.a];
        ++deg[e.b];
    }
    adj_offset_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_offset_[v + 1] = adj_offset_[v] + deg[v];
    adj_flat_.resize(adj_offset_[n_]);
    std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (const auto& e : edges_) {
        adj_flat_[cursor[e.a]++] = e.b;
        adj_flat_[cursor[e.b]++] = e.a;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_flat_.begin() + adj_offset_[v], adj_flat_.begin() + adj_offset_[v + 1]);
}

Graph Graph::ring(int n) {
    if (n < 3) throw InvalidArgumentError("ring needs n >= 3");
    std::vector<Edge> e;
    e.reserve(n);
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
    if (n < 1) throw InvalidArgumentError("path needs n >= 1");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
    if (n < 1) throw InvalidArgumentError("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) e.push_back({v, w});
    return Graph(n, std::move(e));
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InvalidArgumentError("vertex out of range");
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return {adj_flat_.data() + adj_offset_[v],
            static_cast<size_t>(adj_offset_[v + 1] - adj_offset_[v])};
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_offset_[v + 1] - adj_offset_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::read_text(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("graph header: expected \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw ParseError("graph edge line " + std::to_string(i));
        edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

void Graph::write_text(std::ostream& out) const {
    out << n_ << ' ' << edge_count() << '\n';
    for (const auto& e : edges_) out << e.tail() << ' ' << e.head() << '\n';
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> distances_from(const Graph& g, int v) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue;
    dist[v] = 0;
    queue.push_back(v);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::optional<int> graph_distance(const Graph& g, int v, int w) {
    if (v < 0 || v >= g.vertex_count() || w < 0 || w >= g.vertex_count())
        throw InvalidArgumentError("vertex out of range");
    if (v == w) return 0;
    int d = distances_from(g, v)[w];
    if (d == kUnreachable) return std::nullopt;
    return d;
}

size_t SparsityPattern::idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InvalidArgumentError("pattern index out of range");
    return static_cast<size_t>(i) * n_ + j;
}

SparsityPattern SparsityPattern::identity(int n) {
    SparsityPattern p(n);
    for (int i = 0; i < n; ++i) p.set(i, i);
    return p;
}

SparsityPattern SparsityPattern::adjacency(const Graph& g) {
    SparsityPattern p(g.vertex_count());
    for (const auto& e : g.edges()) {
        p.set(e.a, e.b);
        p.set(e.b, e.a);
    }
    return p;
}

int SparsityPattern::count() const {
    int c = 0;
    for (auto v : mask_) c += v != 0;
    return c;
}

bool SparsityPattern::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (test(i, j) != test(j, i)) return false;
    return true;
}

SparsityPattern SparsityPattern::transpose() const {
    SparsityPattern r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (test(i, j)) r.set(j, i);
    return r;
}

SparsityPattern operator|(const SparsityPattern& a, const SparsityPattern& b) {
    if (a.n_ != b.n_) throw DimensionError("pattern union: dimension mismatch");
    SparsityPattern r(a.n_);
    for (size_t k = 0; k < r.mask_.size(); ++k) r.mask_[k] = a.mask_[k] | b.mask_[k];
    return r;
}

SparsityPattern operator*(const SparsityPattern& a, const SparsityPattern& b) {
    if (a.n_ != b.n_) throw DimensionError("pattern product: dimension mismatch");
    int n = a.n_;
    SparsityPattern r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (!a.test(i, k)) continue;
            for (int j = 0; j < n; ++j)
                if (b.test(k, j)) r.set(i, j);
        }
    }
    return r;
}

bool operator==(const SparsityPattern& a, const SparsityPattern& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
}

bool SparsityPattern::subset_of(const SparsityPattern& other) const {
    if (n_ != other.n_) throw DimensionError("pattern subset: dimension mismatch");
    for (size_t k = 0; k < mask_.size(); ++k)
        if (mask_[k] && !other.mask_[k]) return false;
    return true;
}

void SparsityPattern::write_coordinates(std::ostream& out) const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (test(i, j)) out << i << ' ' << j << '\n';
}

SparsityPattern pattern_power(const SparsityPattern& p, int k) {
    if (k < 0) throw InvalidArgumentError("pattern power: negative exponent");
    SparsityPattern acc = SparsityPattern::identity(p.dim());
    for (int i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

SparsityPattern reach_pattern(const SparsityPattern& p, int k) {
    if (k < 0) throw InvalidArgumentError("reach pattern: negative exponent");
    SparsityPattern acc = SparsityPattern::identity(p.dim());
    SparsityPattern pw = SparsityPattern::identity(p.dim());
    for (int i = 1; i <= k; ++i) {
        pw = pw * p;
        acc = acc | pw;
    }
    return acc;
}

Graph pattern_graph(const SparsityPattern& p) {
    if (!p.is_symmetric()) throw InvalidArgumentError("pattern graph needs a symmetric pattern");
    const int n = p.dim();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (p.test(i, j)) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

bool EdgeColoring::valid_for(const Graph& g) const {
    std::vector<int> seen(g.vertex_count(), -1);
    size_t total = 0;
    for (size_t c = 0; c < classes.size(); ++c) {
        for (const auto& e : classes[c]) {
            if (!g.has_edge(e.a, e.b)) return false;
            if (seen[e.a] == static_cast<int>(c) || seen[e.b] == static_cast<int>(c)) return false;
            seen[e.a] = seen[e.b] = static_cast<int>(c);
            ++total;
        }
    }
    if (total != static_cast<size_t>(g.edge_count())) return false;
    // every graph edge must appear exactly once across the classes
    std::vector<Edge> all;
    for (const auto& cls : classes) all.insert(all.end(), cls.begin(), cls.end());
    auto key = [](const Edge& e) { return std::pair(e.tail(), e.head()); };
    std::sort(all.begin(), all.end(), [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
    auto ge = std::vector<Edge>(g.edges().begin(), g.edges().end());
    std::sort(ge.begin(), ge.end(), [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
    if (!std::equal(all.begin(), all.end(), ge.begin(), ge.end())) return false;
    return color_count() <= max_degree(g) + 1;
}

namespace {

// Mutable coloring state for Misra–Gries. Colors are 0-based; -1 = uncolored.
class ColoringState {
public:
    ColoringState(const Graph& g, int palette)
        : g_(g), palette_(palette), color_(static_cast<size_t>(g.vertex_count()) * g.vertex_count(), -1) {}

    int color(int u, int v) const { return color_[idx(u, v)]; }
    void set_color(int u, int v, int c) { color_[idx(u, v)] = color_[idx(v, u)] = c; }

    bool is_free(int v, int c) const {
        for (int w : g_.neighbors(v))
            if (color(v, w) == c) return false;
        return true;
    }

    int free_color(int v) const {
        for (int c = 0; c < palette_; ++c)
            if (is_free(v, c)) return c;
        throw Error("edge coloring: no free color in palette");
    }

    // Maximal alternating path from u whose first edge is colored `first`,
    // then `second`, and so on. Properness makes the next edge unique.
    std::vector<std::pair<int, int>> alternating_path(int u, int first, int second) const {
        std::vector<std::pair<int, int>> path;
        int x = u;
        int want = first;
        while (true) {
            int next = -1;
            for (int w : g_.neighbors(x)) {
                if (color(x, w) == want) {
                    next = w;
                    break;
                }
            }
            if (next == -1) break;
            path.emplace_back(x, next);
            x = next;
            want = (want == first) ? second : first;
        }
        return path;
    }

    void invert_path(const std::vector<std::pair<int, int>>& path, int c, int d) {
        for (auto [x, y] : path) set_color(x, y, color(x, y) == c ? d : c);
    }

private:
    const Graph& g_;
    int palette_;
    std::vector<int> color_;
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * g_.vertex_count() + v; }
};

}  // namespace

EdgeColoring edge_color(const Graph& g) {
    const int palette = max_degree(g) + 1;
    ColoringState st(g, palette);

    for (const auto& edge : g.edges()) {
        const int u = edge.tail();
        const int v = edge.head();

        // Maximal fan of u starting at v: each later edge is colored with a
        // color free at the preceding fan vertex.
        std::vector<int> fan{v};
        std::vector<char> in_fan(g.vertex_count(), 0);
        in_fan[v] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int w : g.neighbors(u)) {
                if (in_fan[w]) continue;
                int cw = st.color(u, w);
                if (cw != -1 && st.is_free(fan.back(), cw)) {
                    fan.push_back(w);
                    in_fan[w] = 1;
                    grew = true;
                    break;
                }
            }
        }

        const int c = st.free_color(u);
        const int d = st.free_color(fan.back());
        if (c != d) st.invert_path(st.alternating_path(u, d, c), c, d);
        // d is now free at u. Find the longest fan prefix (under the
        // possibly updated colors) ending at a vertex where d is free.
        int w_idx = -1;
        for (size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int ci = st.color(u, fan[i]);
                if (ci == -1 || !st.is_free(fan[i - 1], ci)) break;
            }
            if (st.is_free(fan[i], d)) w_idx = static_cast<int>(i);
        }
        if (w_idx < 0) throw Error("edge coloring: fan rotation target not found");
        for (int t = 0; t < w_idx; ++t) st.set_color(u, fan[t], st.color(u, fan[t + 1]));
        st.set_color(u, fan[w_idx], d);
    }

    EdgeColoring coloring;
    coloring.classes.assign(palette, {});
    for (const auto& e : g.edges()) {
        int c = st.color(e.a, e.b);
        if (c < 0) throw Error("edge coloring: edge left uncolored");
        coloring.classes[c].push_back(e);
    }
    std::erase_if(coloring.classes, [](const auto& cls) { return cls.empty(); });
    return coloring;
}

}  // namespace unilog
