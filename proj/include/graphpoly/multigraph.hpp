#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphpoly {

struct Edge {
    int u = 0;
    int v = 0;
    int id = 0;
    bool is_loop() const { return u == v; }
    int other(int w) const { return w == u ? v : u; }
};

/// Undirected multigraph: loops and parallel edges allowed. Edge ids are
/// distinct and survive deletion/contraction unchanged. Values are immutable
/// after construction; all mutating operations return a new graph.
class Multigraph {
public:
    explicit Multigraph(int n = 0) : n_(n) {
        if (n < 0) throw std::invalid_argument("Multigraph: negative vertex count");
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    int add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        int id = next_id_++;
        edges_.push_back({u, v, id});
        return id;
    }
    // Re-inserts an edge with a caller-provided id (used by loaders/minors).
    void add_edge_with_id(int u, int v, int id) {
        check_vertex(u);
        check_vertex(v);
        edges_.push_back({u, v, id});
        next_id_ = std::max(next_id_, id + 1);
    }

    const Edge* find_edge(int eid) const {
        for (const auto& e : edges_)
            if (e.id == eid) return &e;
        return nullptr;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& e : edges_) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;  // a loop contributes 2
        }
        return d;
    }
    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const auto& e : edges_) {
            ++d[e.u];
            ++d[e.v];
        }
        return d;
    }
    bool is_regular(int* out_d = nullptr) const {
        if (n_ == 0) return true;
        auto d = degrees();
        for (int v = 1; v < n_; ++v)
            if (d[v] != d[0]) return false;
        if (out_d) *out_d = d[0];
        return true;
    }
    bool has_loop() const {
        return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
    }

    // Adjacency as (neighbor, edge id) pairs; loops appear twice.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const {
        std::vector<std::vector<std::pair<int, int>>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.u].push_back({e.v, e.id});
            adj[e.v].push_back({e.u, e.id});
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    Multigraph delete_edge(int eid) const {
        Multigraph g(n_);
        bool found = false;
        for (const auto& e : edges_) {
            if (e.id == eid) {
                found = true;
                continue;
            }
            g.add_edge_with_id(e.u, e.v, e.id);
        }
        if (!found) throw std::invalid_argument("delete_edge: unknown edge id");
        return g;
    }

    // Merges the endpoints of a non-loop edge; surviving loops/parallel edges
    // are retained. The last vertex is renumbered to keep ids 0..n-2.
    Multigraph contract_edge(int eid) const {
        const Edge* e = find_edge(eid);
        if (!e) throw std::invalid_argument("contract_edge: unknown edge id");
        if (e->is_loop()) throw std::invalid_argument("contract_edge: cannot contract a loop");
        int a = std::min(e->u, e->v), b = std::max(e->u, e->v);
        Multigraph g(n_ - 1);
        auto remap = [&](int w) {
            if (w == b) return a;
            if (w == n_ - 1) return b;  // fill the hole left by b
            return w;
        };
        for (const auto& f : edges_) {
            if (f.id == eid) continue;
            g.add_edge_with_id(remap(f.u), remap(f.v), f.id);
        }
        return g;
    }

    // Component label per vertex (isolated vertices are their own component).
    std::vector<int> component_labels() const {
        std::vector<int> parent(n_);
        for (int v = 0; v < n_; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : edges_) {
            int a = find(e.u), b = find(e.v);
            if (a != b) parent[a] = b;
        }
        std::vector<int> label(n_, -1);
        int next = 0;
        for (int v = 0; v < n_; ++v) {
            int r = find(v);
            if (label[r] < 0) label[r] = next++;
            label[v] = label[r];
        }
        return label;
    }

    int component_count() const {
        auto label = component_labels();
        int k = 0;
        for (int l : label) k = std::max(k, l + 1);
        return k;
    }
    bool is_connected() const { return n_ <= 1 || component_count() == 1; }

private:
    int n_;
    std::vector<Edge> edges_;
    int next_id_ = 0;
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Multigraph: vertex out of range");
    }
};

// ---------------------------------------------------------------------------
// Generators

inline Multigraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Multigraph complete_graph(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Multigraph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// Center is vertex 0, with `leaves` pendant vertices.
inline Multigraph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star_graph: negative leaf count");
    Multigraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Multigraph edgeless_graph(int n) { return Multigraph(n); }

inline Multigraph petersen_graph() {
    Multigraph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);       // outer C5
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);             // spokes
    return g;
}

inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph g(a.n() + b.n());
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
    for (const auto& e : b.edges()) g.add_edge(e.u + a.n(), e.v + a.n());
    return g;
}

// Parses "complete_k(4)", "petersen", "path(3)", "star(3)", "edgeless(5)".
inline Multigraph named_graph(const std::string& name) {
    auto param = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() > prefix.size() + 2 && name.compare(0, prefix.size() + 1, prefix + "(") == 0 &&
            name.back() == ')') {
            return std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
        }
        return std::nullopt;
    };
    if (name == "petersen") return petersen_graph();
    if (auto k = param("complete_k")) return complete_graph(*k);
    if (auto k = param("path")) return path_graph(*k);
    if (auto k = param("star")) return star_graph(*k);
    if (auto k = param("edgeless")) return edgeless_graph(*k);
    if (auto k = param("cycle")) return cycle_graph(*k);
    throw std::invalid_argument("named_graph: unknown graph '" + name + "'");
}

// ---------------------------------------------------------------------------
// Cycle structure

constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Shortest cycle length; loops count as length 1, a parallel pair as length 2,
/// kInfiniteGirth for forests.
inline int girth(const Multigraph& g) {
    if (g.has_loop()) return 1;
    // Parallel pair check on sorted endpoint pairs.
    {
        std::vector<std::pair<int, int>> ps;
        ps.reserve(g.edges().size());
        for (const auto& e : g.edges()) ps.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
        std::sort(ps.begin(), ps.end());
        if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) return 2;
    }
    // Simple graph from here on: BFS from every vertex, taking the best
    // closure dist(u)+dist(v)+1 over non-tree edges. The minimum over all
    // roots equals the girth.
    auto adj = g.adjacency();
    int best = kInfiniteGirth;
    std::vector<int> dist(g.n());
    std::vector<int> par_edge(g.n());
    for (int root = 0; root < g.n(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par_edge.begin(), par_edge.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;
            for (auto [w, eid] : adj[u]) {
                if (eid == par_edge[u]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par_edge[w] = eid;
                    q.push(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

/// Every cycle of length <= max_len as a sorted edge-id set, each counted once.
/// Covers loops (length 1) and parallel pairs (length 2).
inline std::vector<std::vector<int>> enumerate_cycles(const Multigraph& g, int max_len) {
    std::vector<std::vector<int>> out;
    if (max_len < 1) return out;
    for (const auto& e : g.edges())
        if (e.is_loop()) out.push_back({e.id});
    if (max_len >= 2) {
        const auto& es = g.edges();
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                if (es[i].is_loop() || es[j].is_loop()) continue;
                if (std::minmax(es[i].u, es[i].v) == std::minmax(es[j].u, es[j].v))
                    out.push_back({es[i].id, es[j].id});
            }
    }
    if (max_len < 3) return out;
    // Vertex-simple cycles of length >= 3, rooted at their smallest vertex;
    // direction fixed by second vertex < last vertex.
    auto adj = g.adjacency();
    std::vector<char> in_path(g.n(), 0);
    std::vector<int> path_v, path_e;
    auto emit = [&]() {
        std::vector<int> cyc = path_e;
        std::sort(cyc.begin(), cyc.end());
        out.push_back(std::move(cyc));
    };
    std::function<void(int, int)> extend = [&](int root, int u) {
        for (auto [w, eid] : adj[u]) {
            if (w == root && static_cast<int>(path_v.size()) >= 3 && eid != path_e.front()) {
                if (path_v[1] < path_v.back()) {
                    path_e.push_back(eid);
                    emit();
                    path_e.pop_back();
                }
                continue;
            }
            if (w <= root || in_path[w]) continue;
            if (static_cast<int>(path_v.size()) >= max_len) continue;
            in_path[w] = 1;
            path_v.push_back(w);
            path_e.push_back(eid);
            extend(root, w);
            path_e.pop_back();
            path_v.pop_back();
            in_path[w] = 0;
        }
    };
    for (int root = 0; root < g.n(); ++root) {
        in_path[root] = 1;
        path_v = {root};
        path_e.clear();
        extend(root, root);
        in_path[root] = 0;
    }
    return out;
}

/// L(G,g): number of distinct cycles (as edge sets) of length at most g-1.
inline int count_short_cycles(const Multigraph& g, int girth_param) {
    if (girth_param < 2) throw std::invalid_argument("count_short_cycles: need g >= 2");
    return static_cast<int>(enumerate_cycles(g, girth_param - 1).size());
}

// ---------------------------------------------------------------------------
// Edge ordering (used by broken-cycle counts)

struct EdgeOrdering {
    // order[i] = edge id at position i; lower position = smaller edge.
    std::vector<int> order;

    int rank(int eid) const {
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i] == eid) return static_cast<int>(i);
        throw std::invalid_argument("EdgeOrdering: unknown edge id");
    }
    bool is_valid_for(const Multigraph& g) const {
        if (order.size() != g.edges().size()) return false;
        std::vector<int> ids;
        for (const auto& e : g.edges()) ids.push_back(e.id);
        std::vector<int> o = order;
        std::sort(ids.begin(), ids.end());
        std::sort(o.begin(), o.end());
        return ids == o;
    }
};

inline EdgeOrdering identity_ordering(const Multigraph& g) {
    EdgeOrdering ord;
    for (const auto& e : g.edges()) ord.order.push_back(e.id);
    std::sort(ord.order.begin(), ord.order.end());
    return ord;
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n m", then m lines "u v" (0-indexed).

inline Multigraph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header 'n m'");
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative counts");
    Multigraph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated at edge " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("edge list: endpoint out of range at edge " + std::to_string(i));
        g.add_edge(u, v);
    }
    return g;
}

inline void write_edge_list(std::ostream& out, const Multigraph& g) {
    out << g.n() << " " << g.m() << "\n";
    for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
}

inline Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

}  // namespace graphpoly
