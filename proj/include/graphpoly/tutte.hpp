#pragma once

#include <graphpoly/linalg.hpp>
#include <graphpoly/multigraph.hpp>
#include <graphpoly/polynomial.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace graphpoly {

struct TutteResult {
    IntBiPoly polynomial;    // T_G(x,y); coefficients are non-negative integers
    long node_count = 0;     // deletion-contraction recursion nodes
};

namespace detail {

// Compact endpoint-only graph used inside the deletion-contraction recursion.
// Edges are normalized (u <= v) and sorted, so parallel bundles are runs.
struct MiniGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    void normalize() {
        for (auto& e : edges)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(edges.begin(), edges.end());
    }
};

inline MiniGraph to_mini(const Multigraph& g) {
    MiniGraph m;
    m.n = g.n();
    m.edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) m.edges.push_back({e.u, e.v});
    m.normalize();
    return m;
}

struct Bundle {
    int u, v, mult;
};

inline std::vector<Bundle> bundles_of(const MiniGraph& g) {
    std::vector<Bundle> bs;
    for (size_t i = 0; i < g.edges.size();) {
        size_t j = i;
        while (j < g.edges.size() && g.edges[j] == g.edges[i]) ++j;
        bs.push_back({g.edges[i].first, g.edges[i].second, static_cast<int>(j - i)});
        i = j;
    }
    return bs;
}

// Bridge bundle indices (multiplicity-1 bundles only; parallel bundles lie on
// a 2-cycle and are never bridges).
inline std::vector<int> find_bridge_bundles(const MiniGraph& g, const std::vector<Bundle>& bs) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, bundle index)
    for (size_t i = 0; i < bs.size(); ++i) {
        if (bs[i].u == bs[i].v) continue;
        adj[bs[i].u].push_back({bs[i].v, static_cast<int>(i)});
        adj[bs[i].v].push_back({bs[i].u, static_cast<int>(i)});
    }
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<int> bridges;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int via_bundle) {
        disc[u] = low[u] = timer++;
        for (auto [w, bi] : adj[u]) {
            if (bi == via_bundle) {
                if (bs[bi].mult >= 2) low[u] = std::min(low[u], disc[w]);
                continue;
            }
            if (disc[w] < 0) {
                dfs(w, bi);
                low[u] = std::min(low[u], low[w]);
                if (low[w] > disc[u] && bs[bi].mult == 1) bridges.push_back(bi);
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    return bridges;
}

// Quotient by the (forest of) bridge bundles; bridge edges vanish.
inline MiniGraph contract_bridges(const MiniGraph& g, const std::vector<Bundle>& bs,
                                  const std::vector<int>& bridge_idx) {
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> is_bridge(bs.size(), 0);
    for (int bi : bridge_idx) {
        is_bridge[bi] = 1;
        parent[find(bs[bi].u)] = find(bs[bi].v);
    }
    std::vector<int> remap(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (remap[r] < 0) remap[r] = next++;
    }
    MiniGraph out;
    out.n = next;
    for (size_t i = 0; i < bs.size(); ++i) {
        if (is_bridge[i]) continue;
        for (int t = 0; t < bs[i].mult; ++t)
            out.edges.push_back({remap[find(bs[i].u)], remap[find(bs[i].v)]});
    }
    out.normalize();
    return out;
}

inline std::vector<MiniGraph> split_components(const MiniGraph& g) {
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) parent[find(u)] = find(v);
    std::vector<int> comp(g.n, -1), local(g.n, 0);
    int nc = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (comp[r] < 0) comp[r] = nc++;
        comp[v] = comp[r];
    }
    std::vector<MiniGraph> out(nc);
    std::vector<int> sz(nc, 0);
    for (int v = 0; v < g.n; ++v) local[v] = sz[comp[v]]++;
    for (int c = 0; c < nc; ++c) out[c].n = sz[c];
    for (auto [u, v] : g.edges) out[comp[u]].edges.push_back({local[u], local[v]});
    for (auto& c : out) c.normalize();
    return out;
}

// Cheap near-canonical key: BFS relabel from every start vertex, keep the
// lexicographically smallest edge-list encoding. Equal keys imply isomorphic
// graphs (hence equal Tutte polynomials); misses only cost cache hits.
inline std::string canonical_key(const MiniGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        if (u != v) adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::string best;
    std::vector<int> order(g.n), pos(g.n);
    for (int start = 0; start < g.n; ++start) {
        std::fill(pos.begin(), pos.end(), -1);
        int head = 0, tail = 0;
        order[tail++] = start;
        pos[start] = 0;
        while (head < tail) {
            int u = order[head++];
            for (int w : adj[u])
                if (pos[w] < 0) {
                    pos[w] = tail;
                    order[tail++] = w;
                }
        }
        std::string key;
        key.reserve(g.edges.size() * 2 + 1);
        key.push_back(static_cast<char>(g.n));
        std::vector<std::pair<int, int>> remapped;
        remapped.reserve(g.edges.size());
        for (auto [u, v] : g.edges) {
            int a = pos[u], b = pos[v];
            remapped.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(remapped.begin(), remapped.end());
        for (auto [a, b] : remapped) {
            key.push_back(static_cast<char>(a));
            key.push_back(static_cast<char>(b));
        }
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

inline IntBiPoly geometric_y(int k) {
    IntBiPoly p;
    for (int i = 0; i < k; ++i) p += IntBiPoly::monomial(0, static_cast<size_t>(i), Int(1));
    return p;
}

inline bool endpoints_connected(const MiniGraph& g, int u, int v) {
    std::vector<int> parent(g.n);
    for (int w = 0; w < g.n; ++w) parent[w] = w;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges) parent[find(a)] = find(b);
    return find(u) == find(v);
}

class TutteComputer {
public:
    IntBiPoly run(const Multigraph& g) { return general(to_mini(g)); }
    long nodes() const { return nodes_; }

private:
    std::unordered_map<std::string, IntBiPoly> memo_;
    long nodes_ = 0;

    IntBiPoly general(MiniGraph g) {
        // Loops factor out as y each.
        int loops = 0;
        {
            std::vector<std::pair<int, int>> kept;
            kept.reserve(g.edges.size());
            for (auto e : g.edges) {
                if (e.first == e.second)
                    ++loops;
                else
                    kept.push_back(e);
            }
            g.edges = std::move(kept);
        }
        IntBiPoly result = IntBiPoly::one();
        for (auto& comp : split_components(g))
            if (!comp.edges.empty()) result *= connected(std::move(comp));
        if (loops > 0) result *= IntBiPoly::monomial(0, static_cast<size_t>(loops), Int(1));
        return result;
    }

    // Connected, loopless input.
    IntBiPoly connected(MiniGraph g) {
        ++nodes_;
        int bridge_count = 0;
        for (;;) {
            auto bs = bundles_of(g);
            auto bridges = find_bridge_bundles(g, bs);
            if (bridges.empty()) break;
            bridge_count += static_cast<int>(bridges.size());
            g = contract_bridges(g, bs, bridges);
        }
        IntBiPoly factor =
            bridge_count > 0 ? IntBiPoly::monomial(static_cast<size_t>(bridge_count), 0, Int(1))
                             : IntBiPoly::one();
        if (g.edges.empty()) return factor;

        std::string key = canonical_key(g);
        if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;

        // Pivot on the bundle with the largest multiplicity (ties: first).
        auto bs = bundles_of(g);
        size_t pick = 0;
        for (size_t i = 1; i < bs.size(); ++i)
            if (bs[i].mult > bs[pick].mult) pick = i;
        const Bundle b = bs[pick];

        MiniGraph del;
        del.n = g.n;
        for (auto e : g.edges)
            if (e != std::make_pair(b.u, b.v)) del.edges.push_back(e);
        del.normalize();

        MiniGraph con;
        con.n = g.n - 1;
        {
            int a = b.u, hole = b.v;  // a < hole since normalized
            auto remap = [&](int w) {
                if (w == hole) return a;
                if (w == g.n - 1) return hole;
                return w;
            };
            for (auto e : g.edges)
                if (e != std::make_pair(b.u, b.v))
                    con.edges.push_back({remap(e.first), remap(e.second)});
            con.normalize();
        }

        // With k parallel copies, peeling them one at a time gives
        //   T = T(single copy) + (y + ... + y^{k-1}) T(G/uv),
        // and the single surviving copy is a bridge exactly when the whole
        // bundle is a cut; then T(single copy) = x T(G/uv).
        IntBiPoly res;
        bool bundle_is_cut = !endpoints_connected(del, b.u, b.v);
        if (bundle_is_cut) {
            IntBiPoly coef = IntBiPoly::var_x() + geometric_y(b.mult) - IntBiPoly::one();
            res = coef * connected(std::move(con));
        } else {
            res = general(std::move(del)) + geometric_y(b.mult) * connected(std::move(con));
        }
        memo_.emplace(std::move(key), res);
        return factor * res;
    }
};

}  // namespace detail

/// Exact T_G(x,y) by memoized deletion-contraction. Loops and bridges are
/// stripped as y/x factors, parallel bundles are pivoted as a unit, and the
/// polynomial is a product over components.
inline TutteResult tutte_polynomial(const Multigraph& g) {
    detail::TutteComputer tc;
    TutteResult r;
    r.polynomial = tc.run(g);
    r.node_count = tc.nodes();
    return r;
}

/// Direct subset expansion over all A subseteq E: the independent oracle for
/// tutte_polynomial on small graphs.
inline IntBiPoly tutte_subset_oracle(const Multigraph& g) {
    if (g.m() > 24)
        throw std::invalid_argument(
            "tutte_subset_oracle: more than 24 edges; use tutte_polynomial instead");
    const int n = g.n();
    const int m = g.m();
    const int k_full = g.component_count();
    // counts[a][b]: number of subsets with k(A)-k(E)=a, k(A)+|A|-n=b.
    std::map<std::pair<int, int>, Int> counts;
    std::vector<int> parent(n);
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        int sz = 0;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            ++sz;
            int a = find(g.edges()[i].u), b = find(g.edges()[i].v);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
        int k_a = n - merges;
        counts[{k_a - k_full, k_a + sz - n}] += 1;
    }
    IntBiPoly xm1 = IntBiPoly::var_x() - IntBiPoly::one();
    IntBiPoly ym1 = IntBiPoly::var_y() - IntBiPoly::one();
    std::vector<IntBiPoly> xp{IntBiPoly::one()}, yp{IntBiPoly::one()};
    IntBiPoly total;
    for (const auto& [ab, cnt] : counts) {
        auto [a, b] = ab;
        while (static_cast<int>(xp.size()) <= a) xp.push_back(xp.back() * xm1);
        while (static_cast<int>(yp.size()) <= b) yp.push_back(yp.back() * ym1);
        total += (xp[a] * yp[b]).scaled(cnt);
    }
    return total;
}

/// F_G(z) = sum_k f_k z^{n-k} = z^{k(G)} T_G(z+1, 1); coefficients count forests.
inline IntPoly forest_polynomial(const Multigraph& g) {
    IntBiPoly t = tutte_polynomial(g).polynomial;
    IntPoly at_y1 = t.at_y(Int(1));
    IntPoly shifted = compose_shift(at_y1, Int(1));
    return shifted.shifted(static_cast<size_t>(g.component_count()));
}

/// Random cluster partition function Z_G(q,w) = sum_A q^{k(A)} w^{|A|}.
inline Rational random_cluster(const Multigraph& g, const Rational& q, const Rational& w) {
    if (g.m() > 24) throw std::invalid_argument("random_cluster: more than 24 edges");
    const int n = g.n();
    const int m = g.m();
    std::map<std::pair<int, int>, Int> counts;  // (k(A), |A|) -> multiplicity
    std::vector<int> parent(n);
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0, sz = 0;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            ++sz;
            int a = find(g.edges()[i].u), b = find(g.edges()[i].v);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
        counts[{n - merges, sz}] += 1;
    }
    Rational total = 0;
    for (const auto& [ka, cnt] : counts)
        total += Rational(cnt) * rational_pow(q, ka.first) * rational_pow(w, ka.second);
    return total;
}

struct SpecialEvaluations {
    Int spanning_trees;        // T(1,1)
    Int spanning_forests;      // T(2,1)
    Int acyclic_orientations;  // T(2,0)
};

inline SpecialEvaluations special_evaluations(const Multigraph& g) {
    IntBiPoly t = tutte_polynomial(g).polynomial;
    return {t.eval(Int(1), Int(1)), t.eval(Int(2), Int(1)), t.eval(Int(2), Int(0))};
}

/// Matrix-tree spanning tree count (independent of the Tutte route).
/// Returns 0 for disconnected graphs; loops are ignored.
inline Int spanning_trees_kirchhoff(const Multigraph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    if (n == 1) return 1;
    std::vector<std::vector<Int>> lap(n, std::vector<Int>(n, Int(0)));
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        lap[e.u][e.u] += 1;
        lap[e.v][e.v] += 1;
        lap[e.u][e.v] -= 1;
        lap[e.v][e.u] -= 1;
    }
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
    return int_determinant(std::move(minor));
}

/// ch(G,q) = (-1)^{v(G)-k(G)} q^{k(G)} T_G(1-q, 0), exact at rational q.
inline Rational chromatic_polynomial(const Multigraph& g, const Rational& q) {
    IntBiPoly t = tutte_polynomial(g).polynomial;
    int k = g.component_count();
    IntPoly at_y0 = t.at_y(Int(0));
    Rational val = at_y0.eval(Rational(1) - q);
    Rational out = rational_pow(q, k) * val;
    if ((g.n() - k) % 2 != 0) out = -out;
    return out;
}

struct BrokenCycleCounts {
    // c[k] = number of k-edge sets containing no broken cycle, k = 0..m.
    std::vector<Int> c;
};

/// Broken cycle: a cycle minus its highest-indexed edge under `ord`. Counts
/// are independent of the ordering (Whitney); connected input required.
inline BrokenCycleCounts broken_cycle_free_counts(const Multigraph& g, const EdgeOrdering& ord) {
    if (!g.is_connected())
        throw std::invalid_argument("broken_cycle_free_counts: graph must be connected");
    if (!ord.is_valid_for(g))
        throw std::invalid_argument("broken_cycle_free_counts: ordering does not match edge ids");
    const int m = g.m();
    if (m > 26) throw std::invalid_argument("broken_cycle_free_counts: more than 26 edges");

    std::unordered_map<int, int> pos_of_id;
    for (int i = 0; i < m; ++i) pos_of_id[g.edges()[i].id] = i;

    std::vector<uint32_t> broken;
    for (const auto& cyc : enumerate_cycles(g, g.n())) {
        int hi = cyc.front();
        for (int eid : cyc)
            if (ord.rank(eid) > ord.rank(hi)) hi = eid;
        uint32_t mask = 0;
        for (int eid : cyc)
            if (eid != hi) mask |= uint32_t{1} << pos_of_id[eid];
        broken.push_back(mask);
    }
    std::sort(broken.begin(), broken.end());
    broken.erase(std::unique(broken.begin(), broken.end()), broken.end());

    BrokenCycleCounts out;
    out.c.assign(m + 1, Int(0));
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        bool ok = true;
        for (uint32_t b : broken)
            if ((mask & b) == b) {
                ok = false;
                break;
            }
        if (ok) out.c[static_cast<size_t>(__builtin_popcount(mask))] += 1;
    }
    return out;
}

}  // namespace graphpoly
