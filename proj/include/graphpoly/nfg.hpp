#pragma once

#include <graphpoly/halfedge.hpp>
#include <graphpoly/linalg.hpp>
#include <graphpoly/multigraph.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphpoly {

/// Graph + finite alphabet + one local function table per vertex. The table of
/// vertex v is indexed by the assignment of its incident edge variables in
/// ascending edge-id order, little-endian: index = sum_i sigma(e_i) q^i.
class NormalFactorGraph {
public:
    NormalFactorGraph(Multigraph graph, int q, std::vector<std::vector<Rational>> tables)
        : graph_(std::move(graph)), q_(q), tables_(std::move(tables)) {
        if (q_ < 1) throw std::invalid_argument("NormalFactorGraph: alphabet must be nonempty");
        if (graph_.has_loop()) throw std::invalid_argument("NormalFactorGraph: loops not supported");
        if (static_cast<int>(tables_.size()) != graph_.n())
            throw std::invalid_argument("NormalFactorGraph: one table per vertex required");
        incident_.assign(graph_.n(), {});
        for (int i = 0; i < graph_.m(); ++i) {
            incident_[graph_.edges()[i].u].push_back(i);
            incident_[graph_.edges()[i].v].push_back(i);
        }
        for (int v = 0; v < graph_.n(); ++v) {
            size_t want = 1;
            for (size_t i = 0; i < incident_[v].size(); ++i) want *= static_cast<size_t>(q_);
            if (tables_[v].size() != want)
                throw std::invalid_argument("NormalFactorGraph: table size mismatch at vertex " +
                                            std::to_string(v));
        }
    }

    const Multigraph& graph() const { return graph_; }
    int alphabet_size() const { return q_; }
    const std::vector<std::vector<Rational>>& tables() const { return tables_; }
    // Edge positions incident to v, ascending edge id; position in this list
    // is the mixed-radix digit index of the vertex table.
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

private:
    Multigraph graph_;
    int q_;
    std::vector<std::vector<Rational>> tables_;
    std::vector<std::vector<int>> incident_;
};

/// Z(H) = sum over edge-variable assignments of the product of local values.
inline Rational nfg_partition(const NormalFactorGraph& h) {
    const int m = h.graph().m();
    const int n = h.graph().n();
    const int q = h.alphabet_size();
    double states = std::pow(static_cast<double>(q), m);
    if (states > 1e7) throw std::invalid_argument("nfg_partition: state space exceeds 1e7");

    std::vector<int> sigma(m, 0);
    Rational total = 0;
    for (;;) {
        Rational term = 1;
        for (int v = 0; v < n && term != 0; ++v) {
            size_t idx = 0, base = 1;
            for (int e : h.incident_edges(v)) {
                idx += static_cast<size_t>(sigma[e]) * base;
                base *= static_cast<size_t>(q);
            }
            term *= h.tables()[v][idx];
        }
        total += term;
        int pos = 0;
        while (pos < m && ++sigma[pos] == q) sigma[pos++] = 0;
        if (pos == m) break;
    }
    return total;
}

/// Turns the half-edge model into an NFG on the subdivision of G: original
/// vertices carry the "at most one chosen half" indicator, subdivision
/// vertices carry the edge table [[a0,a1],[a1,a2]]. Z equals M_G(a0,a1,a2).
inline NormalFactorGraph build_subdivision_nfg(const Multigraph& g,
                                               const HalfEdgeWeights<Rational>& w) {
    const int n = g.n();
    const int m = g.m();
    Multigraph sub(n + m);
    for (int j = 0; j < m; ++j) {
        sub.add_edge(g.edges()[j].u, n + j);  // id 2j: u's half
        sub.add_edge(n + j, g.edges()[j].v);  // id 2j+1: v's half
    }
    std::vector<std::vector<Rational>> tables(n + m);
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int j = 0; j < m; ++j) {
            if (g.edges()[j].u == v) ++d;
            if (g.edges()[j].v == v) ++d;
        }
        std::vector<Rational> t(size_t{1} << d, Rational(0));
        for (size_t a = 0; a < t.size(); ++a)
            if (__builtin_popcountll(a) <= 1) t[a] = 1;
        tables[v] = std::move(t);
    }
    for (int j = 0; j < m; ++j) tables[n + j] = {w.a0, w.a1, w.a1, w.a2};
    return NormalFactorGraph(std::move(sub), 2, std::move(tables));
}

/// Per-edge gauge matrices. at_u is applied at the edge's u endpoint, at_v at
/// its v endpoint; both are |Y| x |X| over the new alphabet Y. Validity:
/// at_u^T * at_v = Id_X exactly.
struct GaugePair {
    RationalMatrix at_u, at_v;
};

inline bool gauge_pair_valid(const GaugePair& p, int q) {
    if (row_count(p.at_u) != row_count(p.at_v)) return false;
    if (col_count(p.at_u) != static_cast<size_t>(q) || col_count(p.at_v) != static_cast<size_t>(q))
        return false;
    return is_identity(mat_mul(transpose(p.at_u), p.at_v));
}

/// Gauge (holographic) transformation: each vertex table is contracted with
/// its incident gauge matrices; the partition function is preserved exactly.
inline NormalFactorGraph gauge_transform(const NormalFactorGraph& h,
                                         const std::vector<GaugePair>& gauges) {
    const int m = h.graph().m();
    const int n = h.graph().n();
    const int q = h.alphabet_size();
    if (static_cast<int>(gauges.size()) != m)
        throw std::invalid_argument("gauge_transform: one GaugePair per edge required");
    size_t q_new = 0;
    for (int e = 0; e < m; ++e) {
        if (!gauge_pair_valid(gauges[e], q))
            throw std::invalid_argument("gauge_transform: invalid gauge pair at edge " +
                                        std::to_string(e));
        if (e == 0)
            q_new = row_count(gauges[e].at_u);
        else if (row_count(gauges[e].at_u) != q_new)
            throw std::invalid_argument("gauge_transform: mixed new-alphabet sizes");
    }

    std::vector<std::vector<Rational>> new_tables(n);
    for (int v = 0; v < n; ++v) {
        const auto& inc = h.incident_edges(v);
        const size_t deg = inc.size();
        size_t new_size = 1, old_size = 1;
        for (size_t i = 0; i < deg; ++i) {
            new_size *= q_new;
            old_size *= static_cast<size_t>(q);
        }
        // The matrix seen from v on incident edge e.
        std::vector<const RationalMatrix*> mats(deg);
        for (size_t i = 0; i < deg; ++i) {
            const Edge& e = h.graph().edges()[static_cast<size_t>(inc[i])];
            mats[i] = (e.u == v) ? &gauges[static_cast<size_t>(inc[i])].at_u
                                 : &gauges[static_cast<size_t>(inc[i])].at_v;
        }
        std::vector<Rational> table(new_size, Rational(0));
        std::vector<size_t> tau(deg, 0), sig(deg, 0);
        for (size_t ti = 0; ti < new_size; ++ti) {
            size_t rem = ti;
            for (size_t i = 0; i < deg; ++i) {
                tau[i] = rem % q_new;
                rem /= q_new;
            }
            Rational acc = 0;
            for (size_t si = 0; si < old_size; ++si) {
                size_t r = si;
                Rational prod = h.tables()[v][si];
                for (size_t i = 0; i < deg && prod != 0; ++i) {
                    sig[i] = r % static_cast<size_t>(q);
                    r /= static_cast<size_t>(q);
                    prod *= (*mats[i])[tau[i]][sig[i]];
                }
                acc += prod;
            }
            table[ti] = acc;
        }
        new_tables[v] = std::move(table);
    }
    return NormalFactorGraph(h.graph(), static_cast<int>(q_new), std::move(new_tables));
}

/// The two explicit gauges that diagonalize the half-edge model's edge table:
/// G1 (at subdivision vertices) and G2 (at original vertices), G2^T G1 = Id.
struct HalfEdgeGauges {
    RationalMatrix g1, g2;
};

inline HalfEdgeGauges half_edge_model_gauges(const HalfEdgeWeights<Rational>& w) {
    if (w.a0 == 0) throw std::invalid_argument("half_edge_model_gauges: a0 must be nonzero");
    Rational r = w.a1 / w.a0;
    HalfEdgeGauges g;
    g.g1 = {{Rational(1), Rational(0)}, {-r, Rational(1)}};
    g.g2 = {{Rational(1), r}, {Rational(0), Rational(1)}};
    return g;
}

/// Gauge assignment for a subdivision NFG: on each subdivided edge, G1 acts at
/// the subdivision endpoint and G2 at the original-vertex endpoint.
inline std::vector<GaugePair> subdivision_gauges(const NormalFactorGraph& h,
                                                 const HalfEdgeGauges& g, int original_n) {
    std::vector<GaugePair> out;
    out.reserve(static_cast<size_t>(h.graph().m()));
    for (const auto& e : h.graph().edges()) {
        bool u_is_original = e.u < original_n;
        GaugePair p;
        p.at_u = u_is_original ? g.g2 : g.g1;
        p.at_v = u_is_original ? g.g1 : g.g2;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace graphpoly
