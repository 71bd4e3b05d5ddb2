#pragma once

#include <graphpoly/multigraph.hpp>
#include <graphpoly/polynomial.hpp>

#include <functional>
#include <stdexcept>
#include <vector>

namespace graphpoly {

/// Weights for edges with 0, 1, or 2 chosen halves. The ring is generic so the
/// partition function can be carried symbolically (e.g. R = IntPoly with a0 = z).
template <class R>
struct HalfEdgeWeights {
    R a0, a1, a2;
};

/// Census of half-edge configurations by (C1, C2): counts[c1][c2] is the
/// number of configurations with c1 single-half edges and c2 fully chosen
/// edges (then C0 = m - c1 - c2). Enumerated as per-vertex choices (nothing,
/// or one incident half-edge); weight-independent.
inline std::vector<std::vector<Int>> half_edge_census(const Multigraph& g) {
    if (g.m() > 20) throw std::invalid_argument("half_edge_census: more than 20 edges");
    const int n = g.n();
    const int m = g.m();

    std::vector<std::vector<int>> halves(n);  // incident edge positions; loops twice
    for (int i = 0; i < m; ++i) {
        halves[g.edges()[i].u].push_back(i);
        halves[g.edges()[i].v].push_back(i);
    }
    double state_estimate = 1.0;
    for (int v = 0; v < n; ++v) state_estimate *= 1.0 + static_cast<double>(halves[v].size());
    if (state_estimate > 5e7) throw std::invalid_argument("half_edge_census: state space too large");

    std::vector<std::vector<Int>> counts(static_cast<size_t>(m) + 1,
                                         std::vector<Int>(static_cast<size_t>(m) + 1, Int(0)));
    std::vector<int> chosen(m, 0);  // halves chosen per edge
    int c1 = 0, c2 = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            counts[static_cast<size_t>(c1)][static_cast<size_t>(c2)] += 1;
            return;
        }
        rec(v + 1);  // vertex picks nothing
        for (int e : halves[v]) {
            ++chosen[e];
            if (chosen[e] == 1)
                ++c1;
            else {
                --c1;
                ++c2;
            }
            rec(v + 1);
            if (chosen[e] == 1)
                --c1;
            else {
                ++c1;
                --c2;
            }
            --chosen[e];
        }
    };
    rec(0);
    return counts;
}

/// M_G(a0,a1,a2) over a generic ring, assembled from the census.
template <class R>
R half_edge_partition(const Multigraph& g, const HalfEdgeWeights<R>& w) {
    auto counts = half_edge_census(g);
    const int m = g.m();
    std::vector<R> pow0{R(1)}, pow1{R(1)}, pow2{R(1)};
    for (int i = 1; i <= m; ++i) {
        pow0.push_back(pow0.back() * w.a0);
        pow1.push_back(pow1.back() * w.a1);
        pow2.push_back(pow2.back() * w.a2);
    }
    R total(0);
    for (int c1 = 0; c1 <= m; ++c1)
        for (int c2 = 0; c1 + c2 <= m; ++c2) {
            const Int& cnt = counts[static_cast<size_t>(c1)][static_cast<size_t>(c2)];
            if (cnt == 0) continue;
            total += R(cnt) * pow0[static_cast<size_t>(m - c1 - c2)] *
                     pow1[static_cast<size_t>(c1)] * pow2[static_cast<size_t>(c2)];
        }
    return total;
}

/// Closed form a0^{|E|-n} sum_M (a0 a2 - a1^2)^{|M|} prod_{v not in V(M)} (a0 + d_v a1).
inline Rational half_edge_closed_form(const Multigraph& g, const HalfEdgeWeights<Rational>& w) {
    if (w.a0 == 0) throw std::invalid_argument("half_edge_closed_form: a0 must be nonzero");
    auto deg = g.degrees();
    Rational det = w.a0 * w.a2 - w.a1 * w.a1;

    // Matchings enumerated as in the matching engine; scalar factors here.
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[std::min(e.u, e.v)].push_back(std::max(e.u, e.v));
    }
    std::vector<char> covered(g.n(), 0);
    Rational total = 0;
    std::function<void(int, Rational)> rec = [&](int v, Rational acc) {
        while (v < g.n() && covered[v]) ++v;
        if (v == g.n()) {
            total += acc;
            return;
        }
        covered[v] = 1;
        rec(v + 1, acc * (w.a0 + Rational(deg[v]) * w.a1));
        for (int u : adj[v]) {
            if (covered[u]) continue;
            covered[u] = 1;
            rec(v + 1, acc * det);
            covered[u] = 0;
        }
        covered[v] = 0;
    };
    rec(0, Rational(1));
    return rational_pow(w.a0, g.m() - g.n()) * total;
}

/// Pseudo-forest generating polynomial sum_k (sum_{A in PF, |A|=k} 2^{c(A)}) z^{n-k}.
/// A component is admissible iff |edges| <= |vertices|; c(A) counts the
/// unicyclic ones. Equals R_G(z+1) coefficientwise.
inline IntPoly pseudo_forest_polynomial(const Multigraph& g) {
    const int n = g.n();
    const int m = g.m();
    if (m > 24) throw std::invalid_argument("pseudo_forest_polynomial: more than 24 edges");
    std::vector<Int> coeff(static_cast<size_t>(n) + 1, Int(0));
    std::vector<int> parent(n), esz(n), vsz(n);
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        for (int v = 0; v < n; ++v) {
            parent[v] = v;
            esz[v] = 0;
            vsz[v] = 1;
        }
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool ok = true;
        int sz = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            ++sz;
            int a = find(g.edges()[i].u), b = find(g.edges()[i].v);
            if (a == b) {
                esz[a] += 1;
            } else {
                parent[a] = b;
                esz[b] += esz[a] + 1;
                vsz[b] += vsz[a];
            }
            if (esz[find(b)] > vsz[find(b)]) ok = false;
        }
        if (!ok) continue;
        int cycles = 0;
        for (int v = 0; v < n; ++v)
            if (find(v) == v && esz[v] == vsz[v]) ++cycles;
        coeff[static_cast<size_t>(n - sz)] += int_pow(2, static_cast<unsigned long>(cycles));
    }
    return IntPoly(std::move(coeff));
}

/// Forest counts by direct subset enumeration (independent of the Tutte
/// route): returns sum_k f_k z^{n-k}.
inline IntPoly forest_polynomial_enumerated(const Multigraph& g) {
    const int n = g.n();
    const int m = g.m();
    if (m > 24) throw std::invalid_argument("forest_polynomial_enumerated: more than 24 edges");
    std::vector<Int> coeff(static_cast<size_t>(n) + 1, Int(0));
    std::vector<int> parent(n);
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool acyclic = true;
        int sz = 0;
        for (int i = 0; i < m && acyclic; ++i) {
            if (!(mask >> i & 1)) continue;
            ++sz;
            int a = find(g.edges()[i].u), b = find(g.edges()[i].v);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        if (acyclic) coeff[static_cast<size_t>(n - sz)] += 1;
    }
    return IntPoly(std::move(coeff));
}

}  // namespace graphpoly
