#pragma once

#include <graphpoly/multigraph.hpp>
#include <graphpoly/polynomial.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace graphpoly {

struct MatchingPolynomial {
    IntPoly poly;                     // mu_G(z) = sum_k (-1)^k m_k z^{n-2k}
    std::vector<Int> matching_counts; // m_0 .. m_{floor(n/2)}
};

namespace detail {

// Enumerates matchings once each: scanning vertices in ascending order, an
// uncovered vertex either stays uncovered or matches a greater uncovered
// neighbor. Factors multiply incrementally along the recursion.
template <class OnUncovered, class OnMatch>
class MatchingEnumerator {
public:
    MatchingEnumerator(const Multigraph& g, OnUncovered on_uncovered, OnMatch on_match)
        : n_(g.n()), on_uncovered_(on_uncovered), on_match_(on_match), adj_(g.n()) {
        for (const auto& e : g.edges()) {
            if (e.is_loop()) continue;  // loops never participate in matchings
            adj_[std::min(e.u, e.v)].push_back(std::max(e.u, e.v));
        }
    }

    IntPoly run() {
        covered_.assign(n_, 0);
        total_ = IntPoly::zero();
        descend(0, IntPoly::one());
        return total_;
    }

private:
    int n_;
    OnUncovered on_uncovered_;
    OnMatch on_match_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> covered_;
    IntPoly total_;

    void descend(int v, const IntPoly& acc) {
        while (v < n_ && covered_[v]) ++v;
        if (v == n_) {
            total_ += acc;
            return;
        }
        covered_[v] = 1;
        descend(v + 1, acc * on_uncovered_(v));
        for (int w : adj_[v]) {
            if (covered_[w]) continue;
            covered_[w] = 1;
            descend(v + 1, acc * on_match_(v, w));
            covered_[w] = 0;
        }
        covered_[v] = 0;
    }
};

}  // namespace detail

/// mu_G(z) by the matching-count expansion; rejects loops.
inline MatchingPolynomial matching_polynomial(const Multigraph& g) {
    if (g.has_loop())
        throw std::invalid_argument("matching_polynomial: defined for loopless graphs only");
    IntPoly z = IntPoly::variable();
    IntPoly minus_one(Int(-1));
    detail::MatchingEnumerator en(
        g, [&](int) { return z; }, [&](int, int) { return minus_one; });
    MatchingPolynomial out;
    out.poly = en.run();
    int n = g.n();
    for (int k = 0; 2 * k <= n; ++k) {
        Int c = out.poly.coeff(static_cast<size_t>(n - 2 * k));
        out.matching_counts.push_back(k % 2 == 0 ? c : Int(-c));
    }
    return out;
}

/// R_G(z) = sum_M (-z)^{|M|} prod_{v not in V(M)} (z + d_v - 1).
inline IntPoly r_polynomial(const Multigraph& g) {
    auto deg = g.degrees();
    IntPoly minus_z = IntPoly::monomial(1, Int(-1));
    detail::MatchingEnumerator en(
        g,
        [&](int v) { return IntPoly(std::vector<Int>{Int(deg[v] - 1), Int(1)}); },
        [&](int, int) { return minus_z; });
    return en.run();
}

/// Mohammadian's Laplacian matching polynomial:
/// sum_M (-1)^{|M|} prod_{v not in V(M)} (z - d_v).
inline IntPoly laplacian_matching_polynomial(const Multigraph& g) {
    auto deg = g.degrees();
    IntPoly minus_one(Int(-1));
    detail::MatchingEnumerator en(
        g,
        [&](int v) { return IntPoly(std::vector<Int>{Int(-deg[v]), Int(1)}); },
        [&](int, int) { return minus_one; });
    return en.run();
}

struct RootSet {
    std::vector<double> roots;  // ascending, with multiplicity
    double max_imag_residue = 0.0;
};

/// All real roots (with multiplicity) of a polynomial with integer
/// coefficients. Yun's exact squarefree decomposition first, so the
/// companion eigenproblems see only simple, well-separated roots; a Newton
/// polish against the exact factor coefficients finishes to ~1e-10.
inline RootSet companion_real_roots(const IntPoly& p) {
    RootSet out;
    if (p.degree() <= 0) return out;
    for (const auto& [factor, mult] : squarefree_decomposition(to_rational(p))) {
        int n = factor.degree();
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
        double lead = to_double(factor.coeffs().back());
        for (int i = 0; i < n; ++i)
            companion(i, n - 1) = -to_double(factor.coeff(static_cast<size_t>(i))) / lead;
        for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
        auto horner = [&](double x, double& f, double& df) {
            f = 0.0;
            df = 0.0;
            for (int i = n; i >= 0; --i) {
                df = df * x + f;
                f = f * x + to_double(factor.coeff(static_cast<size_t>(i)));
            }
        };
        for (int i = 0; i < n; ++i) {
            std::complex<double> ev = solver.eigenvalues()(i);
            out.max_imag_residue = std::max(out.max_imag_residue, std::abs(ev.imag()));
            double r = ev.real();
            for (int it = 0; it < 30; ++it) {
                double f, df;
                horner(r, f, df);
                if (df == 0.0) break;
                double step = f / df;
                r -= step;
                if (std::abs(step) < 1e-14 * (1.0 + std::abs(r))) break;
            }
            for (int t = 0; t < mult; ++t) out.roots.push_back(r);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

using MatchingRoots = RootSet;

/// All n matching roots. Real-rootedness (Heilmann-Lieb) is a theorem; a
/// large imaginary residue indicates a failure, not data.
inline MatchingRoots matching_roots(const Multigraph& g) {
    return companion_real_roots(matching_polynomial(g).poly);
}

/// Both sides of R_G(z) = z^{n/2} mu_G((d-1+z)/sqrt(z)) for d-regular G, as
/// floats. Agreement within 1e-9 relative is the contract.
inline std::pair<double, double> r_regular_identity_check(const Multigraph& g, double z) {
    int d = 0;
    if (!g.is_regular(&d))
        throw std::invalid_argument("r_regular_identity_check: graph must be regular");
    if (z <= 0) throw std::invalid_argument("r_regular_identity_check: need z > 0");
    double lhs = r_polynomial(g).eval_double(z);
    double rhs = std::pow(z, g.n() / 2.0) *
                 matching_polynomial(g).poly.eval_double((d - 1 + z) / std::sqrt(z));
    return {lhs, rhs};
}

/// Exact form of the same identity at z = s^2 for rational s, where the
/// square root is rational and both sides are rationals.
inline std::pair<Rational, Rational> r_regular_identity_exact(const Multigraph& g,
                                                              const Rational& sqrt_z) {
    int d = 0;
    if (!g.is_regular(&d))
        throw std::invalid_argument("r_regular_identity_exact: graph must be regular");
    if (sqrt_z <= 0) throw std::invalid_argument("r_regular_identity_exact: need sqrt_z > 0");
    Rational z = sqrt_z * sqrt_z;
    Rational lhs = to_rational(r_polynomial(g)).eval(z);
    Rational arg = (Rational(d - 1) + z) / sqrt_z;
    Rational rhs = rational_pow(sqrt_z, g.n()) * to_rational(matching_polynomial(g).poly).eval(arg);
    return {lhs, rhs};
}

struct PathTree {
    struct Node {
        int parent;  // -1 at the root
        int vertex;  // last vertex of the path
    };
    std::vector<Node> nodes;  // node 0 is the trivial path [u]
    size_t size() const { return nodes.size(); }
};

/// T(G,u): tree of simple paths starting at u; child = one-step extension.
inline PathTree path_tree(const Multigraph& g, int u, size_t node_guard = 1000000) {
    if (u < 0 || u >= g.n()) throw std::out_of_range("path_tree: root out of range");
    // Parallel edges do not add paths: neighbor sets, not edge multisets.
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    PathTree t;
    t.nodes.push_back({-1, u});
    std::vector<char> on_path(g.n(), 0);
    std::function<void(int)> extend = [&](int node) {
        int last = t.nodes[node].vertex;
        on_path[last] = 1;
        for (int w : adj[last]) {
            if (on_path[w]) continue;
            if (t.nodes.size() >= node_guard)
                throw std::runtime_error("path_tree: node guard exceeded");
            t.nodes.push_back({node, w});
            extend(static_cast<int>(t.nodes.size()) - 1);
        }
        on_path[last] = 0;
    };
    extend(0);
    return t;
}

/// Closed walks of the given length at the root of a path-tree.
inline Int closed_walks_at_root(const PathTree& t, int len) {
    if (len < 0) throw std::invalid_argument("closed_walks_at_root: negative length");
    std::vector<std::vector<int>> children(t.size());
    for (size_t i = 1; i < t.size(); ++i) children[static_cast<size_t>(t.nodes[i].parent)].push_back(static_cast<int>(i));
    std::vector<Int> cur(t.size(), Int(0)), next(t.size());
    cur[0] = 1;
    for (int s = 0; s < len; ++s) {
        std::fill(next.begin(), next.end(), Int(0));
        for (size_t v = 0; v < t.size(); ++v) {
            if (cur[v] == 0) continue;
            if (t.nodes[v].parent >= 0) next[static_cast<size_t>(t.nodes[v].parent)] += cur[v];
            for (int c : children[v]) next[static_cast<size_t>(c)] += cur[v];
        }
        std::swap(cur, next);
    }
    return cur[0];
}

/// "Worm" count of the same walks without materializing the tree: the state
/// is the current simple path, which can grow by one vertex or retract.
inline Int tree_like_walks_worm(const Multigraph& g, int u, int len) {
    std::vector<std::vector<int>> adj(g.n());
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<int> path{u};
    std::vector<char> on_path(g.n(), 0);
    on_path[u] = 1;
    std::function<Int(int)> rec = [&](int steps) -> Int {
        if (steps == 0) return path.size() == 1 ? Int(1) : Int(0);
        if (static_cast<int>(path.size()) - 1 > steps) return 0;  // cannot retract in time
        Int total = 0;
        if (path.size() > 1) {
            int last = path.back();
            path.pop_back();
            on_path[last] = 0;
            total += rec(steps - 1);
            on_path[last] = 1;
            path.push_back(last);
        }
        for (int w : adj[path.back()]) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            total += rec(steps - 1);
            path.pop_back();
            on_path[w] = 0;
        }
        return total;
    };
    return rec(len);
}

/// Total closed tree-like walks of length len over all start vertices;
/// equals sum_i alpha_i^len over the matching roots.
inline Int tree_like_walk_total(const Multigraph& g, int len) {
    if (len < 0) throw std::invalid_argument("tree_like_walk_total: negative length");
    Int total = 0;
    for (int u = 0; u < g.n(); ++u) {
        try {
            PathTree t = path_tree(g, u);
            total += closed_walks_at_root(t, len);
        } catch (const std::runtime_error&) {
            // node guard tripped: the worm walk is bounded by len instead
            total += tree_like_walks_worm(g, u, len);
        }
    }
    return total;
}

/// Per-vertex walk count s_len(G) = tree_like_walk_total / v(G), exact.
inline Rational tree_like_walk_average(const Multigraph& g, int len) {
    if (g.n() == 0) throw std::invalid_argument("tree_like_walk_average: empty graph");
    return Rational(tree_like_walk_total(g, len), Int(g.n()));
}

/// Closed walks of length k at the root of the infinite d-regular tree.
inline Int tree_moment_infinite(int d, int k) {
    if (d < 1 || k < 0) throw std::invalid_argument("tree_moment_infinite: need d >= 1, k >= 0");
    if (k % 2 == 1) return 0;
    // dp[h] = walks so far ending at depth h
    std::vector<Int> dp(static_cast<size_t>(k / 2 + 2), Int(0)), nd(dp.size());
    dp[0] = 1;
    for (int s = 0; s < k; ++s) {
        std::fill(nd.begin(), nd.end(), Int(0));
        for (size_t h = 0; h + 1 < dp.size(); ++h) {
            if (dp[h] == 0) continue;
            if (h + 1 < nd.size()) nd[h + 1] += dp[h] * Int(h == 0 ? d : d - 1);
            if (h >= 1) nd[h - 1] += dp[h];
        }
        std::swap(dp, nd);
    }
    return dp[0];
}

/// Exact power sums p_l = sum_i alpha_i^l from the monic coefficients of mu
/// via Newton's identities (no root extraction).
inline std::vector<Int> power_sums_from_matching(const IntPoly& mu, int max_l) {
    int n = mu.degree();
    if (n < 0 || mu.coeff(static_cast<size_t>(n)) != 1)
        throw std::invalid_argument("power_sums_from_matching: polynomial must be monic");
    std::vector<Int> p(static_cast<size_t>(max_l) + 1, Int(0));
    p[0] = n;
    auto a = [&](int j) { return j >= 0 ? mu.coeff(static_cast<size_t>(j)) : Int(0); };
    for (int k = 1; k <= max_l; ++k) {
        Int acc = 0;
        if (k <= n) acc = Int(-k) * a(n - k);
        for (int i = 1; i < k; ++i) {
            if (i > n) break;
            acc -= a(n - i) * p[static_cast<size_t>(k - i)];
        }
        p[static_cast<size_t>(k)] = acc;
    }
    return p;
}

}  // namespace graphpoly
