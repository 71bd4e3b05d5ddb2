#pragma once

#include <graphpoly/bethe.hpp>
#include <graphpoly/halfedge.hpp>
#include <graphpoly/matching.hpp>
#include <graphpoly/multigraph.hpp>
#include <graphpoly/nfg.hpp>
#include <graphpoly/random_regular.hpp>
#include <graphpoly/tutte.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace graphpoly {

// ---------------------------------------------------------------------------
// Inequality audits

/// One comparison-lemma row: (1 + g dbar/z)^{-L-n/g} R_G(z+1) <= F_G(z) <= R_G(z+1).
struct ComparisonReport {
    Rational z;
    int g = 0;
    int cycle_count = 0;         // L(G,g)
    Rational forest_value;       // F_G(z)
    Rational pseudo_value;       // R_G(z+1)
    double lower_bound = 0.0;
    std::optional<Rational> lower_bound_exact;  // present when the exponent is integral
    bool lower_ok = false;
    bool upper_ok = false;
};

inline ComparisonReport comparison_bound_report(const Multigraph& graph, const Rational& z,
                                                int g) {
    if (z <= 0) throw std::invalid_argument("comparison_bound_report: need z > 0");
    ComparisonReport rep;
    rep.z = z;
    rep.g = g;
    rep.cycle_count = count_short_cycles(graph, g);
    rep.forest_value = to_rational(forest_polynomial(graph)).eval(z);
    rep.pseudo_value = to_rational(r_polynomial(graph)).eval(z + 1);

    Rational dbar = graph.n() > 0 ? Rational(2 * graph.m(), graph.n()) : Rational(0);
    Rational base = Rational(1) + Rational(g) * dbar / z;
    // exponent L + n/g
    if (graph.n() % g == 0) {
        long e = rep.cycle_count + graph.n() / g;
        rep.lower_bound_exact = rep.pseudo_value / rational_pow(base, e);
        rep.lower_bound = to_double(*rep.lower_bound_exact);
        rep.lower_ok = *rep.lower_bound_exact <= rep.forest_value;
    } else {
        double e = rep.cycle_count + static_cast<double>(graph.n()) / g;
        rep.lower_bound = to_double(rep.pseudo_value) / std::pow(to_double(base), e);
        rep.lower_ok = rep.lower_bound <= to_double(rep.forest_value) * (1.0 + 1e-12);
    }
    rep.upper_ok = rep.forest_value <= rep.pseudo_value;
    return rep;
}

/// One FKG-bound row per k: c_k >= (2/3)^L (1-1/g)^{m-n+k(G)-L} f_k, exact.
struct FkgEntry {
    int k = 0;
    Int f_k, c_k;
    Rational bound;
    bool ok = false;
    bool tight = false;
};

struct FkgReport {
    int g = 0;
    int cycle_count = 0;
    std::vector<FkgEntry> entries;
    bool all_ok = true;
};

inline FkgReport fkg_bound_report(const Multigraph& graph, const EdgeOrdering& ord, int g) {
    if (!graph.is_connected())
        throw std::invalid_argument("fkg_bound_report: graph must be connected");
    FkgReport rep;
    rep.g = g;
    rep.cycle_count = count_short_cycles(graph, g);
    IntPoly forest = forest_polynomial(graph);
    BrokenCycleCounts bcc = broken_cycle_free_counts(graph, ord);
    int n = graph.n(), m = graph.m(), kg = graph.component_count();
    long expo = static_cast<long>(m) - n + kg - rep.cycle_count;
    Rational factor = rational_pow(Rational(2, 3), rep.cycle_count) *
                      rational_pow(Rational(g - 1, g), expo);
    for (int k = 0; k <= n - kg; ++k) {
        FkgEntry e;
        e.k = k;
        e.f_k = forest.coeff(static_cast<size_t>(n - k));
        e.c_k = k < static_cast<int>(bcc.c.size()) ? bcc.c[static_cast<size_t>(k)] : Int(0);
        e.bound = factor * Rational(e.f_k);
        e.ok = Rational(e.c_k) >= e.bound;
        e.tight = Rational(e.c_k) == e.bound;
        rep.all_ok = rep.all_ok && e.ok;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Identity suite

struct CorpusGraph {
    std::string name;
    Multigraph graph;
};

inline std::vector<CorpusGraph> default_corpus() {
    return {
        {"K2", complete_graph(2)},
        {"P3", path_graph(3)},
        {"star3", star_graph(3)},
        {"K3", complete_graph(3)},
        {"C4", cycle_graph(4)},
        {"C5", cycle_graph(5)},
        {"C6", cycle_graph(6)},
        {"K4", complete_graph(4)},
        {"C3+C3", disjoint_union(cycle_graph(3), cycle_graph(3))},
        {"petersen", petersen_graph()},
    };
}

enum class CheckStatus { Pass, Fail, Skip };

struct IdentityResult {
    std::string identity;
    std::string graph;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (r.status == CheckStatus::Fail) return false;
        return true;
    }
    int failures() const {
        int f = 0;
        for (const auto& r : results)
            if (r.status == CheckStatus::Fail) ++f;
        return f;
    }
};

struct IdentitySuiteOptions {
    uint64_t seed = 12345;
    // Test hook: corrupt the named identity's computed value on the first
    // graph, to exercise failure reporting.
    std::string tamper_identity;
};

namespace detail {

inline IntPoly poly_z_k_t_at_y(const IntBiPoly& t, int k_g, const Int& y) {
    // z^{k(G)} T(z+1, y) as a polynomial in z.
    return compose_shift(t.at_y(y), Int(1)).shifted(static_cast<size_t>(k_g));
}

}  // namespace detail

/// Runs the cross-module exact identities on each corpus graph. Guard
/// violations are reported as Skip entries; the suite always continues.
inline IdentityReport identity_suite(const std::vector<CorpusGraph>& corpus,
                                     const IdentitySuiteOptions& opt = {}) {
    IdentityReport rep;
    Rng rng(opt.seed);
    auto rnd_rational = [&](int lo, int hi) {
        // nonzero numerator keeps evaluation points away from degenerate spots
        long num = lo + static_cast<long>(rng.bounded(static_cast<uint64_t>(hi - lo + 1)));
        long den = 1 + static_cast<long>(rng.bounded(4));
        return Rational(num, den);
    };
    bool tampered = false;
    auto add = [&](const std::string& id, const std::string& g, CheckStatus st,
                   std::string detail = "") {
        rep.results.push_back({id, g, st, std::move(detail)});
    };
    auto tamper_here = [&](const std::string& id) {
        if (!tampered && id == opt.tamper_identity) {
            tampered = true;
            return true;
        }
        return false;
    };

    for (const auto& [name, g] : corpus) {
        // 1. Deletion-contraction vs subset-expansion oracle.
        {
            const char* id = "tutte-oracle";
            if (g.m() > 24) {
                add(id, name, CheckStatus::Skip, "more than 24 edges");
            } else {
                IntBiPoly dc = tutte_polynomial(g).polynomial;
                if (tamper_here(id)) dc += IntBiPoly::one();
                add(id, name, dc == tutte_subset_oracle(g) ? CheckStatus::Pass : CheckStatus::Fail);
            }
        }
        // 2. Forest counts by enumeration vs z^{k} T(z+1,1).
        {
            const char* id = "forest-tutte";
            if (g.m() > 24) {
                add(id, name, CheckStatus::Skip, "more than 24 edges");
            } else {
                IntPoly lhs = forest_polynomial_enumerated(g);
                if (tamper_here(id)) lhs += IntPoly::one();
                add(id, name, lhs == forest_polynomial(g) ? CheckStatus::Pass : CheckStatus::Fail);
            }
        }
        // 3. Half-edge model theorem: brute force vs closed form, random weights.
        {
            const char* id = "half-edge";
            if (g.m() > 20) {
                add(id, name, CheckStatus::Skip, "more than 20 edges");
            } else {
                bool ok = true;
                int triples = g.m() <= 12 ? 25 : 2;
                for (int t = 0; t < triples && ok; ++t) {
                    HalfEdgeWeights<Rational> w{rnd_rational(1, 6), rnd_rational(-5, 5),
                                                rnd_rational(-5, 5)};
                    Rational brute = half_edge_partition(g, w);
                    if (tamper_here(id)) brute += 1;
                    ok = brute == half_edge_closed_form(g, w);
                }
                add(id, name, ok ? CheckStatus::Pass : CheckStatus::Fail);
            }
        }
        // 4. Pseudo-forest expansion equals R_G(z+1) coefficientwise.
        {
            const char* id = "pseudo-forest";
            if (g.m() > 24) {
                add(id, name, CheckStatus::Skip, "more than 24 edges");
            } else {
                IntPoly lhs = pseudo_forest_polynomial(g);
                if (tamper_here(id)) lhs += IntPoly::one();
                IntPoly rhs = compose_shift(r_polynomial(g), Int(1));
                add(id, name, lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
            }
        }
        // 5. Random-cluster conversion at random rational (x,y), x,y != 1.
        {
            const char* id = "random-cluster";
            if (g.m() > 24) {
                add(id, name, CheckStatus::Skip, "more than 24 edges");
            } else {
                IntBiPoly t = tutte_polynomial(g).polynomial;
                bool ok = true;
                for (int i = 0; i < 5 && ok; ++i) {
                    Rational x = rnd_rational(2, 6), y = rnd_rational(2, 6);
                    while (x == 1) x = rnd_rational(2, 6);
                    while (y == 1) y = rnd_rational(2, 6);
                    Rational z = random_cluster(g, (x - 1) * (y - 1), y - 1);
                    if (tamper_here(id)) z += 1;
                    Rational lhs = rational_pow(x - 1, -g.component_count()) *
                                   rational_pow(y - 1, -g.n()) * z;
                    ok = lhs == t.eval(x, y);
                }
                add(id, name, ok ? CheckStatus::Pass : CheckStatus::Fail);
            }
        }
        // 6. Whitney/broken-cycle: counts equal coefficients of z^{k}T(z+1,0),
        //    independently of the edge ordering.
        {
            const char* id = "whitney";
            if (!g.is_connected()) {
                add(id, name, CheckStatus::Skip, "disconnected");
            } else if (g.m() > 24) {
                add(id, name, CheckStatus::Skip, "more than 24 edges");
            } else {
                IntPoly rhs = detail::poly_z_k_t_at_y(tutte_polynomial(g).polynomial,
                                                      g.component_count(), Int(0));
                bool ok = true;
                for (int t = 0; t < 3 && ok; ++t) {
                    EdgeOrdering ord = identity_ordering(g);
                    if (t > 0) rng.shuffle(ord.order);
                    BrokenCycleCounts bcc = broken_cycle_free_counts(g, ord);
                    if (tamper_here(id)) bcc.c[0] += 1;
                    IntPoly lhs;
                    for (size_t k = 0; k < bcc.c.size(); ++k) {
                        if (bcc.c[k] == 0) continue;
                        lhs += IntPoly::monomial(static_cast<size_t>(g.n()) - k, bcc.c[k]);
                    }
                    ok = lhs == rhs;
                }
                add(id, name, ok ? CheckStatus::Pass : CheckStatus::Fail);
            }
        }
        // 7. Kirchhoff spanning-tree count vs T(1,1), per component.
        {
            const char* id = "kirchhoff";
            Int tau = tutte_polynomial(g).polynomial.eval(Int(1), Int(1));
            Int kirchhoff = 1;
            auto labels = g.component_labels();
            int nc = g.component_count();
            for (int c = 0; c < nc; ++c) {
                std::vector<int> remap(g.n(), -1);
                int sz = 0;
                for (int v = 0; v < g.n(); ++v)
                    if (labels[v] == c) remap[v] = sz++;
                Multigraph comp(sz);
                for (const auto& e : g.edges())
                    if (labels[e.u] == c) comp.add_edge(remap[e.u], remap[e.v]);
                kirchhoff *= spanning_trees_kirchhoff(comp);
            }
            if (tamper_here(id)) kirchhoff += 1;
            add(id, name, kirchhoff == tau ? CheckStatus::Pass : CheckStatus::Fail);
        }
        // 8. Regular R <-> mu substitution, exact at square rational z.
        {
            const char* id = "r-mu";
            int d = 0;
            if (!g.is_regular(&d)) {
                add(id, name, CheckStatus::Skip, "not regular");
            } else {
                bool ok = true;
                for (Rational s : {Rational(1), Rational(2), Rational(3, 2)}) {
                    auto [lhs, rhs] = r_regular_identity_exact(g, s);
                    if (tamper_here(id)) lhs += 1;
                    ok = ok && lhs == rhs;
                }
                add(id, name, ok ? CheckStatus::Pass : CheckStatus::Fail);
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Convergence experiments

struct ConvergenceParams {
    int d = 3;
    Rational x = 2;
    Rational y = 1;
    std::vector<int> sizes;
    int trials = 20;
    uint64_t seed = 1;
    int edge_guard = 32;  // random-regular route; cycle graphs allow up to 256
};

struct ExperimentRecord {
    int d = 0, n = 0, trial = 0;
    uint64_t seed = 0;
    int girth_value = 0;
    int cycle_count = 0;  // L(G, girth) - zero by construction at g = girth
    Rational x, y;
    Rational t_exact;
    double root = 0.0;
    double target = 0.0;
    double gap = 0.0;
};

struct ConvergenceAggregate {
    int n = 0;
    double mean_root = 0.0, mean_gap = 0.0, min_gap = 0.0, max_gap = 0.0;
};

struct ConvergenceResult {
    ConvergenceParams params;
    std::vector<ExperimentRecord> records;
    std::vector<ConvergenceAggregate> aggregates;
};

/// Samples random d-regular graphs (cycles for d = 2), evaluates T(x,y)
/// exactly, and records the per-vertex root against the t_d target.
inline ConvergenceResult convergence_run(const ConvergenceParams& p) {
    if (p.d < 2) throw std::invalid_argument("convergence_run: need d >= 2");
    double xd = to_double(p.x);
    double yd = to_double(p.y);
    if (xd < 1 || yd < 0 || yd > 1)
        throw std::invalid_argument("convergence_run: need x >= 1 and y in [0,1]");
    ConvergenceResult out;
    out.params = p;
    double target = t_d(p.d, xd, yd);
    for (int n : p.sizes) {
        if ((static_cast<long long>(n) * p.d) % 2 != 0)
            throw std::invalid_argument("convergence_run: n*d must be even (n=" +
                                        std::to_string(n) + ")");
        int m = n * p.d / 2;
        int guard = p.d == 2 ? 256 : p.edge_guard;
        if (m > guard)
            throw std::invalid_argument("convergence_run: size n=" + std::to_string(n) + " needs " +
                                        std::to_string(m) + " edges, beyond the guard of " +
                                        std::to_string(guard));
        ConvergenceAggregate agg;
        agg.n = n;
        agg.min_gap = 1e300;
        agg.max_gap = -1e300;
        for (int trial = 0; trial < p.trials; ++trial) {
            ExperimentRecord rec;
            rec.d = p.d;
            rec.n = n;
            rec.trial = trial;
            rec.seed = p.seed ^ static_cast<uint64_t>(trial);
            Multigraph g = p.d == 2 ? cycle_graph(n) : random_regular(n, p.d, rec.seed);
            rec.girth_value = girth(g);
            rec.cycle_count = count_short_cycles(g, rec.girth_value);
            rec.x = p.x;
            rec.y = p.y;
            rec.t_exact = to_rational(tutte_polynomial(g).polynomial).eval(p.x, p.y);
            if (rec.t_exact <= 0)
                throw std::runtime_error("convergence_run: nonpositive T(x,y) evaluation");
            rec.root = std::exp(std::log(to_double(rec.t_exact)) / n);
            rec.target = target;
            rec.gap = std::abs(rec.root - target) / target;
            agg.mean_root += rec.root;
            agg.mean_gap += rec.gap;
            agg.min_gap = std::min(agg.min_gap, rec.gap);
            agg.max_gap = std::max(agg.max_gap, rec.gap);
            out.records.push_back(std::move(rec));
        }
        agg.mean_root /= p.trials;
        agg.mean_gap /= p.trials;
        out.aggregates.push_back(agg);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Output: frozen CSV schema (README documents the columns)

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline const char* kConvergenceCsvHeader =
    "d,n,trial,seed,girth,L,x,y,T_exact,root,target,gap";

inline void write_convergence_csv(std::ostream& os, const ConvergenceResult& r) {
    os << kConvergenceCsvHeader << "\n";
    for (const auto& rec : r.records) {
        os << rec.d << ',' << rec.n << ',' << rec.trial << ',' << rec.seed << ','
           << rec.girth_value << ',' << rec.cycle_count << ',' << to_string(rec.x) << ','
           << to_string(rec.y) << ',' << to_string(rec.t_exact) << ',' << format_double(rec.root)
           << ',' << format_double(rec.target) << ',' << format_double(rec.gap) << "\n";
    }
    // Aggregate rows: trial = "mean", T_exact empty, girth/L empty.
    for (const auto& a : r.aggregates) {
        os << r.params.d << ',' << a.n << ",mean," << r.params.seed << ",,,"
           << to_string(r.params.x) << ',' << to_string(r.params.y) << ",,"
           << format_double(a.mean_root) << ','
           << format_double(r.records.empty() ? 0.0 : r.records.front().target) << ','
           << format_double(a.mean_gap) << "\n";
    }
}

}  // namespace graphpoly
