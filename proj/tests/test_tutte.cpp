#include <graphpoly/random_regular.hpp>
#include <graphpoly/tutte.hpp>
#include <graphpoly/halfedge.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace graphpoly;

namespace {

IntBiPoly bi(std::initializer_list<std::tuple<int, int, long>> terms) {
    IntBiPoly p;
    for (auto [i, j, c] : terms)
        p += IntBiPoly::monomial(static_cast<size_t>(i), static_cast<size_t>(j), Int(c));
    return p;
}

std::vector<Multigraph> small_corpus() {
    return {complete_graph(2), path_graph(3),  star_graph(3),  complete_graph(3),
            cycle_graph(4),    cycle_graph(5), cycle_graph(6), complete_graph(4),
            disjoint_union(cycle_graph(3), cycle_graph(3)),    petersen_graph()};
}

}  // namespace

TEST_CASE("subset oracle on hand-expanded graphs") {
    CHECK(tutte_subset_oracle(complete_graph(3)) == bi({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(tutte_subset_oracle(complete_graph(2)) == bi({{1, 0, 1}}));
    Multigraph loop(1);
    loop.add_edge(0, 0);
    CHECK(tutte_subset_oracle(loop) == bi({{0, 1, 1}}));
    Multigraph big(14);
    for (int i = 0; i < 13; ++i) big.add_edge(i, i + 1);
    for (int i = 0; i < 12; ++i) big.add_edge(i, i + 2);
    CHECK(big.m() == 25);
    CHECK_THROWS_AS(tutte_subset_oracle(big), std::invalid_argument);
}

TEST_CASE("deletion-contraction matches the oracle") {
    for (const auto& g : small_corpus())
        CHECK(tutte_polynomial(g).polynomial == tutte_subset_oracle(g));

    for (uint64_t seed = 0; seed < 10; ++seed) {
        Multigraph g = random_regular(8, 3, seed);
        CHECK(tutte_polynomial(g).polynomial == tutte_subset_oracle(g));
    }
    // multigraphs reached by contraction
    Multigraph c4 = cycle_graph(4);
    Multigraph multi = c4.contract_edge(c4.edges()[0].id);
    CHECK(tutte_polynomial(multi).polynomial == tutte_subset_oracle(multi));
}

TEST_CASE("known Tutte polynomials") {
    CHECK(tutte_polynomial(cycle_graph(4)).polynomial ==
          bi({{3, 0, 1}, {2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(tutte_polynomial(complete_graph(4)).polynomial.eval(Int(1), Int(1)) == 16);
    // trees: x^k
    CHECK(tutte_polynomial(path_graph(5)).polynomial == bi({{4, 0, 1}}));
    CHECK(tutte_polynomial(star_graph(3)).polynomial == bi({{3, 0, 1}}));
    // disjoint union multiplies
    Multigraph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    IntBiPoly t3 = tutte_polynomial(cycle_graph(3)).polynomial;
    CHECK(tutte_polynomial(two_triangles).polynomial == t3 * t3);
    CHECK(tutte_polynomial(edgeless_graph(4)).polynomial == IntBiPoly::one());
}

TEST_CASE("cycle closed form T_Cn(x,1) = (x^n-1)/(x-1)") {
    Rng rng(314);
    for (int n = 3; n <= 12; ++n) {
        IntBiPoly t = tutte_polynomial(cycle_graph(n)).polynomial;
        for (int i = 0; i < 20; ++i) {
            Rational x(1 + static_cast<long>(rng.bounded(40)),
                       1 + static_cast<long>(rng.bounded(7)));
            while (x == 1) x = Rational(2 + static_cast<long>(rng.bounded(40)), 1);
            Rational geom = (rational_pow(x, n) - 1) / (x - 1);
            CHECK(to_rational(t).eval(x, Rational(1)) == geom);
        }
    }
}

TEST_CASE("Tutte coefficients are non-negative") {
    for (const auto& g : small_corpus()) {
        IntBiPoly t = tutte_polynomial(g).polynomial;
        for (const auto& row : t.rows())
            for (const auto& c : row) CHECK(c >= 0);
    }
}

TEST_CASE("monotonicity in y for 0 <= y <= 1 at z >= 0") {
    for (const auto& g : small_corpus()) {
        BiPoly t = to_rational(tutte_polynomial(g).polynomial);
        for (Rational z : {Rational(0), Rational(1, 2), Rational(1), Rational(3)}) {
            for (Rational y : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)}) {
                Rational at_y = t.eval(z + 1, y);
                CHECK(t.eval(z + 1, Rational(0)) <= at_y);
                CHECK(at_y <= t.eval(z + 1, Rational(1)));
            }
        }
    }
}

TEST_CASE("forest polynomial") {
    CHECK(forest_polynomial(complete_graph(3)) ==
          IntPoly(std::vector<Int>{Int(0), Int(3), Int(3), Int(1)}));
    CHECK(forest_polynomial(edgeless_graph(4)) == IntPoly::monomial(4, Int(1)));
    CHECK(forest_polynomial(complete_graph(2)) ==
          IntPoly(std::vector<Int>{Int(0), Int(1), Int(1)}));
    // coefficientwise equal to direct forest enumeration
    for (const auto& g : small_corpus())
        CHECK(forest_polynomial(g) == forest_polynomial_enumerated(g));
}

TEST_CASE("random cluster model") {
    // Z_K2(q,w) = q^2 + q w
    Rational q(3, 2), w(5, 7);
    CHECK(random_cluster(complete_graph(2), q, w) == q * q + q * w);
    CHECK(random_cluster(complete_graph(3), Rational(2), Rational(1)) == 28);
    CHECK(random_cluster(edgeless_graph(3), q, w) == rational_pow(q, 3));

    // conversion to Tutte: T(x,y) = (x-1)^{-k} (y-1)^{-n} Z((x-1)(y-1), y-1)
    Rational x(3), y(2);
    Rational conv = rational_pow(x - 1, -1) * rational_pow(y - 1, -3) *
                    random_cluster(complete_graph(3), (x - 1) * (y - 1), y - 1);
    CHECK(conv == 14);
    CHECK(to_rational(tutte_polynomial(complete_graph(3)).polynomial).eval(x, y) == 14);
}

TEST_CASE("special evaluations") {
    SpecialEvaluations k3 = special_evaluations(complete_graph(3));
    CHECK(k3.spanning_trees == 3);
    CHECK(k3.spanning_forests == 7);
    CHECK(k3.acyclic_orientations == 6);

    SpecialEvaluations c4 = special_evaluations(cycle_graph(4));
    CHECK(c4.spanning_trees == 4);
    CHECK(c4.spanning_forests == 15);
    CHECK(c4.acyclic_orientations == 14);

    // any tree: tau = 1, F = sum_k C(n-1,k) = 2^{n-1}, a = 2^{n-1}
    SpecialEvaluations p5 = special_evaluations(path_graph(5));
    CHECK(p5.spanning_trees == 1);
    CHECK(p5.spanning_forests == 16);
    CHECK(p5.acyclic_orientations == 16);

    for (const auto& g : {complete_graph(4), cycle_graph(5)}) {
        SpecialEvaluations s = special_evaluations(g);
        CHECK(s.spanning_trees == test_oracles::count_spanning_trees_enum(g));
        CHECK(s.acyclic_orientations == test_oracles::count_acyclic_orientations(g));
    }
}

TEST_CASE("Kirchhoff spanning tree count") {
    CHECK(spanning_trees_kirchhoff(complete_graph(4)) == 16);
    CHECK(spanning_trees_kirchhoff(cycle_graph(5)) == 5);
    CHECK(spanning_trees_kirchhoff(petersen_graph()) == 2000);
    CHECK(spanning_trees_kirchhoff(disjoint_union(cycle_graph(3), cycle_graph(3))) == 0);
    for (const auto& g : small_corpus()) {
        if (!g.is_connected()) continue;
        CHECK(spanning_trees_kirchhoff(g) == tutte_polynomial(g).polynomial.eval(Int(1), Int(1)));
    }
}

TEST_CASE("chromatic polynomial") {
    CHECK(chromatic_polynomial(complete_graph(3), Rational(3)) == 6);
    CHECK(chromatic_polynomial(complete_graph(3), Rational(2)) == 0);
    CHECK(chromatic_polynomial(cycle_graph(4), Rational(2)) == 2);
    for (const auto& g : {complete_graph(4), cycle_graph(5), path_graph(4), star_graph(3)}) {
        for (int q = 1; q <= 4; ++q)
            CHECK(chromatic_polynomial(g, Rational(q)) ==
                  Rational(test_oracles::count_proper_colorings(g, q)));
    }
    Multigraph cc = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK(chromatic_polynomial(cc, Rational(3)) == 36);
}

TEST_CASE("broken cycle free counts") {
    Multigraph k3 = complete_graph(3);
    BrokenCycleCounts c = broken_cycle_free_counts(k3, identity_ordering(k3));
    CHECK(c.c == std::vector<Int>{Int(1), Int(3), Int(2), Int(0)});

    Multigraph c4g = cycle_graph(4);
    BrokenCycleCounts c4 = broken_cycle_free_counts(c4g, identity_ordering(c4g));
    CHECK(c4.c == std::vector<Int>{Int(1), Int(4), Int(6), Int(3), Int(0)});

    // trees: c_k = f_k = C(m, k)
    Multigraph p4 = path_graph(4);
    BrokenCycleCounts ct = broken_cycle_free_counts(p4, identity_ordering(p4));
    CHECK(ct.c == std::vector<Int>{Int(1), Int(3), Int(3), Int(1)});

    Multigraph cc = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK_THROWS_AS(broken_cycle_free_counts(cc, identity_ordering(cc)), std::invalid_argument);
}

TEST_CASE("broken cycle counts are ordering independent and match z^k T(z+1,0)") {
    Rng rng(2024);
    for (const auto& g :
         {complete_graph(4), cycle_graph(5), petersen_graph(), random_regular(8, 3, 5)}) {
        IntBiPoly t = tutte_polynomial(g).polynomial;
        IntPoly expect = compose_shift(t.at_y(Int(0)), Int(1)).shifted(1);  // k(G) = 1
        BrokenCycleCounts base = broken_cycle_free_counts(g, identity_ordering(g));
        IntPoly got;
        for (size_t k = 0; k < base.c.size(); ++k)
            if (base.c[k] != 0) got += IntPoly::monomial(static_cast<size_t>(g.n()) - k, base.c[k]);
        CHECK(got == expect);
        for (int t2 = 0; t2 < 10; ++t2) {
            EdgeOrdering ord = identity_ordering(g);
            rng.shuffle(ord.order);
            CHECK(broken_cycle_free_counts(g, ord).c == base.c);
        }
    }
}

TEST_CASE("broken cycle count bounds") {
    Multigraph g = petersen_graph();
    BrokenCycleCounts c = broken_cycle_free_counts(g, identity_ordering(g));
    CHECK(c.c[0] == 1);
    CHECK(c.c[1] == g.m());
    Int binom = 1;
    for (size_t k = 1; k < c.c.size(); ++k) {
        binom = binom * Int(g.m() - static_cast<int>(k) + 1) / Int(static_cast<int>(k));
        CHECK(c.c[k] <= binom);
    }
    // nothing broken-cycle-free at or beyond vertex count
    for (size_t k = static_cast<size_t>(g.n()); k < c.c.size(); ++k) CHECK(c.c[k] == 0);
}

TEST_CASE("node count is reported") {
    TutteResult r = tutte_polynomial(petersen_graph());
    CHECK(r.node_count > 0);
}
