#include <graphpoly/experiments.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace graphpoly;

TEST_CASE("comparison bound report: C3 hand values") {
    // (C3, z=1, g=3): L=0, n/g=1, dbar=2 -> ((1+6)^-1 * 9, 7, 9)
    ComparisonReport r = comparison_bound_report(cycle_graph(3), Rational(1), 3);
    CHECK(r.cycle_count == 0);
    REQUIRE(r.lower_bound_exact.has_value());
    CHECK(*r.lower_bound_exact == Rational(9, 7));
    CHECK(r.forest_value == 7);
    CHECK(r.pseudo_value == 9);
    CHECK(r.lower_ok);
    CHECK(r.upper_ok);
}

TEST_CASE("comparison bound: forests are tight above") {
    for (const auto& g : {path_graph(4), star_graph(3)}) {
        for (Rational z : {Rational(1), Rational(1, 2), Rational(3)}) {
            ComparisonReport r = comparison_bound_report(g, z, 3);
            CHECK(r.forest_value == r.pseudo_value);  // F = R on forests
            CHECK(r.lower_ok);
            CHECK(r.upper_ok);
        }
    }
}

TEST_CASE("comparison bound on petersen and random cubic graphs") {
    ComparisonReport p = comparison_bound_report(petersen_graph(), Rational(1), 5);
    CHECK(p.lower_ok);
    CHECK(p.upper_ok);
    CHECK(p.forest_value < p.pseudo_value);  // strictly positive slack
    CHECK(p.cycle_count == 0);               // girth 5: no cycles shorter than 5

    ComparisonReport p6 = comparison_bound_report(petersen_graph(), Rational(1), 6);
    CHECK(p6.cycle_count == 12);             // the 5-cycles now count
    CHECK(p6.lower_ok);
    CHECK(p6.upper_ok);

    for (uint64_t seed = 0; seed < 10; ++seed) {
        Multigraph g = random_regular(10, 3, seed);
        ComparisonReport r = comparison_bound_report(g, Rational(2), girth(g));
        CHECK(r.lower_ok);
        CHECK(r.upper_ok);
    }
    CHECK_THROWS_AS(comparison_bound_report(cycle_graph(3), Rational(0), 3), std::invalid_argument);
}

TEST_CASE("FKG bound: K3 tight case") {
    Multigraph k3 = complete_graph(3);
    FkgReport r = fkg_bound_report(k3, identity_ordering(k3), 3);
    CHECK(r.cycle_count == 0);
    REQUIRE(r.entries.size() == 3);  // k = 0..2
    CHECK(r.all_ok);
    // k=2: c_2 = 2 = (2/3)^0 (2/3)^1 * 3, exactly tight
    CHECK(r.entries[2].f_k == 3);
    CHECK(r.entries[2].c_k == 2);
    CHECK(r.entries[2].bound == Rational(2));
    CHECK(r.entries[2].tight);
}

TEST_CASE("FKG bound: C4 tight case") {
    Multigraph c4 = cycle_graph(4);
    FkgReport r = fkg_bound_report(c4, identity_ordering(c4), 4);
    REQUIRE(r.entries.size() == 4);  // k = 0..3
    CHECK(r.all_ok);
    // k=3: c_3 = 3 = (3/4) * 4, exactly tight
    CHECK(r.entries[3].f_k == 4);
    CHECK(r.entries[3].c_k == 3);
    CHECK(r.entries[3].bound == Rational(3));
    CHECK(r.entries[3].tight);
}

TEST_CASE("FKG bound: trees have factor <= 1 and c_k = f_k") {
    Multigraph t = star_graph(4);
    for (int g = 3; g <= 6; ++g) {
        FkgReport r = fkg_bound_report(t, identity_ordering(t), g);
        CHECK(r.all_ok);
        for (const auto& e : r.entries) {
            CHECK(e.c_k == e.f_k);
            CHECK(e.bound <= Rational(e.f_k));
        }
    }
    Multigraph cc = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK_THROWS_AS(fkg_bound_report(cc, identity_ordering(cc), 3), std::invalid_argument);
}

TEST_CASE("FKG bound holds on random cubic graphs") {
    Rng rng(31337);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Multigraph g = random_regular(10, 3, seed);
        EdgeOrdering ord = identity_ordering(g);
        rng.shuffle(ord.order);
        FkgReport r = fkg_bound_report(g, ord, girth(g));
        CHECK(r.all_ok);
    }
}

TEST_CASE("identity suite passes on the default corpus") {
    IdentityReport rep = identity_suite(default_corpus());
    CHECK(rep.all_pass());
    CHECK(rep.failures() == 0);
    // every identity ran on at least one graph
    int pass = 0, skip = 0;
    for (const auto& r : rep.results) {
        if (r.status == CheckStatus::Pass) ++pass;
        if (r.status == CheckStatus::Skip) ++skip;
    }
    CHECK(pass > 0);
    // whitney skips the disconnected graph, r-mu skips the irregular ones
    bool whitney_skip = false;
    for (const auto& r : rep.results)
        if (r.identity == "whitney" && r.graph == "C3+C3") whitney_skip = (r.status == CheckStatus::Skip);
    CHECK(whitney_skip);
}

TEST_CASE("a corrupted identity fails while others pass") {
    IdentitySuiteOptions opt;
    opt.tamper_identity = "pseudo-forest";
    IdentityReport rep = identity_suite(default_corpus(), opt);
    CHECK(!rep.all_pass());
    CHECK(rep.failures() == 1);
    for (const auto& r : rep.results)
        if (r.status == CheckStatus::Fail) CHECK(r.identity == "pseudo-forest");
}

TEST_CASE("empty corpus gives an empty passing report") {
    IdentityReport rep = identity_suite({});
    CHECK(rep.results.empty());
    CHECK(rep.all_pass());
}

TEST_CASE("convergence run records and aggregates") {
    ConvergenceParams p;
    p.d = 2;  // cycle graphs: exact closed form, fast
    p.x = Rational(3);
    p.y = Rational(1);
    p.sizes = {10, 20, 40};
    p.trials = 3;
    p.seed = 7;
    ConvergenceResult r = convergence_run(p);
    REQUIRE(r.records.size() == 9);
    REQUIRE(r.aggregates.size() == 3);
    // T_Cn(3,1) = (3^n-1)/2; root -> 3
    for (const auto& rec : r.records) {
        Rational expect = (rational_pow(Rational(3), rec.n) - 1) / 2;
        CHECK(rec.t_exact == expect);
        CHECK(rec.target == Catch::Approx(3.0));
    }
    // n=20 root ~ 2.897
    CHECK(r.records[3].root == Catch::Approx(2.897).margin(5e-3));
    // mean gap decreases with n
    CHECK(r.aggregates[2].mean_gap < r.aggregates[1].mean_gap);
    CHECK(r.aggregates[1].mean_gap < r.aggregates[0].mean_gap);
}

TEST_CASE("convergence run on random cubic graphs") {
    ConvergenceParams p;
    p.d = 3;
    p.x = Rational(2);
    p.y = Rational(1);
    p.sizes = {8};
    p.trials = 4;
    p.seed = 11;
    ConvergenceResult r = convergence_run(p);
    REQUIRE(r.records.size() == 4);
    for (const auto& rec : r.records) {
        CHECK(rec.girth_value >= 3);
        CHECK(rec.cycle_count == 0);  // L(G, girth) = 0 by definition
        CHECK(rec.root > 0);
        CHECK(rec.seed == (p.seed ^ static_cast<uint64_t>(rec.trial)));
    }
    // y = 0 run on the same seeds targets the same limit
    ConvergenceParams p0 = p;
    p0.y = Rational(0);
    ConvergenceResult r0 = convergence_run(p0);
    CHECK(r0.records[0].target == r.records[0].target);
    CHECK(r0.records[0].t_exact < r.records[0].t_exact);  // T(x,0) < T(x,1)
}

TEST_CASE("convergence guards") {
    ConvergenceParams p;
    p.d = 3;
    p.sizes = {9};
    CHECK_THROWS_AS(convergence_run(p), std::invalid_argument);  // odd n*d
    p.sizes = {40};
    CHECK_THROWS_AS(convergence_run(p), std::invalid_argument);  // 60 edges > guard
    p.sizes = {8};
    p.x = Rational(1, 2);
    CHECK_THROWS_AS(convergence_run(p), std::invalid_argument);  // x < 1
}

TEST_CASE("CSV output is deterministic and schema-stable") {
    ConvergenceParams p;
    p.d = 2;
    p.x = Rational(3);
    p.sizes = {8, 12};
    p.trials = 5;
    p.seed = 1;
    ConvergenceResult r1 = convergence_run(p);
    ConvergenceResult r2 = convergence_run(p);
    std::ostringstream a, b;
    write_convergence_csv(a, r1);
    write_convergence_csv(b, r2);
    CHECK(a.str() == b.str());

    std::istringstream in(a.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "d,n,trial,seed,girth,L,x,y,T_exact,root,target,gap");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 10 + 2);  // 10 trial rows + 2 aggregate rows
}
