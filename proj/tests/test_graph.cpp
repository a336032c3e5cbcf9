#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "sgspec/canonical.hpp"
#include "sgspec/families.hpp"
#include "sgspec/graph.hpp"

using namespace sgspec;

namespace {

SignedGraph G(int n, std::vector<SignedEdge> edges) {
    return SignedGraph::from_edge_list(n, std::move(edges));
}

SignedGraph c4_minus() { return G(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, -1}}); }

SignedGraph random_graph(std::mt19937& rng, int n, double p, double neg) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.push_back({u, v, coin(rng) < neg ? -1 : 1});
    return G(n, std::move(edges));
}

std::vector<int> random_subset(std::mt19937& rng, int n) {
    std::vector<int> X;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) X.push_back(v);
    return X;
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("from_edge_list validates and normalizes") {
    SignedGraph p2 = G(2, {{1, 0, 1}});
    CHECK(p2.edges()[0].u == 0);
    CHECK(p2.edges()[0].v == 1);

    SignedGraph c4 = c4_minus();
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);

    CHECK_THROWS_AS(G(3, {{0, 0, 1}}), std::invalid_argument);                 // loop
    CHECK_THROWS_AS(G(3, {{0, 1, 1}, {0, 1, -1}}), std::invalid_argument);     // dup pair
    CHECK_THROWS_AS(G(3, {{1, 0, 1}, {0, 1, -1}}), std::invalid_argument);     // dup after swap
    CHECK_THROWS_AS(G(2, {{0, 2, 1}}), std::invalid_argument);                 // range
    CHECK_THROWS_AS(G(2, {{0, 1, 2}}), std::invalid_argument);                 // sign
}

TEST_CASE("switch flips exactly the cut edges") {
    SignedGraph p2 = G(2, {{0, 1, 1}});
    CHECK(switched(p2, {0}) == G(2, {{0, 1, -1}}));
    CHECK(switched(p2, {}) == p2);

    // frozen by direct application of the rule to C_4^-
    SignedGraph c4s = switched(c4_minus(), {0});
    CHECK(c4s == G(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}));
    // cycle sign preserved
    auto fc = fundamental_cycle_signs(c4s);
    REQUIRE(fc.size() == 1);
    CHECK(fc[0].second == -1);

    CHECK_THROWS_AS(switched(p2, {5}), std::invalid_argument);
}

TEST_CASE("switching involution and trivial switch sets") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        SignedGraph g = random_graph(rng, 2 + trial % 7, 0.5, 0.4);
        auto X = random_subset(rng, g.order());
        CHECK(switched(switched(g, X), X) == g);
        std::vector<int> all(g.order());
        for (int i = 0; i < g.order(); ++i) all[i] = i;
        CHECK(switched(g, all) == g);
        CHECK(switched(g, {}) == g);
    }
}

TEST_CASE("fundamental cycle signs") {
    CHECK(fundamental_cycle_signs(make({FamilyKind::Path, 5, 0})).empty());

    auto fc = fundamental_cycle_signs(c4_minus());
    REQUIRE(fc.size() == 1);
    CHECK(fc[0].second == -1);

    auto fc6 = fundamental_cycle_signs(make({FamilyKind::BalancedCycle, 6, 0}));
    REQUIRE(fc6.size() == 1);
    CHECK(fc6[0].second == 1);
}

TEST_CASE("cycle signs invariant under switching") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        SignedGraph g = random_graph(rng, 3 + trial % 6, 0.6, 0.5);
        auto base = fundamental_cycle_signs(g);
        auto after = fundamental_cycle_signs(switched(g, random_subset(rng, g.order())));
        REQUIRE(base.size() == after.size());
        for (size_t i = 0; i < base.size(); ++i) {
            CHECK(base[i].first.u == after[i].first.u);
            CHECK(base[i].first.v == after[i].first.v);
            CHECK(base[i].second == after[i].second);
        }
        // equivariance under relabeling: the balanced/unbalanced split of the
        // cycle space is preserved
        auto perm = random_perm(rng, g.order());
        auto relab = fundamental_cycle_signs(relabeled(g, perm));
        CHECK(base.size() == relab.size());
        int neg_a = 0, neg_b = 0;
        for (const auto& [e, s] : base) neg_a += s < 0;
        for (const auto& [e, s] : relab) neg_b += s < 0;
        CHECK((neg_a == 0) == (neg_b == 0));
    }
}

TEST_CASE("forest_normalize") {
    std::mt19937 rng(29);
    // signed trees normalize to the all-positive tree
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 8;
        std::vector<SignedEdge> edges;
        std::uniform_int_distribution<int> pick(0, 100);
        for (int v = 1; v < n; ++v)
            edges.push_back({pick(rng) % v, v, pick(rng) % 2 ? 1 : -1});
        SignedGraph tree = G(n, std::move(edges));
        SignedGraph norm = forest_normalized(tree);
        for (const auto& e : norm.edges()) CHECK(e.sign == 1);
        CHECK(norm == forest_normalized(norm));  // idempotent
    }

    // any odd placement of negative signs on C_4 normalizes to one negative co-tree edge
    for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) % 2 == 0) continue;
        std::vector<SignedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) edges[b].sign = -1;
        SignedGraph norm = forest_normalized(G(4, std::move(edges)));
        int neg = 0;
        for (const auto& e : norm.edges()) neg += e.sign < 0;
        CHECK(neg == 1);
        CHECK(norm == forest_normalized(norm));
    }
}

TEST_CASE("forest_normalize is switching-equivalent to the input") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        SignedGraph g = random_graph(rng, 3 + trial % 6, 0.5, 0.5);
        auto w = are_switching_isomorphic(g, forest_normalized(g));
        REQUIRE(w.has_value());
    }
}

TEST_CASE("disjoint_union and components") {
    SignedGraph p2 = G(2, {{0, 1, 1}});
    SignedGraph p1 = G(1, {});
    SignedGraph u = disjoint_union({p2, p1});
    CHECK(u.order() == 3);
    CHECK(u.size() == 1);

    CHECK(disjoint_union({}).order() == 0);

    // mate of P_7 per the odd-order family: H_2 plus an isolated vertex
    SignedGraph mate = disjoint_union({make({FamilyKind::H, 2, 0}), p1});
    CHECK(mate.order() == 7);
    CHECK(mate.size() == 6);

    auto comps = components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].order() == 1);
    CHECK(comps[1].order() == 2);

    CHECK(components(G(0, {})).empty());
    auto p5 = make({FamilyKind::Path, 5, 0});
    REQUIRE(components(p5).size() == 1);
    CHECK(components(p5)[0] == p5);

    // round trip up to switching isomorphism
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        SignedGraph a = random_graph(rng, 2 + trial % 4, 0.6, 0.4);
        SignedGraph b = random_graph(rng, 1 + trial % 3, 0.6, 0.4);
        SignedGraph joined = disjoint_union({a, b});
        auto back = disjoint_union(components(joined));
        CHECK(are_switching_isomorphic(joined, back).has_value());
    }
}

TEST_CASE("structural filter reasons") {
    // odd cycle: any signed triangle
    for (int s : {1, -1}) {
        auto v = structural_filter(G(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, s}}));
        CHECK(!v.pass);
        CHECK(v.reason == FilterReason::odd_cycle);
    }

    // star K_{1,4}
    auto v = structural_filter(make({FamilyKind::Star, 4, 0}));
    CHECK(!v.pass);
    CHECK(v.reason == FilterReason::degree_gt3);

    // C_8^- with a pendant vertex
    {
        auto c8 = make({FamilyKind::UnbalancedCycle, 8, 0});
        auto edges = c8.edges();
        edges.push_back({0, 8, 1});
        auto verdict = structural_filter(G(9, std::move(edges)));
        CHECK(!verdict.pass);
        CHECK(verdict.reason == FilterReason::long_induced_unbalanced_cycle);
    }

    // balanced even cycle
    {
        auto verdict = structural_filter(make({FamilyKind::BalancedCycle, 6, 0}));
        CHECK(!verdict.pass);
        CHECK(verdict.reason == FilterReason::balanced_cycle);
    }

    // qualifying graphs pass
    CHECK(structural_filter(make({FamilyKind::Path, 9, 0})).pass);
    CHECK(structural_filter(c4_minus()).pass);
    CHECK(structural_filter(make({FamilyKind::H, 3, 0})).pass);
    CHECK(structural_filter(make({FamilyKind::UnbalancedCycle, 6, 0})).pass);
}

TEST_CASE("simple cycle enumeration sees every cycle of a theta graph") {
    // two hubs joined by three paths of 2 edges each; 3 simple cycles
    SignedGraph theta =
        G(5, {{0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}, {0, 4, 1}, {1, 4, -1}});
    int count = 0, balanced = 0;
    for_each_simple_cycle(theta, [&](const std::vector<int>& cyc, int sign, bool chordless) {
        ++count;
        if (sign > 0) ++balanced;
        CHECK(cyc.size() == 4);
        CHECK(chordless);
    });
    CHECK(count == 3);
    CHECK(balanced == 1);  // an even number of the three theta cycles is unbalanced

    auto verdict = structural_filter(theta);
    CHECK(!verdict.pass);
    CHECK(verdict.reason == FilterReason::balanced_cycle);
}
