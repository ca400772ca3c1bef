#include "doctest.h"

#include <random>
#include <set>

#include "reference.hpp"
#include "sigwedge/exterior.hpp"
#include "sigwedge/families.hpp"

using namespace sigwedge;

namespace {

std::uint64_t id(std::initializer_list<Vertex> s, std::size_t n) { return rank(KSubset(s), n); }

}  // namespace

TEST_CASE("connecting permutation examples") {
    // a=0, b=1, c=2
    auto shared_prefix = connecting_permutation(KSubset({0, 1}), KSubset({0, 2}));
    REQUIRE(shared_prefix);
    CHECK(shared_prefix->permutation.is_identity());
    CHECK(shared_prefix->from == 1);
    CHECK(shared_prefix->to == 2);

    auto swapped = connecting_permutation(KSubset({0, 1}), KSubset({1, 2}));
    REQUIRE(swapped);
    CHECK(swapped->permutation == Permutation::transposition(2, 0, 1));
    CHECK(swapped->permutation.sign() == Sign::Negative);
    CHECK(swapped->from == 0);
    CHECK(swapped->to == 2);

    auto c = connecting_permutation(KSubset({0, 1}), KSubset({1, 3}));
    REQUIRE(c);
    CHECK(c->permutation.sign() == Sign::Negative);
    CHECK(c->position == 1);

    CHECK_FALSE(connecting_permutation(KSubset({0, 1}), KSubset({2, 3})).has_value());
    CHECK_FALSE(connecting_permutation(KSubset({0, 1}), KSubset({0, 1})).has_value());
    CHECK_THROWS_AS(connecting_permutation(KSubset({0, 1}), KSubset({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("connecting permutation matches brute force over S_k for k <= 5") {
    std::mt19937_64 rng(5);
    for (std::size_t k = 1; k <= 5; ++k) {
        const std::size_t n = k + 3;
        const auto subs = all_subsets(n, k);
        for (int trial = 0; trial < 400; ++trial) {
            const KSubset& u = subs[rng() % subs.size()];
            const KSubset& v = subs[rng() % subs.size()];
            const std::vector<Vertex> uv(u.elems().begin(), u.elems().end());
            const std::vector<Vertex> vv(v.elems().begin(), v.elems().end());
            const auto expected = ref::connect(uv, vv);
            const auto got = connecting_permutation(u, v);
            REQUIRE(got.has_value() == expected.has_value());
            if (!got) continue;
            REQUIRE(std::vector<std::size_t>(got->permutation.images().begin(), got->permutation.images().end()) ==
                    expected->pi);
            REQUIRE(got->from == expected->a);
            REQUIRE(got->to == expected->b);
            const std::size_t p = *u.position_of(got->from);
            const std::size_t q = *v.position_of(got->to);
            REQUIRE(to_int(got->permutation.sign()) == ((p + q) % 2 == 0 ? 1 : -1));
            // Reversing the edge inverts the permutation and keeps the sign.
            auto back = connecting_permutation(v, u);
            REQUIRE(back);
            REQUIRE(back->permutation == got->permutation.inverse());
        }
    }
}

TEST_CASE("wedge of the claw is a negative hexagon") {
    const ExteriorPower w = wedge_power(star_graph(3), 2);
    REQUIRE(w.graph.order() == 6);
    REQUIRE(w.graph.size() == 6);
    const std::vector<std::uint64_t> cycle{id({0, 1}, 4), id({1, 2}, 4), id({0, 2}, 4),
                                           id({2, 3}, 4), id({0, 3}, 4), id({1, 3}, 4)};
    const std::vector<Sign> expected{Sign::Negative, Sign::Positive, Sign::Negative,
                                     Sign::Positive, Sign::Positive, Sign::Negative};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(w.graph.sign(cycle[i], cycle[(i + 1) % 6]) == expected[i]);
    }
    CHECK(sign_of_cycle(w.graph, cycle) == Sign::Negative);
    CHECK_FALSE(is_balanced(w.graph).balanced);
}

TEST_CASE("wedge square of C4 is K_{2,4} with two negative edges") {
    // Edges (0,1), (1,2), (2,3), (0,3): the cycle 0-1-2-3-0.
    const ExteriorPower w = wedge_power(cycle_graph(4), 2);
    const std::uint64_t c02 = id({0, 2}, 4);
    const std::uint64_t c13 = id({1, 3}, 4);
    REQUIRE(w.graph.order() == 6);
    REQUIRE(w.graph.size() == 8);
    for (std::uint64_t v = 0; v < 6; ++v) {
        if (v == c02 || v == c13) {
            CHECK(w.graph.degree(v) == 4);
        } else {
            CHECK(w.graph.degree(v) == 2);
            CHECK(w.graph.adjacent(v, c02));
            CHECK(w.graph.adjacent(v, c13));
        }
    }
    CHECK_FALSE(w.graph.adjacent(c02, c13));
    std::set<std::pair<std::uint64_t, std::uint64_t>> negative;
    for (const auto& e : w.graph.edges()) {
        if (e.sign == Sign::Negative) negative.insert({e.u, e.v});
    }
    const std::set<std::pair<std::uint64_t, std::uint64_t>> expected{{id({0, 1}, 4), c13}, {c02, id({2, 3}, 4)}};
    CHECK(negative == expected);
    CHECK_FALSE(is_balanced(w.graph).balanced);
}

TEST_CASE("first exterior power is the graph itself") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const SignedGraph g = random_signed_graph(2 + rng() % 6, 0.5, rng());
        CHECK(wedge_power(g, 1).graph == g);
    }
}

TEST_CASE("k out of range") {
    CHECK_THROWS_AS(wedge_power(cycle_graph(4), 0), std::out_of_range);
    CHECK_THROWS_AS(wedge_power(cycle_graph(4), 4), std::out_of_range);
}

TEST_CASE("wedge_power matches the brute-force definition") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const SignedGraph g = random_signed_graph(n, 0.6, rng());
        for (std::size_t k = 1; k < n; ++k) {
            const ExteriorPower w = wedge_power(g, k);
            REQUIRE(w.graph == ref::wedge_graph(g, k));
            REQUIRE(w.edges.size() == w.graph.size());
            std::uint64_t expected_edges = 0;
            for (const auto& e : g.edges()) {
                (void)e;
                expected_edges += binomial(n - 2, k - 1);
            }
            REQUIRE(w.graph.size() == expected_edges);
            for (std::size_t i = 0; i < w.edges.size(); ++i) {
                const WedgeEdge& e = w.edges[i];
                REQUIRE(e.u < e.v);
                REQUIRE(w.graph.edges()[i].u == e.u);
                REQUIRE(w.graph.edges()[i].v == e.v);
                REQUIRE(e.sign == e.permutation.sign() * *g.sign(e.from, e.to));
            }
        }
    }
}

TEST_CASE("degree formula") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const SignedGraph g = random_signed_graph(n, 0.5, rng());
        for (std::size_t k = 1; k < n; ++k) {
            const ExteriorPower w = wedge_power(g, k);
            for (std::uint64_t r = 0; r < w.subsets.size(); ++r) {
                std::size_t expected = 0;
                for (const auto& e : g.edges()) expected += w.subsets[r].contains(e.u) != w.subsets[r].contains(e.v);
                REQUIRE(w.graph.degree(r) == expected);
            }
        }
    }
}

TEST_CASE("mutated sign rules differ from the standard rule") {
    const SignedGraph claw = star_graph(3);
    CHECK(is_balanced(wedge_power(claw, 2, WedgeSignRule::DroppedPermutationSign).graph).balanced);
    CHECK(wedge_power(claw, 2, WedgeSignRule::NegatedPermutationSign).graph ==
          negate(wedge_power(claw, 2).graph));
}

TEST_CASE("mirror map") {
    CHECK(mirror_map(KSubset({0, 1}), 4) == KSubset({2, 3}));
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            for (const auto& u : all_subsets(n, k)) {
                const KSubset m = mirror_map(u, n);
                REQUIRE(m.size() == n - k);
                REQUIRE(mirror_map(m, n) == u);
            }
        }
    }
    CHECK_THROWS_AS(mirror_map(KSubset({0, 1, 2}), 3), std::invalid_argument);
}

TEST_CASE("complement map carries wedge^k P4 onto wedge^(4-k) P4") {
    const SignedGraph p4 = path_graph(4);
    for (std::size_t k : {1, 2}) {
        const ExteriorPower lo = wedge_power(p4, k);
        const SignedGraph hi = wedge_power(p4, 4 - k).graph;
        std::vector<Vertex> map;
        for (const auto& s : lo.subsets) map.push_back(rank(mirror_map(s, 4), 4));
        CHECK(edge_sets_equal_under_map(lo.graph, hi, map));
    }
}

TEST_CASE("lifted switching commutes with the wedge") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const SignedGraph g = random_signed_graph(n, 0.6, rng());
        std::vector<Sign> dv;
        for (std::size_t i = 0; i < n; ++i) dv.push_back(rng() & 1 ? Sign::Negative : Sign::Positive);
        const SwitchingVector d(dv);
        for (std::size_t k = 1; k < n; ++k) {
            const SwitchingVector lifted = lift_switching(d, k);
            REQUIRE(lifted.size() == binomial(n, k));
            REQUIRE(wedge_power(switch_graph(g, d), k).graph == switch_graph(wedge_power(g, k).graph, lifted));
        }
    }
}
