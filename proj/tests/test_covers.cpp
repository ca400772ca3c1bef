#include "doctest.h"

#include <random>

#include "sigwedge/covers.hpp"
#include "sigwedge/families.hpp"

using namespace sigwedge;

namespace {

bool is_k_cycle(const Permutation& p) {
    std::size_t length = 0;
    std::size_t j = 0;
    do {
        j = p(j);
        ++length;
    } while (j != 0);
    return length == p.size();
}

/// Counts cover edges that (u, pi) -> pi(u) fails to send onto an edge, for a
/// cover built with the sheet rule b = next(a, gain).
template <typename NextSheet>
std::size_t broken_edges(const SignedGraph& g, std::size_t k, NextSheet next) {
    const GainGraph phi = gain_graph(g, k);
    const DeletedPower deleted = diagonal_deleted_power(g, k);
    std::size_t broken = 0;
    for (const auto& e : phi.edges) {
        for (const auto& a : all_permutations(k)) {
            const Permutation b = next(a, e.gain);
            const auto s = deleted.index_of(a.apply(phi.vertices[e.u].elems()));
            const auto t = deleted.index_of(b.apply(phi.vertices[e.v].elems()));
            broken += !deleted.graph.adjacent(s, t);
        }
    }
    return broken;
}

}  // namespace

TEST_CASE("gains of paths and first powers are trivial") {
    const GainGraph k1 = gain_graph(complete_graph(4), 1);
    for (const auto& e : k1.edges) CHECK(e.gain == Permutation::identity(1));
    for (std::size_t n = 3; n <= 6; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            for (const auto& e : gain_graph(path_graph(n), k).edges) REQUIRE(e.gain.is_identity());
        }
    }
}

TEST_CASE("gains of cycles are k-cycles exactly on the wrap edges") {
    for (std::size_t n = 3; n <= 7; ++n) {
        for (std::size_t k = 2; k < n; ++k) {
            const GainGraph phi = gain_graph(cycle_graph(n), k);
            for (const auto& e : phi.edges) {
                const auto& u = phi.vertices[e.u];
                const auto& v = phi.vertices[e.v];
                const bool wrap = (u.contains(0) != v.contains(0)) && (u.contains(n - 1) != v.contains(n - 1));
                if (wrap) {
                    REQUIRE(is_k_cycle(e.gain));
                } else {
                    REQUIRE(e.gain.is_identity());
                }
            }
        }
    }
}

TEST_CASE("reverse orientation carries the inverse gain") {
    const GainGraph phi = gain_graph(complete_graph(5), 3);
    for (const auto& e : phi.edges) {
        CHECK(phi.gain(e.u, e.v) == e.gain);
        CHECK(phi.gain(e.v, e.u) == e.gain.inverse());
    }
    CHECK_THROWS_AS(phi.gain(0, 0), std::out_of_range);
}

TEST_CASE("cover examples") {
    // Identity gains: k! disjoint copies.
    const CoverGraph p3 = build_cover(gain_graph(path_graph(3), 2));
    CHECK(p3.graph.order() == 6);
    CHECK(p3.graph.size() == 4);
    CHECK_FALSE(is_connected(p3.graph));
    for (std::size_t sheet = 0; sheet < 2; ++sheet) {
        CHECK(p3.graph.adjacent(0 * 2 + sheet, 1 * 2 + sheet));
        CHECK(p3.graph.adjacent(1 * 2 + sheet, 2 * 2 + sheet));
    }

    const CoverGraph p4 = build_cover(gain_graph(path_graph(4), 3));
    CHECK(p4.graph.size() == gain_graph(path_graph(4), 3).edges.size() * 6);

    // The one transposition gain unrolls the triangle into a hexagon.
    const CoverGraph c3 = build_cover(gain_graph(cycle_graph(3), 2));
    CHECK(c3.graph.order() == 6);
    CHECK(c3.graph.size() == 6);
    CHECK(is_connected(c3.graph));
    CHECK(is_cycle_graph(c3.graph));
}

TEST_CASE("covering projection") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng() % 3;
        const SignedGraph g = random_signed_graph(n, 0.6, rng());
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, n - 1); ++k) {
            const GainGraph phi = gain_graph(g, k);
            const CoverGraph cover = build_cover(phi);
            REQUIRE(cover.graph.order() == phi.vertices.size() * factorial(k));
            for (const auto& e : cover.graph.edges()) {
                REQUIRE(phi.base.adjacent(cover.base_of(e.u), cover.base_of(e.v)));
            }
            // Every cover vertex sees exactly one lift of each base edge.
            for (std::size_t v = 0; v < cover.graph.order(); ++v) {
                REQUIRE(cover.graph.degree(v) == phi.base.degree(cover.base_of(v)));
            }
            REQUIRE(cover.graph.size() == diagonal_deleted_power(g, k).graph.size());
        }
    }
}

TEST_CASE("diagonal deleted power") {
    const SignedGraph g = random_signed_graph(5, 0.5, 43);
    const DeletedPower one = diagonal_deleted_power(g, 1);
    CHECK(one.graph == g);

    CHECK(diagonal_deleted_power(complete_graph(4), 2).graph.order() == 12);
    const DeletedPower p3 = diagonal_deleted_power(path_graph(3), 2);
    CHECK(p3.graph.order() == 6);
    CHECK(p3.index_of({2, 0}) == 4);
    CHECK_THROWS_AS(p3.index_of({1, 1}), std::out_of_range);
    CHECK_THROWS_AS(diagonal_deleted_power(path_graph(3), 4), std::out_of_range);
}

TEST_CASE("the map (u, pi) -> pi(u) is an isomorphism") {
    CHECK(verify_cover_isomorphism(path_graph(3), 2));
    CHECK(verify_cover_isomorphism(path_graph(4), 2));

    const auto c5 = check_cover_isomorphism(cycle_graph(5), 2);
    CHECK(c5.isomorphic());
    CHECK(c5.double_cover);

    const auto k4 = check_cover_isomorphism(complete_graph(4), 3);
    CHECK(k4.isomorphic());
    CHECK(k4.cover_vertices == 24);
    CHECK(k4.deleted_vertices == 24);
    CHECK_FALSE(k4.double_cover);

    for (std::size_t n = 2; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            for (std::size_t k = 1; k <= std::min<std::size_t>(3, n - 1); ++k) {
                REQUIRE(verify_cover_isomorphism(g, k));
            }
        }
    }
}

TEST_CASE("sheet rule: composing the gain on the right fails once S_k is non-abelian") {
    auto left = [](const Permutation& a, const Permutation& gain) { return compose(gain.inverse(), a); };
    auto right = [](const Permutation& a, const Permutation& gain) { return compose(a, gain); };
    const SignedGraph k4 = complete_graph(4);
    CHECK(broken_edges(k4, 2, left) == 0);
    CHECK(broken_edges(k4, 2, right) == 0);  // S_2 is abelian and gains are involutions
    CHECK(broken_edges(k4, 3, left) == 0);
    CHECK(broken_edges(k4, 3, right) > 0);
}

TEST_CASE("k = 2 sheet crossings match the signs of the exterior square") {
    for (std::size_t n = 3; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            const ExteriorPower w = wedge_power(g, 2);
            const CoverGraph cover = build_cover(gain_graph(g, 2));
            for (const auto& e : w.graph.edges()) {
                const std::size_t from = cover.id(e.u, Permutation::identity(2));
                const bool stays = cover.graph.adjacent(from, cover.id(e.v, Permutation::identity(2)));
                REQUIRE(stays == (e.sign == Sign::Positive));
            }
        }
    }
}
