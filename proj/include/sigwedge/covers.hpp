#pragma once

// The exterior power as a gain graph over S_k, its |S_k|-cover, and the
// Cartesian power with repeated-entry tuples deleted.
//
// Gains live on the orientation u -> v with rank(u) < rank(v); the reverse
// orientation carries the inverse. The cover realizes
//   A(C) = sum_g A(G^g) (x) P_g,   P_g[a, b] = [a = g o b],
// so (u, a) is adjacent to (v, b) exactly when a = gain(u->v) o b. Under this
// convention (u, pi) -> pi(u) is an isomorphism onto the deleted power.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "sigwedge/combinat.hpp"
#include "sigwedge/exterior.hpp"
#include "sigwedge/signed_graph.hpp"

namespace sigwedge {

struct GainEdge {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    Permutation gain;  ///< on u -> v
};

struct GainGraph {
    std::size_t k = 0;
    std::vector<KSubset> vertices;
    SignedGraph base;  ///< |wedge^k G|, all edges positive
    std::vector<GainEdge> edges;  ///< parallel to base.edges()

    /// Gain on the orientation from -> to; throws std::out_of_range if not an edge.
    Permutation gain(std::uint64_t from, std::uint64_t to) const;
};

struct CoverGraph {
    std::size_t k = 0;
    std::size_t base_vertices = 0;
    std::vector<Permutation> group;  ///< S_k in lexicographic order
    SignedGraph graph;               ///< vertex id = base * k! + rank(perm)

    std::size_t id(std::uint64_t base, const Permutation& p) const;
    std::uint64_t base_of(std::size_t id) const { return id / group.size(); }
    const Permutation& sheet_of(std::size_t id) const { return group[id % group.size()]; }
};

struct DeletedPower {
    std::size_t k = 0;
    std::vector<std::vector<Vertex>> tuples;  ///< repeated-free, lexicographic
    SignedGraph graph;                        ///< signs inherited from the base edge

    /// Index of a repeated-free tuple; throws std::out_of_range otherwise.
    std::size_t index_of(const std::vector<Vertex>& tuple) const;

  private:
    friend DeletedPower diagonal_deleted_power(const SignedGraph&, std::size_t);
    std::map<std::vector<Vertex>, std::size_t> index_;
};

GainGraph gain_graph(const SignedGraph& g, std::size_t k);
CoverGraph build_cover(const GainGraph& phi);
/// G^k restricted to the n!/(n-k)! tuples with distinct entries. Requires 1 <= k <= n.
DeletedPower diagonal_deleted_power(const SignedGraph& g, std::size_t k);

struct CoverIsomorphismReport {
    std::size_t cover_vertices = 0;
    std::size_t cover_edges = 0;
    std::size_t deleted_vertices = 0;
    std::size_t deleted_edges = 0;
    bool bijective = false;
    bool edges_preserved = false;
    bool double_cover = false;  ///< k == 2

    bool isomorphic() const {
        return bijective && edges_preserved && cover_edges == deleted_edges;
    }
};

/// Checks that (u, pi) -> pi(u) maps build_cover(gain_graph(g, k)) bijectively
/// and edge-preservingly onto diagonal_deleted_power(g, k), and that the edge
/// counts agree (so non-edges are preserved too).
CoverIsomorphismReport check_cover_isomorphism(const SignedGraph& g, std::size_t k);
bool verify_cover_isomorphism(const SignedGraph& g, std::size_t k);

}  // namespace sigwedge
