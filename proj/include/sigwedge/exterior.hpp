#pragma once

// The combinatorial exterior k-th power of a signed graph.
//
// Vertices are the k-subsets of V in lexicographic rank order. Two subsets u
// and v are adjacent when u and v differ in exactly one element, u\v = {a},
// v\u = {b}, and (a,b) is an edge of the base graph. The connecting
// permutation pi satisfies u_{pi(j)} = v_j for every position j except the one
// holding b, and the wedge edge carries sign sgn(pi) * sigma(a,b).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sigwedge/combinat.hpp"
#include "sigwedge/signed_graph.hpp"

namespace sigwedge {

struct Connection {
    Permutation permutation;
    Vertex from = 0;           ///< the element of u \ v
    Vertex to = 0;             ///< the element of v \ u
    std::size_t position = 0;  ///< index i of `to` inside v; pi(i) is the index of `from` in u
};

/// Returns the connecting permutation when |u n v| = k-1, else nullopt.
/// Throws std::invalid_argument if u and v have different sizes.
std::optional<Connection> connecting_permutation(const KSubset& u, const KSubset& v);

/// Sign rule for wedge edges. Only `Standard` is the exterior power; the other
/// two exist so verification suites can be checked against a broken rule.
enum class WedgeSignRule {
    Standard,                ///< sgn(pi) * sigma(a,b)
    NegatedPermutationSign,  ///< -sgn(pi) * sigma(a,b)
    DroppedPermutationSign,  ///< sigma(a,b)
};

struct WedgeEdge {
    std::uint64_t u = 0;  ///< rank of the lower endpoint
    std::uint64_t v = 0;  ///< rank of the upper endpoint, u < v
    Permutation permutation;  ///< connects u to v
    Vertex from = 0;          ///< base edge endpoint in u
    Vertex to = 0;            ///< base edge endpoint in v
    Sign sign = Sign::Positive;
};

struct ExteriorPower {
    std::size_t base_order = 0;
    std::size_t k = 0;
    std::vector<KSubset> subsets;  ///< index = rank
    SignedGraph graph;             ///< on C(n,k) vertices
    std::vector<WedgeEdge> edges;  ///< parallel to graph.edges()
};

/// Throws std::out_of_range unless 1 <= k <= n-1.
ExteriorPower wedge_power(const SignedGraph& g, std::size_t k,
                          WedgeSignRule rule = WedgeSignRule::Standard);

/// Complement V \ u. Requires |u| < n.
KSubset mirror_map(const KSubset& u, std::size_t n);

/// Diagonal D-hat on k-subsets with D-hat(u) = prod_{j in u} D(j).
SwitchingVector lift_switching(const SwitchingVector& d, std::size_t k);

}  // namespace sigwedge
