#pragma once

// Standard graph families, signings, random graphs, and enumeration of small
// connected labeled graphs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sigwedge/signed_graph.hpp"

namespace sigwedge {

enum class FamilyKind { Path, Cycle, Complete, Star, Hypercube, Johnson };

namespace signing {
struct AllPositive {};
struct AllNegative {};
/// Index into the canonical (sorted) edge list. Without an index the edge
/// (0, n-1) is used when present, otherwise the first edge.
struct SingleNegative {
    std::optional<std::size_t> edge_index;
};
/// One sign per edge in canonical order.
struct Explicit {
    std::vector<Sign> signs;
};
struct Random {
    std::uint64_t seed = 0;
};
}  // namespace signing

using Signing = std::variant<signing::AllPositive, signing::AllNegative, signing::SingleNegative,
                             signing::Explicit, signing::Random>;

struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    /// path/cycle/complete: {n}; star: {leaves}; hypercube: {d}; johnson: {n, k, l}.
    std::vector<std::size_t> params;
    Signing sign = signing::AllPositive{};
};

/// Throws std::invalid_argument on invalid parameters or signings.
SignedGraph generate(const FamilySpec& spec);

SignedGraph path_graph(std::size_t n);
SignedGraph cycle_graph(std::size_t n);
SignedGraph complete_graph(std::size_t n);
/// K_{1,leaves} centered at vertex 0.
SignedGraph star_graph(std::size_t leaves);
SignedGraph hypercube_graph(std::size_t d);
/// Vertices are k-subsets of {0..n-1} in lexicographic rank order; edges join
/// subsets meeting in exactly l elements. Needs n >= k >= l >= 1.
SignedGraph johnson_graph(std::size_t n, std::size_t k, std::size_t l);

SignedGraph apply_signing(const SignedGraph& g, const Signing& s);

/// Signing i of the 2^m possible signings: bit j of `mask` negates edge j.
SignedGraph signing_from_mask(const SignedGraph& g, std::uint64_t mask);

/// G(n, p) with independent uniform signs; deterministic in `seed`.
SignedGraph random_signed_graph(std::size_t n, double edge_probability, std::uint64_t seed);
/// A uniformly random permutation of 0..n-1.
std::vector<Vertex> random_relabeling(std::size_t n, std::uint64_t seed);

/// True iff vertex_map carries E(|g1|) exactly onto E(|g2|). Throws
/// std::invalid_argument if vertex_map is not a bijection between the vertex sets.
bool edge_sets_equal_under_map(const SignedGraph& g1, const SignedGraph& g2,
                               std::span<const Vertex> vertex_map);

/// Streams every connected labeled graph on n vertices (all edges positive),
/// in increasing order of the edge-subset bitmask over pairs in lexicographic
/// order.
class ConnectedGraphEnumerator {
  public:
    static constexpr std::size_t kDefaultMaxOrder = 6;

    explicit ConnectedGraphEnumerator(std::size_t n, std::size_t max_order = kDefaultMaxOrder);
    std::optional<SignedGraph> next();

  private:
    std::size_t n_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_ = 0;
};

std::vector<SignedGraph> connected_graphs(std::size_t n,
                                          std::size_t max_order = ConnectedGraphEnumerator::kDefaultMaxOrder);

/// Every labeled graph on n vertices, connected or not.
std::vector<SignedGraph> all_graphs(std::size_t n);

}  // namespace sigwedge
