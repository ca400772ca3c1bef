#pragma once

// Signed graphs: simple undirected graphs whose edges carry a +1/-1 sign.
//
// Vertices are dense indices 0..n-1. Edges are stored canonically (u < v)
// and sorted; every value is immutable once constructed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sigwedge {

using Vertex = std::size_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
    return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Converts an integer to a Sign; throws std::invalid_argument unless it is +1 or -1.
Sign sign_from_int(long long value);

/// Thrown when a vertex sequence is not a valid cycle of the graph.
class InvalidCycle : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct SignedEdge {
    Vertex u = 0;
    Vertex v = 0;
    Sign sign = Sign::Positive;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
    Vertex vertex = 0;
    Sign sign = Sign::Positive;
};

class SignedGraph {
  public:
    SignedGraph() = default;
    explicit SignedGraph(std::size_t n);
    /// Edges may be given in either orientation; they are canonicalized to
    /// u < v. Self-loops, parallel edges and out-of-range endpoints throw.
    SignedGraph(std::size_t n, std::vector<SignedEdge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const SignedEdge> edges() const noexcept { return edges_; }
    /// Neighbors sorted by vertex index.
    std::span<const Neighbor> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::optional<Sign> sign(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return sign(u, v).has_value(); }

    /// True iff both graphs have the same order and the same unsigned edge set.
    bool same_underlying(const SignedGraph& other) const;
    bool all_positive() const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    std::size_t n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adjacency_;
};

/// Diagonal of a +-1 switching matrix D; vertices with value -1 form the
/// switching set U.
class SwitchingVector {
  public:
    SwitchingVector() = default;
    explicit SwitchingVector(std::size_t n) : values_(n, Sign::Positive) {}
    explicit SwitchingVector(std::vector<Sign> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    Sign operator[](Vertex v) const { return values_.at(v); }
    void set(Vertex v, Sign s) { values_.at(v) = s; }
    std::span<const Sign> values() const noexcept { return values_; }

    /// Entrywise product; composes two switchings.
    SwitchingVector operator*(const SwitchingVector& other) const;

    friend bool operator==(const SwitchingVector&, const SwitchingVector&) = default;

  private:
    std::vector<Sign> values_;
};

struct BalanceReport {
    bool balanced = false;
    /// A switching that makes every edge positive, or a negative cycle.
    std::variant<SwitchingVector, std::vector<Vertex>> witness;

    const SwitchingVector& switching() const { return std::get<SwitchingVector>(witness); }
    const std::vector<Vertex>& negative_cycle() const {
        return std::get<std::vector<Vertex>>(witness);
    }
};

/// Product of edge signs around a closed walk through `cycle`.
Sign sign_of_cycle(const SignedGraph& g, std::span<const Vertex> cycle);

/// Harary balance test by spanning-forest sign propagation. If unbalanced the
/// witness is the fundamental cycle of the first violating non-tree edge
/// (edges scanned in canonical order).
BalanceReport is_balanced(const SignedGraph& g);

/// Balance of the negated graph: odd cycles negative, even cycles positive.
BalanceReport is_antibalanced(const SignedGraph& g);

/// Edge (u,v,s) becomes (u,v,s*d[u]*d[v]).
SignedGraph switch_graph(const SignedGraph& g, const SwitchingVector& d);

/// Returns D with A(g1) = D A(g2) D, or nullopt. Both graphs must share the
/// same underlying edge set; throws std::invalid_argument otherwise.
std::optional<SwitchingVector> switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

SignedGraph negate(const SignedGraph& g);
SignedGraph underlying(const SignedGraph& g);

/// K_{1,3} is a (not necessarily induced) subgraph iff some degree is >= 3.
bool contains_claw(const SignedGraph& g);

bool is_connected(const SignedGraph& g);
/// Underlying graph is a path P_n with n >= 2.
bool is_path_graph(const SignedGraph& g);
/// Underlying graph is a cycle C_n with n >= 3.
bool is_cycle_graph(const SignedGraph& g);

/// Relabels vertices: vertex x of `g` becomes `mapping[x]`. `mapping` must be
/// a permutation of 0..n-1.
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> mapping);

std::string to_string(Sign s);

}  // namespace sigwedge
