#include "sigwedge/families.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "sigwedge/combinat.hpp"

namespace sigwedge {

namespace {

// std::mt19937_64 output is fully specified; the standard distributions are
// not, so draws are derived from raw output to stay reproducible.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

std::vector<SignedEdge> positive(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<SignedEdge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, Sign::Positive});
    return edges;
}

}  // namespace

SignedGraph path_graph(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<SignedEdge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Sign::Positive});
    return SignedGraph(n, std::move(edges));
}

SignedGraph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<SignedEdge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Sign::Positive});
    edges.push_back({0, n - 1, Sign::Positive});
    return SignedGraph(n, std::move(edges));
}

SignedGraph complete_graph(std::size_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::Positive});
    }
    return SignedGraph(n, std::move(edges));
}

SignedGraph star_graph(std::size_t leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<SignedEdge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v, Sign::Positive});
    return SignedGraph(leaves + 1, std::move(edges));
}

SignedGraph hypercube_graph(std::size_t d) {
    require(d >= 1 && d < 20, "hypercube needs 1 <= d < 20");
    const std::size_t n = std::size_t{1} << d;
    std::vector<SignedEdge> edges;
    for (Vertex x = 0; x < n; ++x) {
        for (std::size_t bit = 0; bit < d; ++bit) {
            Vertex y = x ^ (std::size_t{1} << bit);
            if (x < y) edges.push_back({x, y, Sign::Positive});
        }
    }
    return SignedGraph(n, std::move(edges));
}

SignedGraph johnson_graph(std::size_t n, std::size_t k, std::size_t l) {
    require(n >= k && k >= l && l >= 1, "johnson graph needs n >= k >= l >= 1");
    const auto subsets = all_subsets(n, k);
    std::vector<SignedEdge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            std::size_t common = 0;
            for (Vertex x : subsets[i].elems()) common += subsets[j].contains(x) ? 1 : 0;
            if (common == l) edges.push_back({i, j, Sign::Positive});
        }
    }
    return SignedGraph(subsets.size(), std::move(edges));
}

SignedGraph apply_signing(const SignedGraph& g, const Signing& s) {
    std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
    if (std::holds_alternative<signing::AllPositive>(s)) {
        for (auto& e : edges) e.sign = Sign::Positive;
    } else if (std::holds_alternative<signing::AllNegative>(s)) {
        for (auto& e : edges) e.sign = Sign::Negative;
    } else if (const auto* one = std::get_if<signing::SingleNegative>(&s)) {
        require(!edges.empty(), "graph has no edges to sign negatively");
        std::size_t index = 0;
        if (one->edge_index) {
            index = *one->edge_index;
            require(index < edges.size(), "negative edge index " + std::to_string(index) + " out of range");
        } else {
            auto it = std::find_if(edges.begin(), edges.end(), [&](const SignedEdge& e) {
                return e.u == 0 && e.v == g.order() - 1;
            });
            if (it != edges.end()) index = static_cast<std::size_t>(it - edges.begin());
        }
        for (auto& e : edges) e.sign = Sign::Positive;
        edges[index].sign = Sign::Negative;
    } else if (const auto* list = std::get_if<signing::Explicit>(&s)) {
        require(list->signs.size() == edges.size(), "explicit signing has " + std::to_string(list->signs.size()) +
                                                        " signs for " + std::to_string(edges.size()) + " edges");
        for (std::size_t i = 0; i < edges.size(); ++i) edges[i].sign = list->signs[i];
    } else {
        std::mt19937_64 rng(std::get<signing::Random>(s).seed);
        for (auto& e : edges) e.sign = (rng() >> 63) ? Sign::Negative : Sign::Positive;
    }
    return SignedGraph(g.order(), std::move(edges));
}

SignedGraph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arity = [&](std::size_t count, const char* name) {
        require(p.size() == count, std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    };
    SignedGraph base;
    switch (spec.kind) {
        case FamilyKind::Path: arity(1, "path"); base = path_graph(p[0]); break;
        case FamilyKind::Cycle: arity(1, "cycle"); base = cycle_graph(p[0]); break;
        case FamilyKind::Complete: arity(1, "complete"); base = complete_graph(p[0]); break;
        case FamilyKind::Star: arity(1, "star"); base = star_graph(p[0]); break;
        case FamilyKind::Hypercube: arity(1, "hypercube"); base = hypercube_graph(p[0]); break;
        case FamilyKind::Johnson: arity(3, "johnson"); base = johnson_graph(p[0], p[1], p[2]); break;
    }
    return apply_signing(base, spec.sign);
}

SignedGraph signing_from_mask(const SignedGraph& g, std::uint64_t mask) {
    std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edges[i].sign = ((mask >> i) & 1U) ? Sign::Negative : Sign::Positive;
    }
    return SignedGraph(g.order(), std::move(edges));
}

SignedGraph random_signed_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool present = unit_interval(rng) < edge_probability;
            Sign s = (rng() >> 63) ? Sign::Negative : Sign::Positive;
            if (present) edges.push_back({u, v, s});
        }
    }
    return SignedGraph(n, std::move(edges));
}

std::vector<Vertex> random_relabeling(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
    return perm;
}

bool edge_sets_equal_under_map(const SignedGraph& g1, const SignedGraph& g2,
                               std::span<const Vertex> vertex_map) {
    const std::size_t n = g1.order();
    require(g2.order() == n && vertex_map.size() == n, "vertex map must be a bijection between equal-size vertex sets");
    std::vector<bool> hit(n, false);
    for (Vertex x : vertex_map) {
        require(x < n && !hit[x], "vertex map is not a bijection");
        hit[x] = true;
    }
    if (g1.size() != g2.size()) return false;
    return std::all_of(g1.edges().begin(), g1.edges().end(), [&](const SignedEdge& e) {
        return g2.adjacent(vertex_map[e.u], vertex_map[e.v]);
    });
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(std::size_t n, std::size_t max_order) : n_(n) {
    require(n >= 1, "enumeration needs n >= 1");
    require(n <= max_order, "enumeration order " + std::to_string(n) + " exceeds the maximum " +
                                std::to_string(max_order));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    }
    require(pairs_.size() < 64, "too many vertex pairs to enumerate");
    end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<SignedGraph> ConnectedGraphEnumerator::next() {
    while (mask_ < end_) {
        std::vector<std::pair<Vertex, Vertex>> chosen;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if ((mask_ >> i) & 1U) chosen.push_back(pairs_[i]);
        }
        ++mask_;
        if (chosen.size() + 1 < n_) continue;
        SignedGraph g(n_, positive(chosen));
        if (is_connected(g)) return g;
    }
    return std::nullopt;
}

std::vector<SignedGraph> connected_graphs(std::size_t n, std::size_t max_order) {
    ConnectedGraphEnumerator gen(n, max_order);
    std::vector<SignedGraph> out;
    while (auto g = gen.next()) out.push_back(std::move(*g));
    return out;
}

std::vector<SignedGraph> all_graphs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    require(pairs.size() < 32, "too many vertex pairs to enumerate");
    std::vector<SignedGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> chosen;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) chosen.push_back(pairs[i]);
        }
        out.emplace_back(n, positive(chosen));
    }
    return out;
}

}  // namespace sigwedge
