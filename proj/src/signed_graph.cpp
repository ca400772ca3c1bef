#include "sigwedge/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace sigwedge {

Sign sign_from_int(long long value) {
    if (value == 1) return Sign::Positive;
    if (value == -1) return Sign::Negative;
    throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(value));
}

std::string to_string(Sign s) { return s == Sign::Positive ? "+1" : "-1"; }

SignedGraph::SignedGraph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

SignedGraph::SignedGraph(std::size_t n, std::vector<SignedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_) {
            std::ostringstream msg;
            msg << "edge (" << e.u << "," << e.v << ") out of range for " << n_ << " vertices";
            throw std::invalid_argument(msg.str());
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.sign != Sign::Positive && e.sign != Sign::Negative) {
            throw std::invalid_argument("edge sign must be +1 or -1");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            std::ostringstream msg;
            msg << "parallel edge (" << edges_[i].u << "," << edges_[i].v << ")";
            throw std::invalid_argument(msg.str());
        }
    }

    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[fill[e.u]++] = {e.v, e.sign};
        adjacency_[fill[e.v]++] = {e.u, e.sign};
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
}

std::span<const Neighbor> SignedGraph::neighbors(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return std::span<const Neighbor>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const Neighbor& a, Vertex x) { return a.vertex < x; });
    if (it == nb.end() || it->vertex != v) return std::nullopt;
    return it->sign;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
    }
    return true;
}

bool SignedGraph::all_positive() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const SignedEdge& e) { return e.sign == Sign::Positive; });
}

SwitchingVector SwitchingVector::operator*(const SwitchingVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("switching vector length mismatch");
    std::vector<Sign> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = values_[i] * other.values_[i];
    return SwitchingVector(std::move(out));
}

Sign sign_of_cycle(const SignedGraph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) throw InvalidCycle("a cycle needs at least 3 vertices");
    std::vector<Vertex> seen(cycle.begin(), cycle.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw InvalidCycle("cycle repeats a vertex");
    }
    Sign total = Sign::Positive;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i];
        Vertex b = cycle[(i + 1) % cycle.size()];
        auto s = g.sign(a, b);
        if (!s) {
            throw InvalidCycle("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                               " are not adjacent");
        }
        total = total * *s;
    }
    return total;
}

BalanceReport is_balanced(const SignedGraph& g) {
    const std::size_t n = g.order();
    constexpr Vertex kNone = static_cast<Vertex>(-1);
    std::vector<Sign> value(n, Sign::Positive);
    std::vector<Vertex> parent(n, kNone);
    std::vector<std::size_t> depth(n, 0);
    std::vector<bool> visited(n, false);

    for (Vertex root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (const auto& nb : g.neighbors(x)) {
                if (visited[nb.vertex]) continue;
                visited[nb.vertex] = true;
                parent[nb.vertex] = x;
                depth[nb.vertex] = depth[x] + 1;
                value[nb.vertex] = value[x] * nb.sign;
                queue.push(nb.vertex);
            }
        }
    }

    for (const auto& e : g.edges()) {
        if (e.sign == value[e.u] * value[e.v]) continue;
        // Fundamental cycle: u up to the common ancestor, then down to v.
        std::vector<Vertex> up{e.u};
        std::vector<Vertex> down{e.v};
        Vertex a = e.u;
        Vertex b = e.v;
        while (depth[a] > depth[b]) up.push_back(a = parent[a]);
        while (depth[b] > depth[a]) down.push_back(b = parent[b]);
        while (a != b) {
            up.push_back(a = parent[a]);
            down.push_back(b = parent[b]);
        }
        down.pop_back();  // common ancestor already in `up`
        up.insert(up.end(), down.rbegin(), down.rend());
        return BalanceReport{false, std::move(up)};
    }
    return BalanceReport{true, SwitchingVector(std::move(value))};
}

BalanceReport is_antibalanced(const SignedGraph& g) { return is_balanced(negate(g)); }

SignedGraph switch_graph(const SignedGraph& g, const SwitchingVector& d) {
    if (d.size() != g.order()) {
        throw std::invalid_argument("switching vector has length " + std::to_string(d.size()) +
                                    ", graph has " + std::to_string(g.order()) + " vertices");
    }
    std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) e.sign = e.sign * d[e.u] * d[e.v];
    return SignedGraph(g.order(), std::move(edges));
}

std::optional<SwitchingVector> switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
    if (!g1.same_underlying(g2)) {
        throw std::invalid_argument("switching equivalence needs identical underlying graphs");
    }
    std::vector<SignedEdge> product(g1.edges().begin(), g1.edges().end());
    for (std::size_t i = 0; i < product.size(); ++i) product[i].sign = product[i].sign * g2.edges()[i].sign;
    auto report = is_balanced(SignedGraph(g1.order(), std::move(product)));
    if (!report.balanced) return std::nullopt;
    return report.switching();
}

SignedGraph negate(const SignedGraph& g) {
    std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(edges));
}

SignedGraph underlying(const SignedGraph& g) {
    std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) e.sign = Sign::Positive;
    return SignedGraph(g.order(), std::move(edges));
}

bool contains_claw(const SignedGraph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 3) return true;
    }
    return false;
}

bool is_connected(const SignedGraph& g) {
    const std::size_t n = g.order();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (const auto& nb : g.neighbors(x)) {
            if (!seen[nb.vertex]) {
                seen[nb.vertex] = true;
                ++reached;
                stack.push_back(nb.vertex);
            }
        }
    }
    return reached == n;
}

bool is_path_graph(const SignedGraph& g) {
    const std::size_t n = g.order();
    if (n < 2 || g.size() != n - 1 || !is_connected(g)) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return false;
    }
    return true;
}

bool is_cycle_graph(const SignedGraph& g) {
    const std::size_t n = g.order();
    if (n < 3 || g.size() != n || !is_connected(g)) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> mapping) {
    const std::size_t n = g.order();
    if (mapping.size() != n) throw std::invalid_argument("relabeling has wrong length");
    std::vector<bool> hit(n, false);
    for (Vertex x : mapping) {
        if (x >= n || hit[x]) throw std::invalid_argument("relabeling is not a permutation");
        hit[x] = true;
    }
    std::vector<SignedEdge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges()) edges.push_back({mapping[e.u], mapping[e.v], e.sign});
    return SignedGraph(n, std::move(edges));
}

}  // namespace sigwedge
