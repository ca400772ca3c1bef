#pragma once

// Slow, independent re-implementations used as test oracles. Nothing here
// calls into the library's algorithms; only the SignedGraph container is shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sigwedge/signed_graph.hpp"

namespace ref {

using sigwedge::SignedGraph;
using sigwedge::Vertex;

/// Parity via cycle decomposition: sign = (-1)^(k - #cycles).
inline int perm_sign(const std::vector<std::size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return (p.size() - cycles) % 2 == 0 ? 1 : -1;
}

/// k-subsets of {0..n-1} in lexicographic order, by recursion.
inline std::vector<std::vector<Vertex>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    std::function<void(Vertex)> go = [&](Vertex start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex x = start; x < n; ++x) {
            cur.push_back(x);
            go(x + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

struct Connection {
    std::vector<std::size_t> pi;
    Vertex a = 0;  // in u only
    Vertex b = 0;  // in v only
};

/// Searches all of S_k for pi with u[pi(j)] = v[j] for every j except the
/// position q of b in v, where pi(q) must be the position p of a in u.
inline std::optional<Connection> connect(const std::vector<Vertex>& u, const std::vector<Vertex>& v) {
    std::vector<Vertex> only_u;
    std::vector<Vertex> only_v;
    std::set_difference(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(only_u));
    std::set_difference(v.begin(), v.end(), u.begin(), u.end(), std::back_inserter(only_v));
    if (only_u.size() != 1 || only_v.size() != 1) return std::nullopt;
    const std::size_t k = u.size();
    const std::size_t p = std::find(u.begin(), u.end(), only_u[0]) - u.begin();
    const std::size_t q = std::find(v.begin(), v.end(), only_v[0]) - v.begin();
    std::vector<std::size_t> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    std::optional<Connection> found;
    do {
        bool ok = pi[q] == p;
        for (std::size_t j = 0; ok && j < k; ++j) ok = j == q || u[pi[j]] == v[j];
        if (ok) {
            if (found) throw std::logic_error("connecting permutation not unique");
            found = Connection{pi, only_u[0], only_v[0]};
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return found;
}

/// Wedge power straight from the definition: all pairs, brute-force pi.
/// Returns (rank_u, rank_v) -> sign with rank_u < rank_v.
inline std::map<std::pair<std::size_t, std::size_t>, int> wedge(const SignedGraph& g, std::size_t k) {
    const auto subs = subsets(g.order(), k);
    std::map<std::pair<std::size_t, std::size_t>, int> out;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
            auto c = connect(subs[i], subs[j]);
            if (!c) continue;
            auto s = g.sign(c->a, c->b);
            if (!s) continue;
            out[{i, j}] = perm_sign(c->pi) * sigwedge::to_int(*s);
        }
    }
    return out;
}

inline SignedGraph wedge_graph(const SignedGraph& g, std::size_t k) {
    std::vector<sigwedge::SignedEdge> edges;
    for (auto [e, s] : wedge(g, k)) edges.push_back({e.first, e.second, sigwedge::sign_from_int(s)});
    return SignedGraph(subsets(g.order(), k).size(), std::move(edges));
}

/// Every simple cycle, each as a vertex list starting at its minimum vertex.
inline std::vector<std::vector<Vertex>> simple_cycles(const SignedGraph& g) {
    std::vector<std::vector<Vertex>> out;
    const std::size_t n = g.order();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> path{s};
        std::vector<bool> on(n, false);
        on[s] = true;
        std::function<void(Vertex)> dfs = [&](Vertex x) {
            for (const auto& nb : g.neighbors(x)) {
                const Vertex y = nb.vertex;
                if (y == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
                if (y <= s || on[y]) continue;
                on[y] = true;
                path.push_back(y);
                dfs(y);
                path.pop_back();
                on[y] = false;
            }
        };
        dfs(s);
    }
    return out;
}

inline int cycle_sign(const SignedGraph& g, const std::vector<Vertex>& c) {
    int s = 1;
    for (std::size_t i = 0; i < c.size(); ++i) s *= sigwedge::to_int(*g.sign(c[i], c[(i + 1) % c.size()]));
    return s;
}

/// Balanced iff every simple cycle is positive.
inline bool balanced(const SignedGraph& g) {
    for (const auto& c : simple_cycles(g)) {
        if (cycle_sign(g, c) < 0) return false;
    }
    return true;
}

/// Anti-balanced iff every cycle has sign (-1)^length.
inline bool antibalanced(const SignedGraph& g) {
    for (const auto& c : simple_cycles(g)) {
        if (cycle_sign(g, c) != (c.size() % 2 == 0 ? 1 : -1)) return false;
    }
    return true;
}

/// Tries every diagonal; returns one mapping g1 onto g2 if any exists.
inline std::optional<std::vector<int>> switching_search(const SignedGraph& g1, const SignedGraph& g2) {
    const std::size_t n = g1.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& e : g1.edges()) {
            const int du = (mask >> e.u & 1) ? -1 : 1;
            const int dv = (mask >> e.v & 1) ? -1 : 1;
            auto s2 = g2.sign(e.u, e.v);
            if (!s2 || du * sigwedge::to_int(e.sign) * dv != sigwedge::to_int(*s2)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i & 1) ? -1 : 1;
            return d;
        }
    }
    return std::nullopt;
}

/// Connected labeled graphs on n vertices by the classical recurrence
/// c(n) = 2^C(n,2) - sum_{j<n} C(n-1, j-1) c(j) 2^C(n-j,2).
inline std::uint64_t connected_count(std::size_t n) {
    auto choose = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<std::uint64_t> c(n + 1, 0);
    for (std::size_t m = 1; m <= n; ++m) {
        std::uint64_t total = std::uint64_t{1} << (m * (m - 1) / 2);
        for (std::size_t j = 1; j < m; ++j) {
            total -= choose(m - 1, j - 1) * c[j] * (std::uint64_t{1} << ((m - j) * (m - j - 1) / 2));
        }
        c[m] = total;
    }
    return c[n];
}

}  // namespace ref
