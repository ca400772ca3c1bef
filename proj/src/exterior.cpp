#include "sigwedge/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <stdexcept>

namespace sigwedge {

std::optional<Connection> connecting_permutation(const KSubset& u, const KSubset& v) {
    const std::size_t k = u.size();
    if (v.size() != k) throw std::invalid_argument("subsets must have the same size");

    // Merge walk to find the single element on each side.
    std::optional<std::size_t> p;  // index of u \ v in u
    std::optional<std::size_t> q;  // index of v \ u in v
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < k || j < k) {
        if (j == k || (i < k && u[i] < v[j])) {
            if (p) return std::nullopt;
            p = i++;
        } else if (i == k || v[j] < u[i]) {
            if (q) return std::nullopt;
            q = j++;
        } else {
            ++i;
            ++j;
        }
    }
    if (!p || !q) return std::nullopt;

    // Shared elements keep their relative order, so pi is the order-preserving
    // map [k]\{q} -> [k]\{p} extended by q -> p.
    std::vector<std::size_t> images(k);
    std::size_t src = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
        if (pos == *q) {
            images[pos] = *p;
            continue;
        }
        if (src == *p) ++src;
        images[pos] = src++;
    }
    return Connection{Permutation(std::move(images)), u[*p], v[*q], *q};
}

namespace {

Sign permutation_factor(const Permutation& pi, WedgeSignRule rule) {
    switch (rule) {
        case WedgeSignRule::Standard: return pi.sign();
        case WedgeSignRule::NegatedPermutationSign: return -pi.sign();
        case WedgeSignRule::DroppedPermutationSign: return Sign::Positive;
    }
    return pi.sign();
}

}  // namespace

ExteriorPower wedge_power(const SignedGraph& g, std::size_t k, WedgeSignRule rule) {
    const std::size_t n = g.order();
    if (k < 1 || k + 1 > n) {
        throw std::out_of_range("exterior power needs 1 <= k <= n-1 (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
    }
    ExteriorPower out;
    out.base_order = n;
    out.k = k;
    out.subsets = all_subsets(n, k);

    std::vector<WedgeEdge> edges;
    for (std::uint64_t ru = 0; ru < out.subsets.size(); ++ru) {
        const KSubset& u = out.subsets[ru];
        for (Vertex a : u.elems()) {
            for (const auto& nb : g.neighbors(a)) {
                if (u.contains(nb.vertex)) continue;
                KSubset v = u.exchange(a, nb.vertex);
                std::uint64_t rv = rank(v, n);
                if (rv < ru) continue;  // emitted from the other endpoint
                auto conn = connecting_permutation(u, v);
                Sign s = permutation_factor(conn->permutation, rule) * nb.sign;
                edges.push_back({ru, rv, std::move(conn->permutation), a, nb.vertex, s});
            }
        }
    }
    std::sort(edges.begin(), edges.end(), [](const WedgeEdge& x, const WedgeEdge& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });

    std::vector<SignedEdge> plain;
    plain.reserve(edges.size());
    for (const auto& e : edges) plain.push_back({e.u, e.v, e.sign});
    out.graph = SignedGraph(out.subsets.size(), std::move(plain));
    out.edges = std::move(edges);
    return out;
}

KSubset mirror_map(const KSubset& u, std::size_t n) {
    if (u.size() >= n || u[u.size() - 1] >= n) {
        throw std::invalid_argument("mirror map needs a proper subset of the vertex set");
    }
    std::vector<Vertex> rest;
    rest.reserve(n - u.size());
    for (Vertex x = 0; x < n; ++x) {
        if (!u.contains(x)) rest.push_back(x);
    }
    return KSubset(std::move(rest));
}

SwitchingVector lift_switching(const SwitchingVector& d, std::size_t k) {
    auto subsets = all_subsets(d.size(), k);
    std::vector<Sign> values;
    values.reserve(subsets.size());
    for (const auto& u : subsets) {
        Sign s = Sign::Positive;
        for (Vertex x : u.elems()) s = s * d[x];
        values.push_back(s);
    }
    return SwitchingVector(std::move(values));
}

}  // namespace sigwedge
