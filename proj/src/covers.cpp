#include "sigwedge/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigwedge {

Permutation GainGraph::gain(std::uint64_t from, std::uint64_t to) const {
    const bool forward = from < to;
    const std::uint64_t lo = forward ? from : to;
    const std::uint64_t hi = forward ? to : from;
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{lo, hi},
                               [](const GainEdge& e, const std::pair<std::uint64_t, std::uint64_t>& key) {
                                   return std::pair{e.u, e.v} < key;
                               });
    if (it == edges.end() || it->u != lo || it->v != hi) throw std::out_of_range("not an edge of the gain graph");
    return forward ? it->gain : it->gain.inverse();
}

std::size_t CoverGraph::id(std::uint64_t base, const Permutation& p) const {
    return static_cast<std::size_t>(base * group.size() + rank(p));
}

std::size_t DeletedPower::index_of(const std::vector<Vertex>& tuple) const {
    auto it = index_.find(tuple);
    if (it == index_.end()) throw std::out_of_range("tuple is not a vertex of the deleted power");
    return it->second;
}

GainGraph gain_graph(const SignedGraph& g, std::size_t k) {
    ExteriorPower wedge = wedge_power(g, k);
    GainGraph out;
    out.k = k;
    out.vertices = std::move(wedge.subsets);
    out.base = underlying(wedge.graph);
    out.edges.reserve(wedge.edges.size());
    for (auto& e : wedge.edges) out.edges.push_back({e.u, e.v, std::move(e.permutation)});
    return out;
}

CoverGraph build_cover(const GainGraph& phi) {
    CoverGraph out;
    out.k = phi.k;
    out.base_vertices = phi.vertices.size();
    out.group = all_permutations(phi.k);
    std::vector<SignedEdge> edges;
    edges.reserve(phi.edges.size() * out.group.size());
    for (const auto& e : phi.edges) {
        const Permutation inv = e.gain.inverse();
        for (const auto& a : out.group) {
            // a = gain o b  <=>  b = gain^-1 o a
            edges.push_back({out.id(e.u, a), out.id(e.v, compose(inv, a)), Sign::Positive});
        }
    }
    out.graph = SignedGraph(out.base_vertices * out.group.size(), std::move(edges));
    return out;
}

DeletedPower diagonal_deleted_power(const SignedGraph& g, std::size_t k) {
    const std::size_t n = g.order();
    if (k < 1 || k > n) throw std::out_of_range("deleted power needs 1 <= k <= n");
    DeletedPower out;
    out.k = k;

    // Lexicographic enumeration of injective tuples.
    std::vector<Vertex> tuple(k);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, std::size_t pos) -> void {
        if (pos == k) {
            out.index_.emplace(tuple, out.tuples.size());
            out.tuples.push_back(tuple);
            return;
        }
        for (Vertex x = 0; x < n; ++x) {
            if (used[x]) continue;
            used[x] = true;
            tuple[pos] = x;
            self(self, pos + 1);
            used[x] = false;
        }
    };
    extend(extend, 0);

    std::vector<SignedEdge> edges;
    for (std::size_t i = 0; i < out.tuples.size(); ++i) {
        const auto& t = out.tuples[i];
        for (std::size_t j = 0; j < k; ++j) {
            for (const auto& nb : g.neighbors(t[j])) {
                if (std::find(t.begin(), t.end(), nb.vertex) != t.end()) continue;
                auto other = t;
                other[j] = nb.vertex;
                std::size_t o = out.index_.at(other);
                if (i < o) edges.push_back({i, o, nb.sign});
            }
        }
    }
    out.graph = SignedGraph(out.tuples.size(), std::move(edges));
    return out;
}

CoverIsomorphismReport check_cover_isomorphism(const SignedGraph& g, std::size_t k) {
    const GainGraph phi = gain_graph(g, k);
    const CoverGraph cover = build_cover(phi);
    const DeletedPower deleted = diagonal_deleted_power(g, k);

    CoverIsomorphismReport report;
    report.cover_vertices = cover.graph.order();
    report.cover_edges = cover.graph.size();
    report.deleted_vertices = deleted.graph.order();
    report.deleted_edges = deleted.graph.size();
    report.double_cover = (k == 2);

    std::vector<std::size_t> image(cover.graph.order());
    std::vector<bool> hit(deleted.graph.order(), false);
    bool bijective = cover.graph.order() == deleted.graph.order();
    for (std::size_t id = 0; id < cover.graph.order() && bijective; ++id) {
        const auto& u = phi.vertices[cover.base_of(id)];
        auto t = cover.sheet_of(id).apply(u.elems());
        std::size_t target = deleted.index_of(t);
        if (hit[target]) bijective = false;
        hit[target] = true;
        image[id] = target;
    }
    report.bijective = bijective;
    if (!bijective) return report;

    report.edges_preserved = std::all_of(cover.graph.edges().begin(), cover.graph.edges().end(),
                                         [&](const SignedEdge& e) {
                                             return deleted.graph.adjacent(image[e.u], image[e.v]);
                                         });
    return report;
}

bool verify_cover_isomorphism(const SignedGraph& g, std::size_t k) {
    return check_cover_isomorphism(g, k).isomorphic();
}

}  // namespace sigwedge
