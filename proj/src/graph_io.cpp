#include "sigwedge/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sigwedge {

namespace {

std::size_t parse_index(const std::string& token, const char* what, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line) + ": bad " + what + " '" + token + "'");
    }
    return value;
}

Sign parse_sign(const std::string& token, std::size_t line) {
    if (token == "+1" || token == "+") return Sign::Positive;
    if (token == "-1" || token == "-") return Sign::Negative;
    throw ParseError("line " + std::to_string(line) + ": bad sign '" + token + "'");
}

std::vector<std::string> tokens_of(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::string dot_edges(const SignedGraph& g) {
    std::ostringstream out;
    for (const auto& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (e.sign == Sign::Negative) out << " [style=dashed, label=\"-\"]";
        out << ";\n";
    }
    return out.str();
}

}  // namespace

SignedGraph read_graph(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (header.empty() && std::getline(in, text)) {
        ++line_no;
        header = tokens_of(text);
    }
    if (header.size() != 2) throw ParseError("expected header line \"n m\"");
    const std::size_t n = parse_index(header[0], "vertex count", line_no);
    const std::size_t m = parse_index(header[1], "edge count", line_no);

    std::vector<SignedEdge> edges;
    edges.reserve(m);
    while (std::getline(in, text)) {
        ++line_no;
        auto tok = tokens_of(text);
        if (tok.empty()) continue;
        if (tok.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": expected \"u v s\"");
        if (edges.size() == m) throw ParseError("more than " + std::to_string(m) + " edge lines");
        const std::size_t u = parse_index(tok[0], "vertex", line_no);
        const std::size_t v = parse_index(tok[1], "vertex", line_no);
        if (!(u < v && v < n)) {
            throw ParseError("line " + std::to_string(line_no) + ": need 0 <= u < v < n");
        }
        edges.push_back({u, v, parse_sign(tok[2], line_no)});
    }
    if (edges.size() != m) {
        throw ParseError("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    try {
        return SignedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SignedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const SignedGraph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << to_string(e.sign) << '\n';
}

std::string format_graph(const SignedGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

nlohmann::json graph_json(const SignedGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v = 0; v < g.order(); ++v) vertices.push_back({{"id", v}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"sign", to_int(e.sign)}});
    return {{"n", g.order()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

nlohmann::json wedge_json(const ExteriorPower& w) {
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t r = 0; r < w.subsets.size(); ++r) {
        std::vector<Vertex> elems(w.subsets[r].elems().begin(), w.subsets[r].elems().end());
        vertices.push_back({{"id", r}, {"subset", elems}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : w.edges) {
        std::vector<std::size_t> perm(e.permutation.images().begin(), e.permutation.images().end());
        edges.push_back({{"u", e.u},
                         {"v", e.v},
                         {"sign", to_int(e.sign)},
                         {"base_edge", {e.from, e.to}},
                         {"permutation", perm}});
    }
    return {{"n", w.subsets.size()},
            {"k", w.k},
            {"base_order", w.base_order},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
}

nlohmann::json subset_sidecar(const ExteriorPower& w) {
    nlohmann::json subsets = nlohmann::json::array();
    for (const auto& s : w.subsets) subsets.push_back(std::vector<Vertex>(s.elems().begin(), s.elems().end()));
    return {{"k", w.k}, {"base_order", w.base_order}, {"subsets", std::move(subsets)}};
}

std::string graph_dot(const SignedGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    out << dot_edges(g) << "}\n";
    return out.str();
}

std::string wedge_dot(const ExteriorPower& w) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t r = 0; r < w.subsets.size(); ++r) {
        out << "  " << r << " [label=\"";
        for (std::size_t i = 0; i < w.subsets[r].size(); ++i) out << (i ? "^" : "") << w.subsets[r][i];
        out << "\"];\n";
    }
    out << dot_edges(w.graph) << "}\n";
    return out.str();
}

}  // namespace sigwedge
