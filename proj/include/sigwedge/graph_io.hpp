#pragma once

// Flat-file formats.
//
// .sg text: a header line "n m", then m lines "u v s" with 0 <= u < v < n and
// s one of +1, -1, +, -. Writing emits edges in canonical (u, v) order with
// signs "+1"/"-1", so a written file reads back and re-writes byte-identically.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "sigwedge/exterior.hpp"
#include "sigwedge/signed_graph.hpp"

namespace sigwedge {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

SignedGraph read_graph(std::istream& in);
SignedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const SignedGraph& g);
std::string format_graph(const SignedGraph& g);

/// {"n", "vertices": [{"id"}], "edges": [{"u", "v", "sign"}]}
nlohmann::json graph_json(const SignedGraph& g);
/// Adds "k", the subset of every vertex, and per-edge provenance
/// ("base_edge": [from, to], "permutation": [...]).
nlohmann::json wedge_json(const ExteriorPower& w);
/// rank -> subset mapping written next to an .sg wedge file.
nlohmann::json subset_sidecar(const ExteriorPower& w);

/// Graphviz export; negative edges are dashed and labeled "-".
std::string graph_dot(const SignedGraph& g);
/// Same, with vertices labeled by their subsets.
std::string wedge_dot(const ExteriorPower& w);

}  // namespace sigwedge
