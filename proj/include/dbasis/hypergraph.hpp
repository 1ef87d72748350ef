#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace dbasis {

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<std::size_t>;

/// Vertices 0..vertex_count-1 and a list of edges.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Edges are sorted and deduplicated internally; vertices must be
    /// < vertex_count.
    Hypergraph(std::size_t vertex_count, std::vector<VertexSet> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_empty_edge() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<VertexSet> edges_;
};

/// Size first, then lexicographic.
bool edge_less(const VertexSet& a, const VertexSet& b);
void sort_edges(std::vector<VertexSet>& edges);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);

/// Inclusion-minimal edges, duplicates dropped, sorted by edge_less.
Hypergraph minimize(const Hypergraph& h);

/// Receives each minimal transversal; returning false stops the enumeration.
using TransversalSink = std::function<bool(const VertexSet&)>;

struct StreamResult {
    std::size_t count = 0;
    bool aborted = false;
};

/// Depth-first enumeration of the minimal transversals (minimal hitting
/// sets) with critical-edge pruning. Each transversal is emitted once, in
/// an order that depends only on the input. An edge-free hypergraph has the
/// single transversal ∅. Throws std::invalid_argument on an empty edge.
StreamResult dualize_streaming(const Hypergraph& h, const TransversalSink& sink);

/// All minimal transversals, sorted by edge_less.
Hypergraph dualize(const Hypergraph& h);

/// One edge per line, vertices as space separated non-negative integers.
/// Blank lines are skipped; vertex_count is the largest index plus one.
Hypergraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Hypergraph& h);

class EdgeListError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dbasis
