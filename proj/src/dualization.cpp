#include "dbasis/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include <boost/dynamic_bitset.hpp>

namespace dbasis {

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<VertexSet> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (!e.empty() && e.back() >= vertex_count_)
            throw std::invalid_argument("edge vertex out of range");
    }
}

bool Hypergraph::has_empty_edge() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.empty(); });
}

bool edge_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void sort_edges(std::vector<VertexSet>& edges) { std::sort(edges.begin(), edges.end(), edge_less); }

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

Hypergraph minimize(const Hypergraph& h) {
    std::vector<VertexSet> edges = h.edges();
    sort_edges(edges);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    // Sorted by size, so a subset of an edge can only appear before it.
    std::vector<VertexSet> kept;
    for (auto& e : edges) {
        const bool absorbed =
            std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return is_subset(k, e); });
        if (!absorbed) kept.push_back(std::move(e));
    }
    return Hypergraph(h.vertex_count(), std::move(kept));
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Minimal hitting set enumeration in the MMCS style: branch on the vertices
// of the uncovered edge with fewest candidates, and prune any partial
// solution in which some member has lost all of its critical edges.
class TransversalEnumerator {
public:
    TransversalEnumerator(const Hypergraph& h, const TransversalSink& sink) : sink_(sink) {
        const auto n = h.vertex_count();
        const auto m = h.edge_count();

        std::vector<std::size_t> frequency(n, 0);
        for (const auto& e : h.edges())
            for (auto v : e) ++frequency[v];
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return frequency[a] > frequency[b]; });
        std::vector<std::size_t> rank(n);
        for (std::size_t r = 0; r < n; ++r) rank[order_[r]] = r;

        vertex_edges_.assign(n, Bits(m));
        edge_vertices_.assign(m, Bits(n));
        for (std::size_t e = 0; e < m; ++e)
            for (auto v : h.edges()[e]) {
                vertex_edges_[rank[v]].set(e);
                edge_vertices_[e].set(rank[v]);
            }
        candidates_ = Bits(n);
        candidates_.set();
        uncovered_ = Bits(m);
        uncovered_.set();
    }

    StreamResult run() {
        const bool finished = search(uncovered_, {});
        return {emitted_, !finished};
    }

private:
    struct Member {
        std::size_t vertex;
        Bits critical;
    };

    bool emit(const std::vector<Member>& members) {
        VertexSet out;
        out.reserve(members.size());
        for (const auto& mbr : members) out.push_back(order_[mbr.vertex]);
        std::sort(out.begin(), out.end());
        ++emitted_;
        return sink_(out);
    }

    bool search(const Bits& uncovered, const std::vector<Member>& members) {
        if (uncovered.none()) return emit(members);

        std::size_t best = Bits::npos;
        std::size_t best_count = 0;
        for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
            const auto c = (edge_vertices_[e] & candidates_).count();
            if (best == Bits::npos || c < best_count) {
                best = e;
                best_count = c;
                if (c == 0) break;
            }
        }
        if (best_count == 0) return true;

        const Bits branch = edge_vertices_[best] & candidates_;
        candidates_ -= branch;
        bool keep_going = true;
        for (auto v = branch.find_first(); v != Bits::npos && keep_going; v = branch.find_next(v)) {
            const Bits& hit = vertex_edges_[v];
            std::vector<Member> next;
            next.reserve(members.size() + 1);
            bool minimal = true;
            for (const auto& mbr : members) {
                Bits critical = mbr.critical - hit;
                if (critical.none()) {
                    minimal = false;
                    break;
                }
                next.push_back({mbr.vertex, std::move(critical)});
            }
            if (minimal) {
                next.push_back({v, uncovered & hit});
                keep_going = search(uncovered - hit, next);
            }
            candidates_.set(v);
        }
        // Vertices left unprocessed after an abort go back as well.
        candidates_ |= branch;
        return keep_going;
    }

    const TransversalSink& sink_;
    std::vector<std::size_t> order_;
    std::vector<Bits> vertex_edges_;
    std::vector<Bits> edge_vertices_;
    Bits candidates_;
    Bits uncovered_;
    std::size_t emitted_ = 0;
};

}  // namespace

StreamResult dualize_streaming(const Hypergraph& h, const TransversalSink& sink) {
    if (h.has_empty_edge()) throw std::invalid_argument("hypergraph has an empty edge");
    TransversalEnumerator enumerator(h, sink);
    return enumerator.run();
}

Hypergraph dualize(const Hypergraph& h) {
    std::vector<VertexSet> out;
    dualize_streaming(h, [&](const VertexSet& t) {
        out.push_back(t);
        return true;
    });
    sort_edges(out);
    return Hypergraph(h.vertex_count(), std::move(out));
}

Hypergraph read_edge_list(std::istream& in) {
    std::vector<VertexSet> edges;
    std::size_t vertex_count = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        VertexSet edge;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            const auto start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i == start) continue;
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + i, v);
            if (ec != std::errc() || ptr != line.data() + i)
                throw EdgeListError("line " + std::to_string(line_no) + ": '" +
                                    line.substr(start, i - start) + "' is not a vertex index");
            edge.push_back(v);
            vertex_count = std::max(vertex_count, v + 1);
        }
        if (!edge.empty()) edges.push_back(std::move(edge));
    }
    return Hypergraph(vertex_count, std::move(edges));
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
    for (const auto& e : h.edges()) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k) out << ' ';
            out << e[k];
        }
        out << '\n';
    }
}

}  // namespace dbasis
