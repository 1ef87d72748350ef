#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dbasis/context.hpp"
#include "dbasis/hypergraph.hpp"

namespace dbasis::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(DBASIS_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// The 6x7 worked example table (objects 1..6, attributes b a1 a2 c1 c2 u v).
inline BinaryContext example8() {
    return parse_context_string(read_fixture("example8.csv"), InputFormat::dense_csv);
}

inline Bitset attrs(const BinaryContext& ctx, std::initializer_list<std::string> labels) {
    std::vector<std::string> v(labels);
    return ctx.attribute_set(v);
}

inline std::vector<std::string> labels(const BinaryContext& ctx, const Bitset& set) {
    return ctx.attribute_labels(set);
}

inline BinaryContext random_context(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                    double density) {
    std::bernoulli_distribution one(density);
    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < rows; ++i) objects.push_back("o" + std::to_string(i + 1));
    for (std::size_t j = 0; j < cols; ++j) attributes.push_back("x" + std::to_string(j + 1));
    std::vector<Bitset> bits;
    for (std::size_t i = 0; i < rows; ++i) {
        Bitset row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = one(rng);
        bits.push_back(std::move(row));
    }
    return BinaryContext(std::move(objects), std::move(attributes), std::move(bits));
}

/// Random table with between 1..max_rows rows and 1..max_cols columns.
inline BinaryContext random_small_context(std::mt19937_64& rng, std::size_t max_rows,
                                          std::size_t max_cols) {
    std::uniform_int_distribution<std::size_t> r(1, max_rows), c(1, max_cols);
    std::uniform_real_distribution<double> d(0.2, 0.8);
    const auto rows = r(rng);
    const auto cols = c(rng);
    return random_context(rng, rows, cols, d(rng));
}

inline Bitset random_subset(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.35);
    Bitset out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = coin(rng);
    return out;
}

/// Nonempty edges over up to max_vertices vertices.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_vertices,
                                    std::size_t max_edges) {
    std::uniform_int_distribution<std::size_t> nv(1, max_vertices), ne(1, max_edges);
    const auto n = nv(rng);
    const auto m = ne(rng);
    std::uniform_real_distribution<double> dens(0.15, 0.6);
    const double p = dens(rng);
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<VertexSet> edges;
    for (std::size_t e = 0; e < m; ++e) {
        VertexSet edge;
        for (std::size_t v = 0; v < n; ++v)
            if (coin(rng)) edge.push_back(v);
        if (edge.empty()) edge.push_back(pick(rng));
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace dbasis::testing
