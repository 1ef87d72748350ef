#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dbasis/context.hpp"
#include "dbasis/hypergraph.hpp"

// Exhaustive reference implementations. They read the table only through
// BinaryContext::has() and work on plain bit masks, so they share no logic
// with the fast path they are used to check.
namespace dbasis::oracle {

class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t max_concept_attributes = 20;
inline constexpr std::size_t max_dual_vertices = 20;
inline constexpr std::size_t max_cover_attributes = 12;
inline constexpr std::size_t max_berge_vertices = 64;

struct Concept {
    std::vector<Index> extent;
    std::vector<Index> intent;
    friend bool operator==(const Concept&, const Concept&) = default;
};

/// Every closed attribute set with its extent, by intent size then mask.
std::vector<Concept> enumerate_concepts(const BinaryContext& ctx);

std::vector<Index> closure(const BinaryContext& ctx, const std::vector<Index>& attrs);

/// Transversal hypergraph by scanning all 2^n vertex subsets.
Hypergraph brute_dual(const Hypergraph& h);

/// Transversal hypergraph by Berge multiplication: multiply in one edge at
/// a time and absorb non-minimal products.
Hypergraph berge_dual(const Hypergraph& h);

/// All inclusion-minimal X ∌ b with b ∈ φ(X), sorted by size then
/// lexicographically. Singletons are dropped unless `include_singletons`.
std::vector<std::vector<Index>> brute_min_covers(const BinaryContext& ctx, Index b,
                                                 bool include_singletons = true);

/// True when some x ∈ premise can be replaced by a set Y of attributes
/// implied by x, with Y -> x failing, while premise\{x} ∪ Y still implies
/// b. Enumerates every such Y.
bool replacement_refutes(const BinaryContext& ctx, const std::vector<Index>& premise, Index b);

/// Non-binary minimal covers of b: minimal premises of size ≥ 2 that no
/// replacement refutes.
std::vector<std::vector<Index>> d_basis_covers(const BinaryContext& ctx, Index b);

/// bD read off the minimal covers: c ∈ bD iff c lies in some cover of b.
std::vector<std::vector<Index>> d_relation(const BinaryContext& ctx);

/// Arrow relations from the concept lattice: j↑m iff j ∨ m = m*, and
/// j↓m iff j ∧ m = j_*. Context must be reduced.
struct LatticeArrows {
    std::set<std::pair<Index, Index>> up;    ///< (attribute, object)
    std::set<std::pair<Index, Index>> down;  ///< (attribute, object)
};
LatticeArrows lattice_arrows(const BinaryContext& ctx);

}  // namespace dbasis::oracle
