#pragma once

#include <optional>
#include <vector>

#include "dbasis/context.hpp"
#include "dbasis/hypergraph.hpp"
#include "dbasis/lattice.hpp"

namespace dbasis {

/// Non-negative fraction in lowest terms.
struct Ratio {
    std::size_t num = 1;
    std::size_t den = 1;
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// premise -> conclusion, attribute indices of whichever context the rule
/// is expressed over.
struct Implication {
    std::vector<Index> premise;  ///< sorted ascending
    Index conclusion = 0;
    std::size_t support = 0;          ///< |S(premise ∪ {conclusion})|
    std::size_t premise_support = 0;  ///< |S(premise)|
    bool in_d_basis = true;

    bool is_binary() const { return premise.size() == 1; }
    /// support / premise_support; a premise no object satisfies gives 1.
    Ratio confidence() const;

    friend bool operator==(const Implication&, const Implication&) = default;
};

enum class BasisKind { minimal_covers, d_basis };

struct RuleQuery {
    std::optional<Index> target;  ///< original attribute index
    std::size_t min_support = 0;  ///< absolute row count, 0 = no filter
    BasisKind basis_kind = BasisKind::d_basis;
    /// Emit every strict pair of the attribute order instead of covers only.
    bool full_binary_part = false;
};

/// Per-attribute dualization instance: vertices are bD, one edge
/// bD \ M_m for each m ∈ M(b).
struct SectorHypergraph {
    Hypergraph graph;
    std::vector<Index> vertex_attributes;  ///< vertex -> attribute index
};

/// std::nullopt when bD is empty (no non-binary covers for b).
std::optional<SectorHypergraph> sector_hypergraph(const BinaryContext& ctx, const ArrowTable& arrows,
                                                  const DRelation& d, Index b);

/// x -> y for y < x. Covering pairs only unless `transitive`.
std::vector<Implication> binary_part(const PartialOrder& order, bool transitive = false);

/// Minimal covers Y -> b with Y ⊆ bD, one per minimal transversal of the
/// sector hypergraph, in enumeration order. Flags are left at true.
std::vector<Implication> extract_sector(const BinaryContext& ctx, const ArrowTable& arrows,
                                        const DRelation& d, Index b);

/// Clears in_d_basis on X -> b when some x ∈ X can be swapped for the
/// attributes strictly below it without losing b. Binary rules are kept.
void refine_to_d_basis(const BinaryContext& ctx, const PartialOrder& order,
                       std::vector<Implication>& rules);

/// Maps rules over the reduced attributes back to original indices and adds
/// X_a -> a and a -> x (x ∈ X_a, or every x ≠ a when φ(a) is everything)
/// for each removed attribute a.
std::vector<Implication> expand_to_original(const ReductionRecord& record,
                                            const std::vector<Implication>& rules);

/// Fills support and premise_support from `ctx`.
void attach_metrics(const BinaryContext& ctx, std::vector<Implication>& rules);

/// Reporting order: conclusion, premise size, premise lexicographic.
void sort_rules(std::vector<Implication>& rules);

/// Arranges rules for a single closure pass: empty premises, then binary
/// rules with every x -> y ahead of the rules whose premise is y, then the
/// rest in their current order.
std::vector<Implication> order_for_closure(const std::vector<Implication>& rules);

/// One left-to-right pass; each rule fires at most once.
Bitset ordered_closure(const std::vector<Implication>& rules, const Bitset& attrs);

/// Forward chaining to a fixpoint.
Bitset implication_closure(const std::vector<Implication>& rules, const Bitset& attrs);

}  // namespace dbasis
