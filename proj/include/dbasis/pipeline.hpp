#pragma once

#include <vector>

#include "dbasis/basis.hpp"

namespace dbasis {

struct SectorStats {
    Index attribute = 0;  ///< original index
    std::size_t minimal_covers = 0;
    std::size_t d_basis = 0;
};

struct PipelineStats {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    std::size_t reduced_objects = 0;
    std::size_t reduced_attributes = 0;
    std::size_t binary_rules = 0;
    std::size_t expansion_rules = 0;
    std::vector<SectorStats> sectors;
    /// Over the relevant rules, before the basis-kind and support filters.
    std::size_t minimal_cover_rules = 0;
    std::size_t d_basis_rules = 0;
    std::size_t refined_away = 0;
    std::size_t below_min_support = 0;
};

struct BasisResult {
    std::vector<Implication> rules;  ///< original attribute indices, sorted
    PipelineStats stats;
};

/// Rules shown for a target: those concluding in it, and binary rules
/// whose premise is the target itself.
bool is_relevant(const Implication& rule, Index target);

/// reduce -> order/arrows/D -> per-sector dualization -> refine -> expand
/// -> metrics on `ctx` -> filters. In targeted mode only the target's
/// sector is dualized. Output does not depend on `workers`.
BasisResult compute_basis(const BinaryContext& ctx, const RuleQuery& query, std::size_t workers = 1);

/// Union of the exact rule sets of every subtable missing k rows, rescored
/// on the full table, reduced to premise-minimal rules and filtered to
/// confidence ≥ (|U|-k)/|U|. k = 0 is the exact pipeline. Throws
/// std::invalid_argument for k > 3 or |U| ≤ k.
std::vector<Implication> leave_k_out_rules(const BinaryContext& ctx, std::size_t k,
                                           const RuleQuery& query, std::size_t workers = 1);

inline constexpr std::size_t max_leave_out = 3;

}  // namespace dbasis
