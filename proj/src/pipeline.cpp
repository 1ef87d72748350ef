#include "dbasis/pipeline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dbasis/parallel.hpp"

namespace dbasis {

bool is_relevant(const Implication& rule, Index target) {
    if (rule.conclusion == target) return true;
    return rule.is_binary() && rule.premise.front() == target;
}

BasisResult compute_basis(const BinaryContext& ctx, const RuleQuery& query, std::size_t workers) {
    if (query.target && *query.target >= ctx.attribute_count())
        throw std::out_of_range("target attribute out of range");

    BasisResult result;
    auto& stats = result.stats;
    stats.objects = ctx.object_count();
    stats.attributes = ctx.attribute_count();

    const Reduction reduction = reduce(ctx);
    const BinaryContext& reduced = reduction.reduced;
    const ReductionRecord& record = reduction.record;
    stats.reduced_objects = reduced.object_count();
    stats.reduced_attributes = reduced.attribute_count();

    const auto order = attribute_order(reduced);
    const auto arrows = compute_arrows(reduced);
    const auto d = compute_d_relation(arrows);

    std::vector<Implication> rules = binary_part(order, query.full_binary_part);
    stats.binary_rules = rules.size();

    std::vector<Index> sectors;
    if (query.target) {
        const auto it = std::find(record.kept_attributes.begin(), record.kept_attributes.end(),
                                  *query.target);
        if (it != record.kept_attributes.end())
            sectors.push_back(static_cast<Index>(it - record.kept_attributes.begin()));
    } else {
        for (Index b = 0; b < reduced.attribute_count(); ++b) sectors.push_back(b);
    }

    std::vector<std::vector<Implication>> slots(sectors.size());
    parallel_for(0, sectors.size(), workers, [&](std::size_t k) {
        slots[k] = extract_sector(reduced, arrows, d, sectors[k]);
    });

    const auto binary_count = rules.size();
    auto already_binary = [&](const Implication& r) {
        return std::any_of(rules.begin(), rules.begin() + static_cast<std::ptrdiff_t>(binary_count),
                           [&](const Implication& b) {
                               return b.premise == r.premise && b.conclusion == r.conclusion;
                           });
    };
    for (auto& slot : slots)
        for (auto& rule : slot)
            if (!rule.is_binary() || !already_binary(rule)) rules.push_back(std::move(rule));

    refine_to_d_basis(reduced, order, rules);

    for (std::size_t k = 0; k < sectors.size(); ++k) {
        SectorStats s;
        s.attribute = record.kept_attributes[sectors[k]];
        for (const auto& rule : rules)
            if (rule.conclusion == sectors[k] && rule.premise.size() != 1) {
                ++s.minimal_covers;
                if (rule.in_d_basis) ++s.d_basis;
            }
        stats.sectors.push_back(s);
    }

    const auto reduced_rule_count = rules.size();
    rules = expand_to_original(record, rules);
    stats.expansion_rules = rules.size() - reduced_rule_count;
    attach_metrics(ctx, rules);

    if (query.target)
        std::erase_if(rules, [&](const Implication& r) { return !is_relevant(r, *query.target); });

    stats.minimal_cover_rules = rules.size();
    stats.d_basis_rules = static_cast<std::size_t>(
        std::count_if(rules.begin(), rules.end(), [](const Implication& r) { return r.in_d_basis; }));
    stats.refined_away = stats.minimal_cover_rules - stats.d_basis_rules;

    if (query.basis_kind == BasisKind::d_basis)
        std::erase_if(rules, [](const Implication& r) { return !r.in_d_basis; });
    if (query.min_support > 0)
        stats.below_min_support = std::erase_if(
            rules, [&](const Implication& r) { return r.support < query.min_support; });

    sort_rules(rules);
    result.rules = std::move(rules);
    return result;
}

namespace {

// Calls visit(dropped) for every k-subset of 0..n-1, lexicographically.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit visit) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        visit(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::vector<Implication> leave_k_out_rules(const BinaryContext& ctx, std::size_t k,
                                           const RuleQuery& query, std::size_t workers) {
    if (k > max_leave_out)
        throw std::invalid_argument("leave-out count " + std::to_string(k) + " exceeds " +
                                    std::to_string(max_leave_out));
    const auto n = ctx.object_count();
    if (n == 0 || n <= k) throw std::invalid_argument("table too small for leave-out count");
    if (k == 0) return compute_basis(ctx, query, workers).rules;

    RuleQuery exact = query;
    exact.min_support = 0;

    // (conclusion, premise) -> in_d_basis in any subtable
    std::map<std::pair<Index, std::vector<Index>>, bool> found;
    for_each_combination(n, k, [&](const std::vector<std::size_t>& dropped) {
        std::vector<Index> rows;
        for (Index i = 0, d = 0; i < n; ++i) {
            if (d < dropped.size() && dropped[d] == i) {
                ++d;
                continue;
            }
            rows.push_back(i);
        }
        std::vector<Index> columns(ctx.attribute_count());
        for (Index j = 0; j < columns.size(); ++j) columns[j] = j;
        const auto sub = ctx.subcontext(rows, columns);
        for (const auto& rule : compute_basis(sub, exact, workers).rules)
            found[{rule.conclusion, rule.premise}] |= rule.in_d_basis;
    });

    std::vector<Implication> rules;
    rules.reserve(found.size());
    for (const auto& [key, in_d_basis] : found) {
        Implication rule;
        rule.conclusion = key.first;
        rule.premise = key.second;
        rule.in_d_basis = in_d_basis;
        rules.push_back(std::move(rule));
    }
    attach_metrics(ctx, rules);
    std::erase_if(rules, [&](const Implication& r) {
        return r.support * n < (n - k) * r.premise_support || r.support < query.min_support;
    });

    // Keep premise-minimal rules; rules come grouped by conclusion.
    std::vector<Implication> minimal;
    for (std::size_t start = 0; start < rules.size();) {
        std::size_t stop = start;
        while (stop < rules.size() && rules[stop].conclusion == rules[start].conclusion) ++stop;
        for (std::size_t i = start; i < stop; ++i) {
            const auto& premise = rules[i].premise;
            const bool dominated = std::any_of(
                rules.begin() + static_cast<std::ptrdiff_t>(start),
                rules.begin() + static_cast<std::ptrdiff_t>(stop), [&](const Implication& other) {
                    return other.premise.size() < premise.size() &&
                           std::includes(premise.begin(), premise.end(), other.premise.begin(),
                                         other.premise.end());
                });
            if (!dominated) minimal.push_back(rules[i]);
        }
        start = stop;
    }

    sort_rules(minimal);
    return minimal;
}

}  // namespace dbasis
