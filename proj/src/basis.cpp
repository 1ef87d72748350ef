#include "dbasis/basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dbasis {

Ratio Implication::confidence() const {
    if (premise_support == 0) return {1, 1};
    const auto g = std::gcd(support, premise_support);
    return {support / g, premise_support / g};
}

std::optional<SectorHypergraph> sector_hypergraph(const BinaryContext& ctx, const ArrowTable& arrows,
                                                  const DRelation& d, Index b) {
    const Bitset& sector = d.sector(b);
    if (sector.none()) return std::nullopt;

    SectorHypergraph out;
    out.vertex_attributes = to_indices(sector);
    std::vector<VertexSet> edges;
    const Bitset& witnesses = arrows.up_objects(b);
    for (auto m = witnesses.find_first(); m != Bitset::npos; m = witnesses.find_next(m)) {
        VertexSet edge;
        for (std::size_t v = 0; v < out.vertex_attributes.size(); ++v)
            if (!ctx.has(m, out.vertex_attributes[v])) edge.push_back(v);
        if (edge.empty())
            throw std::logic_error("sector of '" + ctx.attribute_label(b) +
                                   "' lies below an object lacking it");
        edges.push_back(std::move(edge));
    }
    out.graph = minimize(Hypergraph(out.vertex_attributes.size(), std::move(edges)));
    return out;
}

std::vector<Implication> binary_part(const PartialOrder& order, bool transitive) {
    const auto pairs = transitive ? order.strict_pairs() : order.covering_pairs();
    std::vector<Implication> out;
    out.reserve(pairs.size());
    for (const auto& [lower, upper] : pairs) {
        Implication rule;
        rule.premise = {upper};
        rule.conclusion = lower;
        out.push_back(std::move(rule));
    }
    return out;
}

std::vector<Implication> extract_sector(const BinaryContext& ctx, const ArrowTable& arrows,
                                        const DRelation& d, Index b) {
    std::vector<Implication> out;
    if (ctx.closure(ctx.no_attributes())[b]) {
        Implication rule;
        rule.conclusion = b;
        out.push_back(std::move(rule));
        return out;
    }
    const auto sector = sector_hypergraph(ctx, arrows, d, b);
    if (!sector) return out;
    dualize_streaming(sector->graph, [&](const VertexSet& transversal) {
        Implication rule;
        rule.conclusion = b;
        for (auto v : transversal) rule.premise.push_back(sector->vertex_attributes[v]);
        std::sort(rule.premise.begin(), rule.premise.end());
        out.push_back(std::move(rule));
        return true;
    });
    return out;
}

void refine_to_d_basis(const BinaryContext& ctx, const PartialOrder& order,
                       std::vector<Implication>& rules) {
    for (auto& rule : rules) {
        rule.in_d_basis = true;
        if (rule.premise.size() < 2) continue;
        const Bitset premise = from_indices(ctx.attribute_count(), rule.premise);
        for (auto x : rule.premise) {
            Bitset replaced = premise;
            replaced.reset(x);
            replaced |= order.strictly_below(x);
            if (ctx.closure(replaced)[rule.conclusion]) {
                rule.in_d_basis = false;
                break;
            }
        }
    }
}

std::vector<Implication> expand_to_original(const ReductionRecord& record,
                                            const std::vector<Implication>& rules) {
    std::vector<Implication> out;
    out.reserve(rules.size() + record.attribute_substitutions.size());
    for (const auto& rule : rules) {
        Implication mapped = rule;
        for (auto& a : mapped.premise) a = record.kept_attributes.at(a);
        mapped.conclusion = record.kept_attributes.at(rule.conclusion);
        std::sort(mapped.premise.begin(), mapped.premise.end());
        out.push_back(std::move(mapped));
    }
    for (const auto& [removed, witness] : record.attribute_substitutions) {
        Implication back;
        back.premise = witness;
        back.conclusion = removed;
        out.push_back(std::move(back));

        auto forward = [&](Index x) {
            Implication rule;
            rule.premise = {removed};
            rule.conclusion = x;
            out.push_back(std::move(rule));
        };
        if (record.is_universal(removed)) {
            for (Index x = 0; x < record.original_attributes; ++x)
                if (x != removed) forward(x);
        } else {
            for (auto x : witness) forward(x);
        }
    }
    return out;
}

void attach_metrics(const BinaryContext& ctx, std::vector<Implication>& rules) {
    for (auto& rule : rules) {
        Bitset attrs = from_indices(ctx.attribute_count(), rule.premise);
        const Bitset rows = ctx.support_of_attributes(attrs);
        rule.premise_support = rows.count();
        rule.support = (rows & ctx.extent(rule.conclusion)).count();
    }
}

void sort_rules(std::vector<Implication>& rules) {
    std::stable_sort(rules.begin(), rules.end(), [](const Implication& a, const Implication& b) {
        if (a.conclusion != b.conclusion) return a.conclusion < b.conclusion;
        if (a.premise.size() != b.premise.size()) return a.premise.size() < b.premise.size();
        return a.premise < b.premise;
    });
}

std::vector<Implication> order_for_closure(const std::vector<Implication>& rules) {
    std::size_t universe = 0;
    for (const auto& r : rules) {
        universe = std::max(universe, r.conclusion + 1);
        for (auto a : r.premise) universe = std::max(universe, a + 1);
    }

    // Topological rank of attributes along the binary rules x -> y; members
    // of a cycle keep index order after everything acyclic.
    std::vector<std::vector<Index>> successors(universe);
    std::vector<std::size_t> indegree(universe, 0);
    for (const auto& r : rules)
        if (r.is_binary()) {
            successors[r.premise[0]].push_back(r.conclusion);
            ++indegree[r.conclusion];
        }
    std::vector<std::size_t> rank(universe, universe);
    std::vector<Index> ready;
    for (Index a = universe; a-- > 0;)
        if (indegree[a] == 0) ready.push_back(a);
    std::size_t next = 0;
    while (!ready.empty()) {
        const Index a = ready.back();
        ready.pop_back();
        rank[a] = next++;
        for (auto s : successors[a])
            if (--indegree[s] == 0) ready.push_back(s);
    }
    for (Index a = 0; a < universe; ++a)
        if (rank[a] == universe) rank[a] = next++;

    std::vector<Implication> out;
    out.reserve(rules.size());
    for (const auto& r : rules)
        if (r.premise.empty()) out.push_back(r);
    std::vector<Implication> binary;
    for (const auto& r : rules)
        if (r.is_binary()) binary.push_back(r);
    std::stable_sort(binary.begin(), binary.end(), [&](const Implication& a, const Implication& b) {
        return rank[a.premise[0]] < rank[b.premise[0]];
    });
    out.insert(out.end(), binary.begin(), binary.end());
    for (const auto& r : rules)
        if (r.premise.size() > 1) out.push_back(r);
    return out;
}

namespace {

bool premise_holds(const Implication& rule, const Bitset& attrs) {
    return std::all_of(rule.premise.begin(), rule.premise.end(),
                       [&](Index a) { return attrs[a]; });
}

}  // namespace

Bitset ordered_closure(const std::vector<Implication>& rules, const Bitset& attrs) {
    Bitset out = attrs;
    for (const auto& rule : rules)
        if (premise_holds(rule, out)) out.set(rule.conclusion);
    return out;
}

Bitset implication_closure(const std::vector<Implication>& rules, const Bitset& attrs) {
    Bitset out = attrs;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : rules)
            if (!out[rule.conclusion] && premise_holds(rule, out)) {
                out.set(rule.conclusion);
                changed = true;
            }
    }
    return out;
}

}  // namespace dbasis
