#include "dbasis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace dbasis::oracle {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<Index> members(Mask m) {
    std::vector<Index> out;
    for (Index i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

Mask to_mask(const std::vector<Index>& items) {
    Mask m = 0;
    for (auto i : items) m |= bit(i);
    return m;
}

// The table as attribute masks per object.
struct MaskTable {
    std::size_t attributes = 0;
    std::vector<Mask> rows;

    explicit MaskTable(const BinaryContext& ctx, std::size_t guard) : attributes(ctx.attribute_count()) {
        if (attributes > guard)
            throw SizeGuardError("oracle limited to " + std::to_string(guard) + " attributes, got " +
                                 std::to_string(attributes));
        for (Index i = 0; i < ctx.object_count(); ++i) {
            Mask row = 0;
            for (Index j = 0; j < attributes; ++j)
                if (ctx.has(i, j)) row |= bit(j);
            rows.push_back(row);
        }
    }

    Mask everything() const { return attributes == 64 ? ~Mask{0} : bit(attributes) - 1; }

    Mask closure(Mask x) const {
        Mask out = everything();
        for (auto row : rows)
            if ((row & x) == x) out &= row;
        return out;
    }

    bool implies(Mask x, std::size_t b) const { return closure(x) & bit(b); }
};

std::vector<Mask> minimal_only(std::vector<Mask> family) {
    std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
        const auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Mask> out;
    for (auto m : family)
        if (std::none_of(out.begin(), out.end(), [&](Mask k) { return (k & m) == k; })) out.push_back(m);
    return out;
}

bool lex_members_less(Mask a, Mask b) {
    const auto pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return members(a) < members(b);
}

Hypergraph to_hypergraph(std::size_t n, std::vector<Mask> family) {
    std::sort(family.begin(), family.end(), lex_members_less);
    std::vector<VertexSet> edges;
    for (auto m : family) edges.push_back(members(m));
    return Hypergraph(n, std::move(edges));
}

std::vector<Mask> edge_masks(const Hypergraph& h) {
    std::vector<Mask> out;
    for (const auto& e : h.edges()) out.push_back(to_mask(e));
    return out;
}

}  // namespace

std::vector<Concept> enumerate_concepts(const BinaryContext& ctx) {
    const MaskTable table(ctx, max_concept_attributes);
    std::vector<Mask> closed;
    for (Mask x = 0; x <= table.everything(); ++x)
        if (table.closure(x) == x) closed.push_back(x);
    std::sort(closed.begin(), closed.end(), [](Mask a, Mask b) {
        const auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Concept> out;
    for (auto intent : closed) {
        Concept c;
        c.intent = members(intent);
        for (Index i = 0; i < table.rows.size(); ++i)
            if ((table.rows[i] & intent) == intent) c.extent.push_back(i);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Index> closure(const BinaryContext& ctx, const std::vector<Index>& attrs) {
    const MaskTable table(ctx, 64);
    return members(table.closure(to_mask(attrs)));
}

Hypergraph brute_dual(const Hypergraph& h) {
    const auto n = h.vertex_count();
    if (n > max_dual_vertices)
        throw SizeGuardError("brute_dual limited to " + std::to_string(max_dual_vertices) + " vertices");
    const auto edges = edge_masks(h);
    auto transversal = [&](Mask t) {
        return std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & t) != 0; });
    };
    std::vector<Mask> out;
    for (Mask t = 0; t < bit(n); ++t) {
        if (!transversal(t)) continue;
        bool minimal = true;
        for (Mask rest = t; rest && minimal; rest &= rest - 1)
            minimal = !transversal(t & ~(rest & -rest));
        if (minimal) out.push_back(t);
    }
    return to_hypergraph(n, std::move(out));
}

Hypergraph berge_dual(const Hypergraph& h) {
    const auto n = h.vertex_count();
    if (n > max_berge_vertices)
        throw SizeGuardError("berge_dual limited to " + std::to_string(max_berge_vertices) + " vertices");
    std::vector<Mask> current{0};
    for (auto e : edge_masks(h)) {
        std::vector<Mask> next;
        for (auto t : current) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (auto v : members(e)) next.push_back(t | bit(v));
        }
        current = minimal_only(std::move(next));
    }
    return to_hypergraph(n, std::move(current));
}

std::vector<std::vector<Index>> brute_min_covers(const BinaryContext& ctx, Index b,
                                                 bool include_singletons) {
    const MaskTable table(ctx, max_cover_attributes);
    std::vector<Mask> premises;
    for (Mask x = 0; x <= table.everything(); ++x)
        if (!(x & bit(b)) && table.implies(x, b)) premises.push_back(x);
    std::vector<std::vector<Index>> out;
    auto minimal = minimal_only(std::move(premises));
    std::sort(minimal.begin(), minimal.end(), lex_members_less);
    for (auto m : minimal)
        if (include_singletons || std::popcount(m) != 1) out.push_back(members(m));
    return out;
}

bool replacement_refutes(const BinaryContext& ctx, const std::vector<Index>& premise, Index b) {
    const MaskTable table(ctx, max_cover_attributes);
    const Mask x_all = to_mask(premise);
    for (auto x : premise) {
        const Mask implied = table.closure(bit(x)) & ~bit(x);
        const auto candidates = members(implied);
        for (Mask pick = 0; pick < bit(candidates.size()); ++pick) {
            Mask y = 0;
            for (std::size_t k = 0; k < candidates.size(); ++k)
                if (pick & bit(k)) y |= bit(candidates[k]);
            if (table.implies(y, x)) continue;
            if (table.implies((x_all & ~bit(x)) | y, b)) return true;
        }
    }
    return false;
}

std::vector<std::vector<Index>> d_basis_covers(const BinaryContext& ctx, Index b) {
    std::vector<std::vector<Index>> out;
    for (auto& premise : brute_min_covers(ctx, b, false))
        if (!replacement_refutes(ctx, premise, b)) out.push_back(std::move(premise));
    return out;
}

std::vector<std::vector<Index>> d_relation(const BinaryContext& ctx) {
    std::vector<std::vector<Index>> out;
    for (Index b = 0; b < ctx.attribute_count(); ++b) {
        Mask sector = 0;
        for (const auto& premise : d_basis_covers(ctx, b)) sector |= to_mask(premise);
        out.push_back(members(sector));
    }
    return out;
}

LatticeArrows lattice_arrows(const BinaryContext& ctx) {
    const MaskTable table(ctx, max_concept_attributes);
    std::vector<Mask> closed;
    for (Mask x = 0; x <= table.everything(); ++x)
        if (table.closure(x) == x) closed.push_back(x);

    auto unique_cover = [&](Mask element, bool upper) {
        std::vector<Mask> covers;
        for (auto c : closed) {
            const bool related = upper ? (c != element && (c & element) == element)
                                       : (c != element && (c & element) == c);
            if (!related) continue;
            const bool adjacent = std::none_of(closed.begin(), closed.end(), [&](Mask z) {
                if (z == c || z == element) return false;
                return upper ? ((z & element) == element && (z & c) == z)
                             : ((z & element) == z && (z & c) == c);
            });
            if (adjacent) covers.push_back(c);
        }
        if (covers.size() != 1)
            throw std::logic_error("lattice_arrows needs a reduced context (irreducible elements)");
        return covers.front();
    };

    LatticeArrows out;
    for (Index m = 0; m < table.rows.size(); ++m) {
        const Mask meet_irr = table.rows[m];
        const Mask upper = unique_cover(meet_irr, true);
        for (Index j = 0; j < table.attributes; ++j) {
            const Mask join_irr = table.closure(bit(j));
            const Mask lower = unique_cover(join_irr, false);
            if (table.closure(meet_irr | join_irr) == upper) out.up.emplace(j, m);
            if ((meet_irr & join_irr) == lower) out.down.emplace(j, m);
        }
    }
    return out;
}

}  // namespace dbasis::oracle
