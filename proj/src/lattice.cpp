#include "dbasis/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace dbasis {

Bitset PartialOrder::strictly_below(Index y) const {
    Bitset out = down_[y];
    out.reset(y);
    return out;
}

std::vector<std::pair<Index, Index>> PartialOrder::strict_pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index y = 0; y < size(); ++y)
        for (auto x : to_indices(strictly_below(y))) out.emplace_back(x, y);
    return out;
}

std::vector<std::pair<Index, Index>> PartialOrder::covering_pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index y = 0; y < size(); ++y) {
        const Bitset below = strictly_below(y);
        for (auto x : to_indices(below)) {
            bool covered = true;
            for (auto z = below.find_first(); z != Bitset::npos; z = below.find_next(z))
                if (z != x && less(x, z)) {
                    covered = false;
                    break;
                }
            if (covered) out.emplace_back(x, y);
        }
    }
    return out;
}

PartialOrder attribute_order(const BinaryContext& ctx) {
    const auto n = ctx.attribute_count();
    std::vector<Bitset> down(n, Bitset(n));
    for (Index a = 0; a < n; ++a)
        for (Index c = 0; c < n; ++c)
            if (ctx.extent(a).is_subset_of(ctx.extent(c))) down[a].set(c);
    return PartialOrder(std::move(down));
}

PartialOrder object_order(const BinaryContext& ctx) {
    const auto n = ctx.object_count();
    std::vector<Bitset> down(n, Bitset(n));
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < n; ++k)
            if (ctx.intent(k).is_subset_of(ctx.intent(i))) down[i].set(k);
    return PartialOrder(std::move(down));
}

ArrowTable::ArrowTable(std::vector<Bitset> up, std::vector<Bitset> down, std::size_t objects)
    : up_(std::move(up)), down_(std::move(down)),
      down_by_object_(objects, Bitset(up_.size())) {
    for (Index j = 0; j < down_.size(); ++j)
        for (auto i : to_indices(down_[j])) down_by_object_[i].set(j);
}

ArrowTable compute_arrows(const BinaryContext& ctx) {
    if (!is_reduced(ctx)) throw std::invalid_argument("compute_arrows requires a reduced context");
    const auto m = ctx.attribute_count();
    const auto n = ctx.object_count();
    std::vector<Bitset> up(m, Bitset(n));
    std::vector<Bitset> down(m, Bitset(n));

    // j↑i: intent(i) is maximal among the rows lacking j.
    for (Index j = 0; j < m; ++j) {
        const Bitset lacking = ~ctx.extent(j);
        for (auto i : to_indices(lacking)) {
            bool maximal = true;
            for (auto k = lacking.find_first(); k != Bitset::npos; k = lacking.find_next(k))
                if (ctx.intent(i).is_proper_subset_of(ctx.intent(k))) {
                    maximal = false;
                    break;
                }
            if (maximal) up[j].set(i);
        }
    }
    // j↓i: extent(j) is maximal among the columns absent from row i.
    for (Index i = 0; i < n; ++i) {
        const Bitset absent = ~ctx.intent(i);
        for (auto j : to_indices(absent)) {
            bool minimal = true;
            for (auto k = absent.find_first(); k != Bitset::npos; k = absent.find_next(k))
                if (ctx.extent(j).is_proper_subset_of(ctx.extent(k))) {
                    minimal = false;
                    break;
                }
            if (minimal) down[j].set(i);
        }
    }
    return ArrowTable(std::move(up), std::move(down), n);
}

Bitset up_objects(const ArrowTable& arrows, Index attribute) {
    return arrows.up_objects(attribute);
}

DRelation compute_d_relation(const ArrowTable& arrows) {
    const auto m = arrows.attribute_count();
    std::vector<Bitset> sectors(m, Bitset(m));
    for (Index b = 0; b < m; ++b) {
        const Bitset& witnesses = arrows.up_objects(b);
        for (auto p = witnesses.find_first(); p != Bitset::npos; p = witnesses.find_next(p))
            sectors[b] |= arrows.down_attributes(p);
        sectors[b].reset(b);
    }
    return DRelation(std::move(sectors));
}

std::string format_arrow_table(const BinaryContext& ctx, const ArrowTable& arrows) {
    std::ostringstream out;
    for (const auto& label : ctx.attributes()) out << '\t' << label;
    out << '\n';
    for (Index i = 0; i < ctx.object_count(); ++i) {
        out << ctx.object_label(i);
        for (Index j = 0; j < ctx.attribute_count(); ++j) {
            out << '\t';
            if (ctx.has(i, j))
                out << '1';
            else if (arrows.updown(j, i))
                out << "↕";
            else if (arrows.up(j, i))
                out << "↑";
            else if (arrows.down(j, i))
                out << "↓";
            else
                out << '0';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dbasis
