#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dbasis/context.hpp"

namespace dbasis {

/// Finite partial order on 0..size-1 stored as down-sets.
class PartialOrder {
public:
    PartialOrder() = default;
    explicit PartialOrder(std::vector<Bitset> down_sets) : down_(std::move(down_sets)) {}

    std::size_t size() const { return down_.size(); }
    bool leq(Index x, Index y) const { return down_[y][x]; }
    bool less(Index x, Index y) const { return x != y && leq(x, y); }

    /// {x : x ≤ y}, including y.
    const Bitset& down_set(Index y) const { return down_[y]; }
    /// {x : x < y}.
    Bitset strictly_below(Index y) const;

    /// All (lower, upper) pairs with lower < upper.
    std::vector<std::pair<Index, Index>> strict_pairs() const;
    /// Pairs with lower < upper and nothing strictly in between.
    std::vector<std::pair<Index, Index>> covering_pairs() const;

private:
    std::vector<Bitset> down_;
};

/// c ≤ a iff every object having a also has c.
PartialOrder attribute_order(const BinaryContext& ctx);

/// i ≤ i' iff intent(i) ⊆ intent(i'): objects as meet irreducibles,
/// ordered like the closed sets they generate.
PartialOrder object_order(const BinaryContext& ctx);

/// Arrow relations between attributes (join irreducibles) and objects
/// (meet irreducibles) of a reduced context. All arrows sit on zero cells.
class ArrowTable {
public:
    ArrowTable(std::vector<Bitset> up, std::vector<Bitset> down, std::size_t objects);

    std::size_t attribute_count() const { return up_.size(); }
    std::size_t object_count() const { return down_by_object_.size(); }

    bool up(Index attribute, Index object) const { return up_[attribute][object]; }
    bool down(Index attribute, Index object) const { return down_[attribute][object]; }
    bool updown(Index attribute, Index object) const {
        return up(attribute, object) && down(attribute, object);
    }

    /// Objects p with attribute↑p.
    const Bitset& up_objects(Index attribute) const { return up_.at(attribute); }
    /// Objects p with attribute↓p.
    const Bitset& down_objects(Index attribute) const { return down_.at(attribute); }
    /// Attributes c with c↓object.
    const Bitset& down_attributes(Index object) const { return down_by_object_.at(object); }

private:
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<Bitset> down_by_object_;
};

/// Throws std::invalid_argument when the context is not reduced.
ArrowTable compute_arrows(const BinaryContext& ctx);

/// M(b) = {p : b↑p}; throws std::out_of_range on an unknown attribute.
Bitset up_objects(const ArrowTable& arrows, Index attribute);

/// bD = {c ≠ b : b↑p and c↓p for some object p}.
class DRelation {
public:
    explicit DRelation(std::vector<Bitset> sectors) : sectors_(std::move(sectors)) {}

    std::size_t size() const { return sectors_.size(); }
    const Bitset& sector(Index b) const { return sectors_.at(b); }
    bool related(Index b, Index c) const { return sectors_.at(b)[c]; }

private:
    std::vector<Bitset> sectors_;
};

DRelation compute_d_relation(const ArrowTable& arrows);

/// The reduced table with 1/0/↑/↓/↕ cells, tab separated, one header line
/// of attribute labels.
std::string format_arrow_table(const BinaryContext& ctx, const ArrowTable& arrows);

}  // namespace dbasis
