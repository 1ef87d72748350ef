#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dbasis {

using Index = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Ascending list of the set bits.
std::vector<Index> to_indices(const Bitset& bits);
Bitset from_indices(std::size_t size, std::span<const Index> indices);

/// Malformed input table.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A label that does not name an object or attribute of the context.
class UnknownLabel : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

enum class InputFormat { dense_csv, fimi };

/// The relation R ⊆ U×A as a bit matrix, mirrored row-major (intents) and
/// column-major (extents) so that both support functions are AND-folds.
/// Immutable after construction.
class BinaryContext {
public:
    BinaryContext() = default;

    /// `rows[i]` is the intent of object i and must have
    /// `attributes.size()` bits. Labels must be unique.
    BinaryContext(std::vector<std::string> objects,
                  std::vector<std::string> attributes,
                  std::vector<Bitset> rows);

    /// Convenience for tests: rows given as '0'/'1' strings, labels
    /// generated as 1..n for objects and a0..a(m-1) for attributes unless
    /// supplied.
    static BinaryContext from_strings(std::span<const std::string> rows,
                                      std::vector<std::string> attributes = {},
                                      std::vector<std::string> objects = {});

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::string& object_label(Index i) const { return objects_.at(i); }
    const std::string& attribute_label(Index j) const { return attributes_.at(j); }

    std::optional<Index> find_object(std::string_view label) const;
    std::optional<Index> find_attribute(std::string_view label) const;
    Index object_index(std::string_view label) const;
    Index attribute_index(std::string_view label) const;

    /// Throw UnknownLabel on the first label not present.
    Bitset attribute_set(std::span<const std::string> labels) const;
    Bitset object_set(std::span<const std::string> labels) const;

    bool has(Index object, Index attribute) const { return rows_[object][attribute]; }
    const Bitset& intent(Index object) const { return rows_.at(object); }
    const Bitset& extent(Index attribute) const { return columns_.at(attribute); }

    Bitset all_objects() const;
    Bitset all_attributes() const;
    Bitset no_objects() const { return Bitset(object_count()); }
    Bitset no_attributes() const { return Bitset(attribute_count()); }

    /// S_A(X): objects having every attribute of X.
    Bitset support_of_attributes(const Bitset& attrs) const;
    /// S_U(Y): attributes shared by every object of Y.
    Bitset support_of_objects(const Bitset& objs) const;
    /// φ(X) = S_U(S_A(X)).
    Bitset closure(const Bitset& attrs) const;

    std::size_t support_count(const Bitset& attrs) const {
        return support_of_attributes(attrs).count();
    }

    /// Restriction to the given objects and attributes, in the given order.
    BinaryContext subcontext(std::span<const Index> objects,
                             std::span<const Index> attributes) const;

    std::vector<std::string> attribute_labels(const Bitset& attrs) const;

    friend bool operator==(const BinaryContext&, const BinaryContext&) = default;

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> columns_;
};

BinaryContext parse_context(std::istream& in, InputFormat format);
BinaryContext parse_context_string(std::string_view text, InputFormat format);
std::optional<InputFormat> parse_input_format(std::string_view name);

/// How a removed object relates to the kept ones.
struct ObjectMerge {
    enum class Kind {
        duplicate,  ///< same row as `representative` (an earlier object)
        derived,    ///< row is the intersection of other rows
    };
    Kind kind = Kind::derived;
    std::optional<Index> representative;

    friend bool operator==(const ObjectMerge&, const ObjectMerge&) = default;
};

/// Bookkeeping of `reduce`; all indices refer to the original context.
struct ReductionRecord {
    std::size_t original_objects = 0;
    std::size_t original_attributes = 0;
    std::vector<Index> kept_objects;
    std::vector<Index> kept_attributes;
    /// removed attribute a -> X_a ⊆ kept_attributes with φ(a) = φ(X_a).
    std::map<Index, std::vector<Index>> attribute_substitutions;
    /// Removed attributes whose closure is the whole attribute set.
    std::vector<Index> universal_attributes;
    std::map<Index, ObjectMerge> object_merges;

    bool degenerate() const { return kept_objects.empty() || kept_attributes.empty(); }
    bool is_universal(Index attribute) const;
};

struct Reduction {
    BinaryContext reduced;
    ReductionRecord record;
};

/// Clarify and reduce to the smallest table with an isomorphic concept
/// lattice. Duplicates keep the earliest index; rounds of column
/// clarification, row clarification, attribute reduction and object
/// reduction repeat until nothing changes.
Reduction reduce(const BinaryContext& ctx);

/// True when no attribute or object of the table is removable.
bool is_reduced(const BinaryContext& ctx);

}  // namespace dbasis
