#include "dbasis/context.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace dbasis {

std::vector<Index> to_indices(const Bitset& bits) {
    std::vector<Index> out;
    out.reserve(bits.count());
    for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
        out.push_back(i);
    return out;
}

Bitset from_indices(std::size_t size, std::span<const Index> indices) {
    Bitset bits(size);
    for (Index i : indices) bits.set(i);
    return bits;
}

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels)
        if (!seen.insert(label).second)
            throw ParseError(std::string("duplicate ") + what + " label '" + label + "'");
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

BinaryContext parse_dense_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> attributes;
    bool have_header = false;
    std::vector<std::string> objects;
    std::vector<Bitset> rows;

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto tokens = split(line, ',');
        if (!have_header) {
            // A leading empty cell stands above the row-label column.
            if (tokens.size() > 1 && tokens.front().empty()) tokens.erase(tokens.begin());
            for (auto t : tokens) {
                if (t.empty())
                    throw ParseError("line " + std::to_string(line_no) + ": empty attribute label");
                attributes.emplace_back(t);
            }
            have_header = true;
            continue;
        }
        if (tokens.size() != attributes.size() + 1)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(attributes.size() + 1) + " fields, got " +
                             std::to_string(tokens.size()));
        Bitset row(attributes.size());
        for (std::size_t j = 0; j < attributes.size(); ++j) {
            const auto cell = tokens[j + 1];
            if (cell == "1")
                row.set(j);
            else if (cell != "0")
                throw ParseError("line " + std::to_string(line_no) + ": entry '" +
                                 std::string(cell) + "' is not 0 or 1");
        }
        objects.emplace_back(tokens[0]);
        rows.push_back(std::move(row));
    }
    if (attributes.empty() || rows.empty()) throw ParseError("empty table");
    require_unique(attributes, "attribute");
    require_unique(objects, "object");
    return BinaryContext(std::move(objects), std::move(attributes), std::move(rows));
}

BinaryContext parse_fimi(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::vector<unsigned long long>> transactions;
    std::set<unsigned long long> universe;

    while (std::getline(in, line)) {
        ++line_no;
        std::vector<unsigned long long> items;
        for (auto token : split_whitespace(line)) {
            unsigned long long value = 0;
            const auto* end = token.data() + token.size();
            const auto [ptr, ec] = std::from_chars(token.data(), end, value);
            if (ec != std::errc() || ptr != end)
                throw ParseError("line " + std::to_string(line_no) + ": '" +
                                 std::string(token) + "' is not a non-negative integer");
            items.push_back(value);
            universe.insert(value);
        }
        transactions.push_back(std::move(items));
    }
    if (transactions.empty() || universe.empty()) throw ParseError("empty table");

    std::vector<unsigned long long> items(universe.begin(), universe.end());
    std::vector<std::string> attributes;
    attributes.reserve(items.size());
    for (auto item : items) attributes.push_back(std::to_string(item));

    std::vector<std::string> objects;
    std::vector<Bitset> rows;
    for (std::size_t t = 0; t < transactions.size(); ++t) {
        Bitset row(items.size());
        for (auto item : transactions[t]) {
            const auto pos = std::lower_bound(items.begin(), items.end(), item) - items.begin();
            row.set(static_cast<std::size_t>(pos));
        }
        objects.push_back(std::to_string(t + 1));
        rows.push_back(std::move(row));
    }
    return BinaryContext(std::move(objects), std::move(attributes), std::move(rows));
}

}  // namespace

BinaryContext::BinaryContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             std::vector<Bitset> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
    if (rows_.size() != objects_.size())
        throw std::invalid_argument("row count does not match object labels");
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
    columns_.assign(attributes_.size(), Bitset(objects_.size()));
    for (Index i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != attributes_.size())
            throw std::invalid_argument("row width does not match attribute labels");
        for (auto j = rows_[i].find_first(); j != Bitset::npos; j = rows_[i].find_next(j))
            columns_[j].set(i);
    }
}

BinaryContext BinaryContext::from_strings(std::span<const std::string> rows,
                                          std::vector<std::string> attributes,
                                          std::vector<std::string> objects) {
    const std::size_t width = rows.empty() ? attributes.size() : rows.front().size();
    if (attributes.empty())
        for (std::size_t j = 0; j < width; ++j) attributes.push_back("a" + std::to_string(j));
    if (objects.empty())
        for (std::size_t i = 0; i < rows.size(); ++i) objects.push_back(std::to_string(i + 1));
    std::vector<Bitset> bits;
    for (const auto& r : rows) {
        if (r.size() != attributes.size()) throw std::invalid_argument("ragged row");
        Bitset row(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) row[j] = r[j] == '1';
        bits.push_back(std::move(row));
    }
    return BinaryContext(std::move(objects), std::move(attributes), std::move(bits));
}

std::optional<Index> BinaryContext::find_object(std::string_view label) const {
    const auto it = std::find(objects_.begin(), objects_.end(), label);
    if (it == objects_.end()) return std::nullopt;
    return static_cast<Index>(it - objects_.begin());
}

std::optional<Index> BinaryContext::find_attribute(std::string_view label) const {
    const auto it = std::find(attributes_.begin(), attributes_.end(), label);
    if (it == attributes_.end()) return std::nullopt;
    return static_cast<Index>(it - attributes_.begin());
}

Index BinaryContext::object_index(std::string_view label) const {
    if (auto i = find_object(label)) return *i;
    throw UnknownLabel("unknown object '" + std::string(label) + "'");
}

Index BinaryContext::attribute_index(std::string_view label) const {
    if (auto j = find_attribute(label)) return *j;
    throw UnknownLabel("unknown attribute '" + std::string(label) + "'");
}

Bitset BinaryContext::attribute_set(std::span<const std::string> labels) const {
    Bitset out(attribute_count());
    for (const auto& l : labels) out.set(attribute_index(l));
    return out;
}

Bitset BinaryContext::object_set(std::span<const std::string> labels) const {
    Bitset out(object_count());
    for (const auto& l : labels) out.set(object_index(l));
    return out;
}

Bitset BinaryContext::all_objects() const {
    Bitset out(object_count());
    out.set();
    return out;
}

Bitset BinaryContext::all_attributes() const {
    Bitset out(attribute_count());
    out.set();
    return out;
}

Bitset BinaryContext::support_of_attributes(const Bitset& attrs) const {
    Bitset out = all_objects();
    for (auto j = attrs.find_first(); j != Bitset::npos; j = attrs.find_next(j))
        out &= columns_[j];
    return out;
}

Bitset BinaryContext::support_of_objects(const Bitset& objs) const {
    Bitset out = all_attributes();
    for (auto i = objs.find_first(); i != Bitset::npos; i = objs.find_next(i))
        out &= rows_[i];
    return out;
}

Bitset BinaryContext::closure(const Bitset& attrs) const {
    return support_of_objects(support_of_attributes(attrs));
}

BinaryContext BinaryContext::subcontext(std::span<const Index> objects,
                                        std::span<const Index> attributes) const {
    std::vector<std::string> obj_labels;
    std::vector<std::string> attr_labels;
    std::vector<Bitset> rows;
    for (Index j : attributes) attr_labels.push_back(attributes_.at(j));
    for (Index i : objects) {
        obj_labels.push_back(objects_.at(i));
        Bitset row(attributes.size());
        for (std::size_t k = 0; k < attributes.size(); ++k) row[k] = rows_[i][attributes[k]];
        rows.push_back(std::move(row));
    }
    return BinaryContext(std::move(obj_labels), std::move(attr_labels), std::move(rows));
}

std::vector<std::string> BinaryContext::attribute_labels(const Bitset& attrs) const {
    std::vector<std::string> out;
    for (auto j = attrs.find_first(); j != Bitset::npos; j = attrs.find_next(j))
        out.push_back(attributes_[j]);
    return out;
}

BinaryContext parse_context(std::istream& in, InputFormat format) {
    switch (format) {
    case InputFormat::dense_csv: return parse_dense_csv(in);
    case InputFormat::fimi: return parse_fimi(in);
    }
    throw std::invalid_argument("unknown input format");
}

BinaryContext parse_context_string(std::string_view text, InputFormat format) {
    std::istringstream in{std::string(text)};
    return parse_context(in, format);
}

std::optional<InputFormat> parse_input_format(std::string_view name) {
    if (name == "dense-csv" || name == "csv") return InputFormat::dense_csv;
    if (name == "fimi-transactions" || name == "fimi") return InputFormat::fimi;
    return std::nullopt;
}

bool ReductionRecord::is_universal(Index attribute) const {
    return std::find(universal_attributes.begin(), universal_attributes.end(), attribute) !=
           universal_attributes.end();
}

namespace {

// Working state of the reduction: the original table plus masks of the
// surviving rows and columns.
struct Reducer {
    const BinaryContext& ctx;
    Bitset alive_objects;
    Bitset alive_attributes;
    std::map<Index, ObjectMerge> merges;

    Bitset extent(Index j) const { return ctx.extent(j) & alive_objects; }
    Bitset intent(Index i) const { return ctx.intent(i) & alive_attributes; }

    bool clarify_attributes() {
        std::map<Bitset, Index> first_seen;
        bool changed = false;
        for (auto j : to_indices(alive_attributes)) {
            auto [it, inserted] = first_seen.emplace(extent(j), j);
            if (!inserted) {
                alive_attributes.reset(j);
                changed = true;
            }
        }
        return changed;
    }

    bool clarify_objects() {
        std::map<Bitset, Index> first_seen;
        bool changed = false;
        for (auto i : to_indices(alive_objects)) {
            auto [it, inserted] = first_seen.emplace(intent(i), i);
            if (!inserted) {
                alive_objects.reset(i);
                merges[i] = ObjectMerge{ObjectMerge::Kind::duplicate, it->second};
                changed = true;
            }
        }
        return changed;
    }

    // An element is reducible when its set equals the intersection of the
    // strictly larger sets (the empty intersection being everything).
    template <typename SetOf>
    static std::vector<Index> reducible(const std::vector<Index>& members, const Bitset& everything,
                                        SetOf set_of) {
        std::vector<Bitset> sets;
        for (auto k : members) sets.push_back(set_of(k));
        std::vector<Index> out;
        for (std::size_t a = 0; a < members.size(); ++a) {
            Bitset meet = everything;
            for (std::size_t c = 0; c < members.size(); ++c)
                if (c != a && sets[a].is_proper_subset_of(sets[c])) meet &= sets[c];
            if (meet == sets[a]) out.push_back(members[a]);
        }
        return out;
    }

    bool reduce_attributes() {
        const auto removable = reducible(to_indices(alive_attributes), alive_objects,
                                         [&](Index j) { return extent(j); });
        for (auto j : removable) alive_attributes.reset(j);
        return !removable.empty();
    }

    bool reduce_objects() {
        const auto removable = reducible(to_indices(alive_objects), alive_attributes,
                                         [&](Index i) { return intent(i); });
        for (auto i : removable) {
            alive_objects.reset(i);
            merges[i] = ObjectMerge{ObjectMerge::Kind::derived, std::nullopt};
        }
        return !removable.empty();
    }
};

}  // namespace

Reduction reduce(const BinaryContext& ctx) {
    Reducer r{ctx, ctx.all_objects(), ctx.all_attributes(), {}};
    bool changed = true;
    while (changed) {
        changed = false;
        changed |= r.clarify_attributes();
        changed |= r.clarify_objects();
        changed |= r.reduce_attributes();
        changed |= r.reduce_objects();
    }

    ReductionRecord record;
    record.original_objects = ctx.object_count();
    record.original_attributes = ctx.attribute_count();
    record.kept_objects = to_indices(r.alive_objects);
    record.kept_attributes = to_indices(r.alive_attributes);
    record.object_merges = std::move(r.merges);

    // Witnesses are checked against the original rows: every removed row is
    // an intersection of kept rows, so equality there is equality everywhere.
    const Bitset everything = ctx.all_attributes();
    for (Index a = 0; a < ctx.attribute_count(); ++a) {
        if (r.alive_attributes[a]) continue;
        const Bitset& target = ctx.extent(a);
        std::vector<Index> witness;
        for (auto c : record.kept_attributes)
            if (target.is_subset_of(ctx.extent(c))) witness.push_back(c);
        auto meet_without = [&](std::size_t skip) {
            Bitset meet = ctx.all_objects();
            for (std::size_t k = 0; k < witness.size(); ++k)
                if (k != skip) meet &= ctx.extent(witness[k]);
            return meet;
        };
        for (std::size_t k = 0; k < witness.size();) {
            if (meet_without(k) == target)
                witness.erase(witness.begin() + static_cast<std::ptrdiff_t>(k));
            else
                ++k;
        }
        record.attribute_substitutions.emplace(a, std::move(witness));
        if (ctx.closure(from_indices(ctx.attribute_count(), std::array{a})) == everything)
            record.universal_attributes.push_back(a);
    }

    Reduction out{ctx.subcontext(record.kept_objects, record.kept_attributes), std::move(record)};
    return out;
}

bool is_reduced(const BinaryContext& ctx) {
    const auto result = reduce(ctx);
    return result.record.kept_objects.size() == ctx.object_count() &&
           result.record.kept_attributes.size() == ctx.attribute_count();
}

}  // namespace dbasis
