#include "dbasis/report.hpp"

#include <ostream>

#include <json.hpp>

namespace dbasis {

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "jsonl") return OutputFormat::jsonl;
    return std::nullopt;
}

void write_text(std::ostream& out, const BinaryContext& ctx, const std::vector<Implication>& rules) {
    for (const auto& rule : rules) {
        for (auto a : rule.premise) out << ctx.attribute_label(a) << ' ';
        const auto c = rule.confidence();
        out << "-> " << ctx.attribute_label(rule.conclusion) << " [support=" << rule.support
            << ", confidence=" << c.num;
        if (c.den != 1) out << '/' << c.den;
        out << ", d_basis=" << (rule.in_d_basis ? "true" : "false") << "]\n";
    }
}

void write_jsonl(std::ostream& out, const BinaryContext& ctx, const std::vector<Implication>& rules) {
    for (const auto& rule : rules) {
        nlohmann::ordered_json line;
        auto premise = nlohmann::ordered_json::array();
        for (auto a : rule.premise) premise.push_back(ctx.attribute_label(a));
        const auto c = rule.confidence();
        line["premise"] = std::move(premise);
        line["conclusion"] = ctx.attribute_label(rule.conclusion);
        line["support"] = rule.support;
        line["premise_support"] = rule.premise_support;
        line["confidence_num"] = c.num;
        line["confidence_den"] = c.den;
        line["in_d_basis"] = rule.in_d_basis;
        out << line.dump() << '\n';
    }
}

void write_rules(std::ostream& out, OutputFormat format, const BinaryContext& ctx,
                 const std::vector<Implication>& rules) {
    if (format == OutputFormat::jsonl)
        write_jsonl(out, ctx, rules);
    else
        write_text(out, ctx, rules);
}

void write_summary(std::ostream& out, const BinaryContext& ctx, const PipelineStats& stats) {
    out << "table: " << stats.objects << " x " << stats.attributes << '\n'
        << "reduced: " << stats.reduced_objects << " x " << stats.reduced_attributes << '\n'
        << "binary rules: " << stats.binary_rules << '\n'
        << "expansion rules: " << stats.expansion_rules << '\n';
    for (const auto& s : stats.sectors)
        out << "sector " << ctx.attribute_label(s.attribute) << ": " << s.minimal_covers
            << " minimal covers, " << s.d_basis << " in d-basis\n";
    out << "minimal-covers rules: " << stats.minimal_cover_rules << '\n'
        << "d-basis rules: " << stats.d_basis_rules << '\n'
        << "refined away: " << stats.refined_away << '\n';
    if (stats.below_min_support) out << "below min support: " << stats.below_min_support << '\n';
}

}  // namespace dbasis
