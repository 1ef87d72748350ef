#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "dbasis/basis.hpp"
#include "dbasis/pipeline.hpp"

namespace dbasis {

enum class OutputFormat { text, jsonl };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// `a1 c2 -> b [support=1, confidence=1, d_basis=true]`, one rule per line.
void write_text(std::ostream& out, const BinaryContext& ctx, const std::vector<Implication>& rules);

/// One JSON object per line: premise, conclusion, support, premise_support,
/// confidence_num, confidence_den, in_d_basis.
void write_jsonl(std::ostream& out, const BinaryContext& ctx, const std::vector<Implication>& rules);

void write_rules(std::ostream& out, OutputFormat format, const BinaryContext& ctx,
                 const std::vector<Implication>& rules);

/// Human readable run summary (no timing).
void write_summary(std::ostream& out, const BinaryContext& ctx, const PipelineStats& stats);

}  // namespace dbasis
