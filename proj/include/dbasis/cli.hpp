#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dbasis/basis.hpp"
#include "dbasis/context.hpp"
#include "dbasis/report.hpp"

namespace dbasis::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int unknown_target = 3;
inline constexpr int size_guard = 4;
}  // namespace exit_code

struct RunConfig {
    std::string input_path;  ///< "-" reads stdin
    InputFormat input_format = InputFormat::dense_csv;
    std::optional<std::string> target;
    BasisKind basis_kind = BasisKind::d_basis;
    std::size_t min_support = 0;
    std::size_t leave_out_k = 0;
    OutputFormat output_format = OutputFormat::text;
    std::size_t worker_count = 0;  ///< 0 = hardware threads
    std::uint64_t seed = 0;        ///< not used by the exact pipeline
    bool full_binary_part = false;
    bool summary = true;
};

/// Rules to `out`, summary and diagnostics to `err`; returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Minimal transversals of an edge-list file, written as an edge list.
int dualize_file(const std::string& path, std::ostream& out, std::ostream& err);

/// Same through the exhaustive oracle; exit 4 past its size guard.
int brute_dualize_file(const std::string& path, std::ostream& out, std::ostream& err);

/// Reduced table with arrow glyphs.
int arrows_file(const std::string& path, InputFormat format, std::ostream& out, std::ostream& err);

}  // namespace dbasis::cli
