#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "dbasis/cli.hpp"

int main(int argc, char** argv) {
    using namespace dbasis;

    CLI::App app{"Exact implication bases (D-basis) of binary tables"};
    app.require_subcommand(1);

    const std::map<std::string, InputFormat> input_formats{
        {"dense-csv", InputFormat::dense_csv}, {"fimi-transactions", InputFormat::fimi}};
    const std::map<std::string, BasisKind> basis_kinds{
        {"d-basis", BasisKind::d_basis}, {"minimal-covers", BasisKind::minimal_covers}};
    const std::map<std::string, OutputFormat> output_formats{
        {"text", OutputFormat::text}, {"jsonl", OutputFormat::jsonl}};

    cli::RunConfig config;
    auto* run = app.add_subcommand("run", "Compute the basis of a table");
    run->add_option("--input", config.input_path, "Input table ('-' for stdin)")->required();
    run->add_option("--format", config.input_format, "Input format")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
    run->add_option("--target", config.target, "Only rules concluding in this attribute");
    run->add_option("--basis", config.basis_kind, "Basis kind")
        ->transform(CLI::CheckedTransformer(basis_kinds, CLI::ignore_case));
    run->add_option("--min-support", config.min_support, "Minimum rule support (rows)");
    run->add_option("--leave-out", config.leave_out_k, "Rows left out per subtable (0..3)");
    run->add_option("--output", config.output_format, "Output format")
        ->transform(CLI::CheckedTransformer(output_formats, CLI::ignore_case));
    run->add_option("--workers", config.worker_count, "Worker threads (0 = auto)");
    run->add_option("--seed", config.seed, "Reserved for generators");
    run->add_flag("--full-binary", config.full_binary_part,
                  "Emit every pair of the attribute order, not only covers");
    bool quiet = false;
    run->add_flag("--quiet", quiet, "No summary on stderr");

    std::string edges_path;
    auto* dualize = app.add_subcommand("dualize", "Minimal transversals of an edge-list file");
    dualize->add_option("input", edges_path, "Edge-list file ('-' for stdin)")->required();

    auto* brute = app.add_subcommand("brute-dualize", "Exhaustive dualization (<= 20 vertices)");
    brute->add_option("input", edges_path, "Edge-list file ('-' for stdin)")->required();

    std::string table_path;
    InputFormat arrows_format = InputFormat::dense_csv;
    auto* arrows = app.add_subcommand("arrows", "Print the reduced table with arrow relations");
    arrows->add_option("--input", table_path, "Input table ('-' for stdin)")->required();
    arrows->add_option("--format", arrows_format, "Input format")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : cli::exit_code::usage;
    }

    if (*run) {
        config.summary = !quiet;
        return cli::run(config, std::cout, std::cerr);
    }
    if (*dualize) return cli::dualize_file(edges_path, std::cout, std::cerr);
    if (*brute) return cli::brute_dualize_file(edges_path, std::cout, std::cerr);
    return cli::arrows_file(table_path, arrows_format, std::cout, std::cerr);
}
