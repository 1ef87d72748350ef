#include "dbasis/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "dbasis/hypergraph.hpp"
#include "dbasis/lattice.hpp"
#include "dbasis/oracle.hpp"
#include "dbasis/pipeline.hpp"

namespace dbasis::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Parse>
auto with_input(const std::string& path, Parse parse) {
    if (path == "-") return parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse(in);
}

BinaryContext load_context(const std::string& path, InputFormat format) {
    return with_input(path, [&](std::istream& in) { return parse_context(in, format); });
}

Hypergraph load_edges(const std::string& path) {
    return with_input(path, [](std::istream& in) { return read_edge_list(in); });
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();
    BinaryContext ctx;
    try {
        ctx = load_context(config.input_path, config.input_format);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse;
    }

    RuleQuery query;
    query.basis_kind = config.basis_kind;
    query.min_support = config.min_support;
    query.full_binary_part = config.full_binary_part;
    if (config.target) {
        const auto index = ctx.find_attribute(*config.target);
        if (!index) {
            err << "error: unknown target attribute '" << *config.target << "'\n";
            return exit_code::unknown_target;
        }
        query.target = *index;
    }
    if (config.min_support > ctx.object_count()) {
        err << "error: min-support " << config.min_support << " exceeds the " << ctx.object_count()
            << " rows of the table\n";
        return exit_code::usage;
    }
    if (config.leave_out_k > max_leave_out || config.leave_out_k >= ctx.object_count()) {
        err << "error: leave-out must be at most " << max_leave_out
            << " and below the number of rows\n";
        return exit_code::usage;
    }

    std::vector<Implication> rules;
    if (config.leave_out_k == 0) {
        auto result = compute_basis(ctx, query, config.worker_count);
        rules = std::move(result.rules);
        if (config.summary) write_summary(err, ctx, result.stats);
    } else {
        rules = leave_k_out_rules(ctx, config.leave_out_k, query, config.worker_count);
        if (config.summary)
            err << "table: " << ctx.object_count() << " x " << ctx.attribute_count() << '\n'
                << "leave-out: " << config.leave_out_k << '\n'
                << "rules: " << rules.size() << '\n';
    }
    write_rules(out, config.output_format, ctx, rules);

    if (config.summary) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        err << "wall time: " << elapsed.count() << " s\n";
    }
    return exit_code::ok;
}

int dualize_file(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        const auto h = load_edges(path);
        write_edge_list(out, dualize(minimize(h)));
        return exit_code::ok;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const EdgeListError& e) {
        err << "parse error: " << e.what() << '\n';
    }
    return exit_code::parse;
}

int brute_dualize_file(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        const auto h = load_edges(path);
        write_edge_list(out, oracle::brute_dual(h));
        return exit_code::ok;
    } catch (const oracle::SizeGuardError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::size_guard;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const EdgeListError& e) {
        err << "parse error: " << e.what() << '\n';
    }
    return exit_code::parse;
}

int arrows_file(const std::string& path, InputFormat format, std::ostream& out, std::ostream& err) {
    BinaryContext ctx;
    try {
        ctx = load_context(path, format);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse;
    }
    const auto reduced = reduce(ctx).reduced;
    out << format_arrow_table(reduced, compute_arrows(reduced));
    return exit_code::ok;
}

}  // namespace dbasis::cli
