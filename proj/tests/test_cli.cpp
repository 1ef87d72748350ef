#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dbasis/cli.hpp"
#include "support.hpp"

using namespace dbasis;
using namespace dbasis::testing;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(cli::RunConfig config) {
    std::ostringstream out, err;
    const int code = cli::run(config, out, err);
    return {code, out.str(), err.str()};
}

cli::RunConfig example_config() {
    cli::RunConfig config;
    config.input_path = fixture_path("example8.csv");
    return config;
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("dbasis_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}  // namespace

TEST_CASE("targeted d-basis run on the worked example") {
    auto config = example_config();
    config.target = "b";
    const auto r = run(config);
    REQUIRE(r.code == cli::exit_code::ok);
    CHECK(has_line(r.out, "a1 c2 -> b [support=1, confidence=1, d_basis=true]"));
    CHECK(has_line(r.out, "a2 c1 -> b [support=1, confidence=1, d_basis=true]"));
    CHECK(has_line(r.out, "b -> c1 [support=2, confidence=1, d_basis=true]"));
    CHECK(has_line(r.out, "b -> c2 [support=2, confidence=1, d_basis=true]"));
    CHECK(has_line(r.out, "v -> b [support=1, confidence=1, d_basis=true]"));
    CHECK(r.out.find("a1 a2 -> b") == std::string::npos);
    CHECK(r.err.find("refined away: 1") != std::string::npos);
    CHECK(r.err.find("wall time:") != std::string::npos);
}

TEST_CASE("minimal covers keep the refined rule") {
    auto config = example_config();
    config.target = "b";
    config.basis_kind = BasisKind::minimal_covers;
    config.summary = false;
    const auto r = run(config);
    CHECK(has_line(r.out, "a1 a2 -> b [support=1, confidence=1, d_basis=false]"));
    CHECK(r.err.empty());
}

TEST_CASE("full run covers the expansion rules") {
    auto config = example_config();
    config.summary = false;
    const auto r = run(config);
    CHECK(has_line(r.out, "c1 -> u [support=5, confidence=1, d_basis=true]"));
    CHECK(has_line(r.out, "u -> c1 [support=5, confidence=1, d_basis=true]"));
    CHECK(has_line(r.out, "a2 c1 -> v [support=1, confidence=1, d_basis=true]"));
    for (const auto& x : {"b", "a1", "a2", "c1", "c2", "u"})
        CHECK(has_line(r.out, std::string("v -> ") + x + " [support=1, confidence=1, d_basis=true]"));
}

TEST_CASE("jsonl output schema") {
    auto config = example_config();
    config.output_format = OutputFormat::jsonl;
    config.summary = false;
    const auto r = run(config);
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    int lines = 0;
    for (std::string line; std::getline(in, line); ++lines) {
        const auto j = nlohmann::ordered_json::parse(line);
        std::vector<std::string> keys;
        for (const auto& item : j.items()) keys.push_back(item.key());
        CHECK(keys == std::vector<std::string>{"premise", "conclusion", "support", "premise_support",
                                               "confidence_num", "confidence_den", "in_d_basis"});
        CHECK(j["premise"].is_array());
        CHECK(j["in_d_basis"].get<bool>());
    }
    CHECK(lines > 10);
}

TEST_CASE("leave-one-out reports fractional confidences") {
    const auto path = temp_file("loo.csv", "p,q\n1,1,1\n2,1,1\n3,1,0\n4,0,0\n");
    cli::RunConfig config;
    config.input_path = path;
    config.leave_out_k = 1;
    config.summary = false;
    const auto r = run(config);
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "-> p [support=3, confidence=3/4, d_basis=true]"));
    // p -> q holds in 2 of 3 rows, under the 3/4 threshold
    CHECK(r.out.find("p -> q") == std::string::npos);
}

TEST_CASE("fimi input through the cli") {
    const auto path = temp_file("t.fimi", "1 2\n1 2 3\n3\n");
    cli::RunConfig config;
    config.input_path = path;
    config.input_format = InputFormat::fimi;
    config.summary = false;
    const auto r = run(config);
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "1 -> 2 [support=2, confidence=1, d_basis=true]"));
    CHECK(has_line(r.out, "2 -> 1 [support=2, confidence=1, d_basis=true]"));
}

TEST_CASE("exit codes") {
    cli::RunConfig missing;
    missing.input_path = "/nonexistent/table.csv";
    CHECK(run(missing).code == cli::exit_code::parse);

    cli::RunConfig malformed;
    malformed.input_path = temp_file("bad.csv", "a,b\nx,1,2\n");
    const auto r = run(malformed);
    CHECK(r.code == cli::exit_code::parse);
    CHECK(r.err.find("parse error") != std::string::npos);

    auto unknown = example_config();
    unknown.target = "zz";
    CHECK(run(unknown).code == cli::exit_code::unknown_target);

    auto too_much = example_config();
    too_much.min_support = 7;
    CHECK(run(too_much).code == cli::exit_code::usage);

    auto leave = example_config();
    leave.leave_out_k = 4;
    CHECK(run(leave).code == cli::exit_code::usage);

    std::ostringstream out, err;
    const auto wide = temp_file("wide.edges", "0 21\n");
    CHECK(cli::brute_dualize_file(wide, out, err) == cli::exit_code::size_guard);
}

TEST_CASE("dualize and arrows subcommands") {
    std::ostringstream out, err;
    CHECK(cli::dualize_file(fixture_path("example8_sector_b.edges"), out, err) == 0);
    CHECK(out.str() == read_fixture("example8_sector_b.dual"));

    std::ostringstream brute;
    CHECK(cli::brute_dualize_file(fixture_path("example8_sector_b.edges"), brute, err) == 0);
    CHECK(brute.str() == read_fixture("example8_sector_b.dual"));

    std::ostringstream arrows;
    CHECK(cli::arrows_file(fixture_path("example8.csv"), InputFormat::dense_csv, arrows, err) == 0);
    CHECK(arrows.str() == read_fixture("example8_arrows.txt"));
}

TEST_CASE("summary counts on a 10 x 22 table") {
    std::mt19937_64 rng(89);
    const auto ctx = random_context(rng, 10, 22, 0.4);
    std::ostringstream csv;
    for (const auto& a : ctx.attributes()) csv << ',' << a;
    csv << '\n';
    for (Index i = 0; i < ctx.object_count(); ++i) {
        csv << ctx.object_label(i);
        for (Index j = 0; j < ctx.attribute_count(); ++j) csv << ',' << (ctx.has(i, j) ? 1 : 0);
        csv << '\n';
    }
    cli::RunConfig config;
    config.input_path = temp_file("t10x22.csv", csv.str());
    config.basis_kind = BasisKind::minimal_covers;
    const auto r = run(config);
    REQUIRE(r.code == 0);

    auto count = [&](const std::string& key) {
        const auto at = r.err.find(key + ": ");
        REQUIRE(at != std::string::npos);
        return std::stoul(r.err.substr(at + key.size() + 2));
    };
    const auto covers = count("minimal-covers rules");
    const auto d_basis = count("d-basis rules");
    const auto refined = count("refined away");
    CHECK(covers == d_basis + refined);
    std::size_t lines = 0, flagged = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line); ++lines)
        if (line.find("d_basis=true") != std::string::npos) ++flagged;
    CHECK(lines == covers);
    CHECK(flagged == d_basis);
}
