#include <doctest.h>

#include <set>
#include <sstream>

#include "dbasis/pipeline.hpp"
#include "dbasis/report.hpp"
#include "support.hpp"

using namespace dbasis;
using namespace dbasis::testing;

namespace {

std::string render(const BinaryContext& ctx, const std::vector<Implication>& rules) {
    std::ostringstream out;
    write_jsonl(out, ctx, rules);
    return out.str();
}

bool holds_exactly_without_one_row(const BinaryContext& ctx, const Implication& rule) {
    const Bitset premise = from_indices(ctx.attribute_count(), rule.premise);
    const Bitset rows = ctx.support_of_attributes(premise);
    const Bitset misses = rows - ctx.extent(rule.conclusion);
    return misses.count() <= 1;
}

}  // namespace

TEST_CASE("full pipeline on the worked example") {
    const auto ctx = example8();
    const auto result = compute_basis(ctx, RuleQuery{});
    CHECK(result.stats.reduced_objects == 4);
    CHECK(result.stats.reduced_attributes == 5);
    CHECK(result.stats.binary_rules == 4);
    CHECK(result.stats.refined_away == 1);
    for (const auto& rule : result.rules) {
        CHECK(rule.in_d_basis);
        CHECK(rule.support == rule.premise_support);
    }

    RuleQuery covers;
    covers.basis_kind = BasisKind::minimal_covers;
    const auto all = compute_basis(ctx, covers);
    CHECK(all.rules.size() == result.rules.size() + 1);
    CHECK(all.stats.minimal_cover_rules == all.stats.d_basis_rules + all.stats.refined_away);
}

TEST_CASE("targeted run equals the filtered full run") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        const auto ctx = random_small_context(rng, 8, 10);
        for (auto kind : {BasisKind::d_basis, BasisKind::minimal_covers}) {
            RuleQuery full;
            full.basis_kind = kind;
            const auto everything = compute_basis(ctx, full).rules;
            for (Index target = 0; target < ctx.attribute_count(); ++target) {
                RuleQuery query = full;
                query.target = target;
                auto expected = everything;
                std::erase_if(expected, [&](const Implication& r) { return !is_relevant(r, target); });
                CHECK(compute_basis(ctx, query).rules == expected);
            }
        }
    }
}

TEST_CASE("unknown target index is rejected") {
    RuleQuery query;
    query.target = 99;
    CHECK_THROWS_AS(compute_basis(example8(), query), std::out_of_range);
}

TEST_CASE("output does not depend on the worker count") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 10; ++t) {
        const auto ctx = random_context(rng, 12, 20, 0.3);
        const auto one = compute_basis(ctx, RuleQuery{}, 1);
        const auto eight = compute_basis(ctx, RuleQuery{}, 8);
        CHECK(render(ctx, one.rules) == render(ctx, eight.rules));
        CHECK(one.stats.sectors.size() == eight.stats.sectors.size());
    }
}

TEST_CASE("every emitted rule is sound and premise-minimal") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 100; ++t) {
        const auto ctx = random_small_context(rng, 8, 10);
        RuleQuery query;
        query.basis_kind = BasisKind::minimal_covers;
        for (const auto& rule : compute_basis(ctx, query).rules) {
            const Bitset premise = from_indices(ctx.attribute_count(), rule.premise);
            CHECK(ctx.support_of_attributes(premise).is_subset_of(ctx.extent(rule.conclusion)));
            CHECK(rule.support == rule.premise_support);
            CHECK(rule.confidence() == Ratio{1, 1});
            CHECK_FALSE(premise[rule.conclusion]);
        }
    }
}

TEST_CASE("min support filters on original supports") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 50; ++t) {
        const auto ctx = random_small_context(rng, 8, 10);
        const auto all = compute_basis(ctx, RuleQuery{}).rules;
        RuleQuery query;
        query.min_support = 2;
        const auto result = compute_basis(ctx, query);
        auto expected = all;
        std::erase_if(expected, [](const Implication& r) { return r.support < 2; });
        CHECK(result.rules == expected);
        CHECK(result.stats.below_min_support == all.size() - expected.size());
    }
}

TEST_CASE("leave-k-out with k = 0 is the exact pipeline") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 30; ++t) {
        const auto ctx = random_small_context(rng, 8, 10);
        const auto exact = compute_basis(ctx, RuleQuery{}).rules;
        CHECK(render(ctx, leave_k_out_rules(ctx, 0, RuleQuery{})) == render(ctx, exact));
    }
}

TEST_CASE("leave-one-out rules on random 8 row tables") {
    std::mt19937_64 rng(71);
    std::size_t below_one = 0;
    for (int t = 0; t < 60; ++t) {
        const auto ctx = random_context(rng, 8, 10, 0.5);
        const auto rules = leave_k_out_rules(ctx, 1, RuleQuery{});
        for (const auto& rule : rules) {
            // recount directly
            std::size_t premise_rows = 0, both = 0;
            for (Index i = 0; i < ctx.object_count(); ++i) {
                bool in = true;
                for (auto a : rule.premise) in = in && ctx.has(i, a);
                if (!in) continue;
                ++premise_rows;
                if (ctx.has(i, rule.conclusion)) ++both;
            }
            CHECK(rule.premise_support == premise_rows);
            CHECK(rule.support == both);
            CHECK(both * 8 >= premise_rows * 7);
            CHECK(holds_exactly_without_one_row(ctx, rule));
            if (both != premise_rows) ++below_one;
        }

        // premise-minimal per conclusion
        for (const auto& a : rules)
            for (const auto& b : rules)
                if (a.conclusion == b.conclusion && a.premise != b.premise)
                    CHECK_FALSE(std::includes(a.premise.begin(), a.premise.end(), b.premise.begin(),
                                              b.premise.end()));
    }
    CHECK(below_one > 0);
}

TEST_CASE("leave-k-out guards") {
    const auto ctx = example8();
    CHECK_THROWS_AS(leave_k_out_rules(ctx, 4, RuleQuery{}), std::invalid_argument);
    const std::vector<std::string> rows{"10", "01"};
    CHECK_THROWS_AS(leave_k_out_rules(BinaryContext::from_strings(rows), 2, RuleQuery{}),
                    std::invalid_argument);
    CHECK_NOTHROW(leave_k_out_rules(ctx, 3, RuleQuery{}));
}

TEST_CASE("leave-one-out on the worked example") {
    const auto ctx = example8();
    const auto rules = leave_k_out_rules(ctx, 1, RuleQuery{});
    for (const auto& rule : rules) {
        CHECK(rule.support * 6 >= rule.premise_support * 5);
        CHECK(holds_exactly_without_one_row(ctx, rule));
    }
    RuleQuery strict;
    strict.min_support = 2;
    for (const auto& rule : leave_k_out_rules(ctx, 1, strict)) CHECK(rule.support >= 2);
}
