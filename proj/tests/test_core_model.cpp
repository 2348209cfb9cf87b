#include <doctest.h>

#include "oracles.hpp"
#include "qgt/code_builder.hpp"
#include "qgt/combinatorics.hpp"
#include "qgt/core_model.hpp"
#include "qgt/errors.hpp"
#include "qgt/rng.hpp"

using namespace qgt;

TEST_CASE("capped feedback") {
    CHECK(capped_feedback({1, 2, 3}, HiddenMultiset{2, 3, 5}, 2) == 2);
    CHECK(capped_feedback({1, 2}, HiddenMultiset{}, 5) == 0);
    CHECK(capped_feedback({4}, HiddenMultiset{{4, 3}}, 2) == 2);
    CHECK(capped_feedback({4}, HiddenMultiset{{4, 3}}, 5) == 3);
}

TEST_CASE("feedback vectors") {
    const QuerySequence two{{1}, {2}};
    CHECK(feedback_vector(two, HiddenMultiset{1}, 1).values == std::vector<Count>{1, 0});
    CHECK(feedback_vector({{1, 2}}, HiddenMultiset{1, 2}, 1).values == std::vector<Count>{1});
    const QuerySequence code{{1, 3}, {2}, {}, {1, 2, 3, 4}};
    CHECK(feedback_vector(code, {}, 3).values == std::vector<Count>(4, 0));
}

TEST_CASE("distinguishes") {
    CHECK(distinguishes(round_robin(4), HiddenMultiset{1}, HiddenMultiset{2}, 1));
    CHECK_FALSE(distinguishes({{1, 2}}, HiddenMultiset{1}, HiddenMultiset{2}, 1));
    CHECK_THROWS_AS(distinguishes({{1}}, HiddenMultiset{1}, HiddenMultiset{1}, 1), std::invalid_argument);

    const auto code = build_code(16, 2, 2);
    const auto sets = oracle::subsets_up_to(16, 2);
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto& a = sets[rng.below(sets.size())];
        const auto& b = sets[rng.below(sets.size())];
        if (a == b) continue;
        CHECK(distinguishes(code.queries(), HiddenMultiset::from_set(a), HiddenMultiset::from_set(b), 2));
    }
}

TEST_CASE("feedback properties against a set-based oracle") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::uint32_t n = 16;
        QuerySequence code;
        for (int i = 0; i < 6; ++i) {
            std::vector<Element> q;
            for (Element v = 1; v <= n; ++v) {
                if (rng.bernoulli(0.3)) q.push_back(v);
            }
            code.emplace_back(q);
        }
        std::map<Element, Count> k;
        for (int i = 0; i < 4; ++i) k[static_cast<Element>(rng.below(n) + 1)] += 1 + static_cast<Count>(rng.below(2));
        const Count alpha = 1 + static_cast<Count>(rng.below(4));
        const auto hidden = oracle::to_multiset(k);
        const auto fv = feedback_vector(code, hidden, alpha);
        CHECK(fv.values == oracle::feedback(oracle::to_lists(code), k, alpha));
        for (std::size_t i = 0; i < code.size(); ++i) {
            CHECK(fv[i] >= 0);
            CHECK(fv[i] <= alpha);
        }
        // Adding an element never lowers a value.
        auto more = hidden;
        more.add(static_cast<Element>(rng.below(n) + 1));
        const auto fv2 = feedback_vector(code, more, alpha);
        for (std::size_t i = 0; i < code.size(); ++i) CHECK(fv2[i] >= fv[i]);
        CHECK(feedback_vector(code, hidden, alpha) == fv);
    }
}

TEST_CASE("query sets and multisets") {
    const QuerySet q(std::vector<Element>{5, 1, 3, 3});
    CHECK(std::vector<Element>(q.begin(), q.end()) == std::vector<Element>{1, 3, 5});
    CHECK(q.contains(3));
    CHECK_FALSE(q.contains(2));
    CHECK_THROWS_AS(QuerySet::from_sorted({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_range({{0}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_range({{5}}, 4), std::invalid_argument);

    HiddenMultiset m{{3, 2}, {7, 1}};
    CHECK(m.total() == 3);
    CHECK(m.support_size() == 2);
    CHECK_FALSE(m.is_set());
    m.remove(3);
    CHECK(m.is_set());
    m.remove(3);
    CHECK_FALSE(m.contains(3));
    CHECK_THROWS_AS(m.remove(3), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW((Params{16, 2, 2}.validate()));
    CHECK_THROWS_AS((Params{12, 2, 2}.validate()), ConfigError);
    CHECK_THROWS_AS((Params{16, 0, 2}.validate()), ConfigError);
    CHECK_THROWS_AS((Params{16, 17, 2}.validate()), ConfigError);
    CHECK_THROWS_AS((Params{16, 2, 0}.validate()), ConfigError);
    CHECK(log2_exact(1024) == 10);
    CHECK_THROWS_AS(log2_exact(24), ConfigError);
    CHECK(next_power_of_two(5) == 8);
    CHECK(next_power_of_two(8) == 8);
}

TEST_CASE("round robin and occurrence index") {
    const auto rr = round_robin(4);
    CHECK(is_round_robin(rr, 4));
    CHECK_FALSE(is_round_robin({{1}, {2}, {3}}, 4));
    const auto idx = occurrence_index({{1, 2}, {2}, {}}, 2);
    CHECK(idx[0] == std::vector<std::uint32_t>{0});
    CHECK(idx[1] == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("subset enumeration matches recursion") {
    for (unsigned n : {1u, 5u, 9u}) {
        for (unsigned r = 0; r <= n; ++r) {
            std::size_t count = 0;
            for_each_subset_mask(n, r, [&](Mask m) {
                CHECK(std::popcount(m) == static_cast<int>(r));
                ++count;
                return true;
            });
            CHECK(static_cast<double>(count) == binomial(n, r));
        }
        CHECK(count_subsets_up_to(n, n) == static_cast<double>(oracle::subsets_up_to(n, n).size()));
    }
    std::size_t top = 0;
    for_each_subset_mask(64, 63, [&](Mask) { return ++top, true; });
    CHECK(top == 64);
    CHECK_THROWS_AS(require_budget(10, 5), BudgetError);
}

TEST_CASE("rng is reproducible and bounded") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        CHECK(c.below(7) < 7);
        const double u = c.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
