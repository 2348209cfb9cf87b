#include <doctest.h>

#include <cmath>

#include "qgt/bounds.hpp"
#include "qgt/errors.hpp"
#include "qgt/random_code.hpp"

using namespace qgt;

TEST_CASE("parameters") {
    const auto p = random_code_params(64, 4, 8, 0);
    CHECK(p.t1 == 587);
    CHECK(p.t2 == static_cast<std::uint64_t>(std::ceil(4 * (std::log(64.0) + 1 + 4))));
    CHECK(p.p1 == doctest::Approx(8.0 / 384));
    CHECK(p.p2 == doctest::Approx(std::min(1.0 / 24, 8.0 / 384)));
    CHECK_THROWS_AS(random_code_params(1, 1, 1, 0), ConfigError);
}

TEST_CASE("fallback to singletons") {
    const RandomCode c = build_random_code(32, 3, 8, 1);
    CHECK(c.fallback);
    CHECK(c.queries == round_robin(32));
    CHECK(verify_claims(c).pass());
    const auto p = c.params;
    CHECK(c.queries.size() == std::min<std::uint64_t>(p.t1 + p.t2, 32));
}

TEST_CASE("random queries are reproducible") {
    const auto p = random_code_params(32, 3, 8, 17);
    const RandomCode a = build_random_queries(p);
    const RandomCode b = build_random_queries(p);
    CHECK(a.queries == b.queries);
    CHECK(a.queries.size() == p.t1 + p.t2);
    CHECK(a.first_part() == p.t1);
    auto q = p;
    q.seed = 18;
    CHECK_FALSE(build_random_queries(q).queries == a.queries);
}

TEST_CASE("claims on random queries") {
    const VerifiedRandomCode v = build_verified_random_code(32, 3, 8, 1, {}, 64, false);
    CHECK(v.report.pass());
    CHECK_FALSE(v.code.fallback);
    CHECK(v.attempts >= 1);
    CHECK(verify_uniqueness(v.code.queries, 32, 3, 8));

    RandomCode broken = v.code;
    broken.queries[0] = QuerySet{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const ClaimReport r = verify_claims(broken);
    CHECK_FALSE(r.claim1);
    CHECK(r.to_text().find("claim1 fail witness=query 1 size 10") != std::string::npos);
}

TEST_CASE("missing second part fails claim three") {
    auto p = random_code_params(16, 3, 8, 0);
    RandomCode c;
    c.params = p;
    c.queries = QuerySequence(p.t1 + p.t2);
    for (std::size_t i = 0; i < p.t1 && i < 16; ++i) c.queries[i] = QuerySet{static_cast<Element>(i + 1)};
    const ClaimReport r = verify_claims(c);
    CHECK(r.claim1);
    CHECK(r.claim2);
    CHECK_FALSE(r.claim3);
    CHECK_FALSE(r.witness3.empty());
}

TEST_CASE("sampled claims agree on a good code") {
    const VerifiedRandomCode v = build_verified_random_code(32, 3, 8, 1, {}, 64, false);
    CHECK(verify_claims(v.code, ClaimMode::sampled(2000, 4)).pass());
}

TEST_CASE("exhaustive check respects the budget") {
    const RandomCode c = build_random_code(64, 6, 2, 0);
    CHECK_THROWS_AS(verify_claims(c, {}, 1e3), BudgetError);
}
