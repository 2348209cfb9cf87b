#include <doctest.h>

#include <set>

#include "qgt/disperser.hpp"
#include "qgt/errors.hpp"

using namespace qgt;

TEST_CASE("regular and reproducible") {
    DisperserParams p;
    p.ell_star = 2;
    p.seed = 7;
    const BipartiteGraph a = build_disperser(16, p);
    const BipartiteGraph b = build_disperser(16, p);
    CHECK(a == b);
    CHECK(a.dump() == b.dump());
    CHECK(a.left_size() == 16);
    CHECK(a.degree() == default_degree(16));
    CHECK(a.edge_count() == 16ULL * a.degree());
    for (Element v = 1; v <= 16; ++v) {
        CHECK(a.neighbors(v).size() == a.degree());
        for (auto w : a.neighbors(v)) {
            CHECK(w >= 1);
            CHECK(w <= a.right_size());
        }
    }
    p.degree = 3;
    p.delta = 1.0;
    const BipartiteGraph wide = build_disperser(16, p);
    p.seed = 8;
    CHECK_FALSE(build_disperser(16, p) == wide);
}

TEST_CASE("default sizing") {
    CHECK(default_degree(16) == 16);
    CHECK(default_delta(16) == 64);
    DisperserParams p;
    p.ell_star = 2;
    CHECK(right_size(16, p) == 1);  // 2*16/64 rounds up to 1
    p.degree = 8;
    p.delta = 2.0;
    CHECK(right_size(16, p) == 8);
    const BipartiteGraph g = build_disperser(16, p);
    for (Element v = 1; v <= 16; ++v) {
        std::set<std::uint32_t> distinct(g.neighbors(v).begin(), g.neighbors(v).end());
        CHECK(distinct.size() == 8);  // degree <= |W|: no repeats
    }
}

TEST_CASE("single right node disperses trivially") {
    DisperserParams p;
    p.ell_star = 2;
    const BipartiteGraph g = build_disperser(16, p);
    REQUIRE(g.right_size() == 1);
    CHECK(verify_dispersion(g, 2, 0.25));
}

TEST_CASE("complete and starved graphs") {
    std::vector<std::vector<std::uint32_t>> full(6, {1, 2, 3, 4});
    CHECK(verify_dispersion(BipartiteGraph(4, full), 1, 0.1));
    std::vector<std::vector<std::uint32_t>> starved(6, {1, 2});
    CHECK_FALSE(verify_dispersion(BipartiteGraph(4, starved), 3, 0.25));
    CHECK_FALSE(verify_dispersion(BipartiteGraph(4, starved), 3, 0.25, DispersionMode::sampled(10, 1)));
    CHECK(BipartiteGraph(4, full).right_neighborhood(3) == QuerySet{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(BipartiteGraph(4, {{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(4, {{5}}), std::invalid_argument);
}

TEST_CASE("built disperser verifies exhaustively") {
    DisperserParams p;
    p.ell_star = 4;
    p.epsilon = 0.25;
    p.seed = 3;
    const VerifiedDisperser defaults = build_verified_disperser(32, p);
    CHECK(defaults.exhaustive);
    CHECK(verify_dispersion(defaults.graph, 4, 0.25));

    // |W| = 8 with five edges per node: four nodes must not all miss the same three.
    p.degree = 5;
    p.delta = 2.5;
    const VerifiedDisperser vd = build_verified_disperser(32, p);
    REQUIRE(vd.graph.right_size() == 8);
    CHECK(vd.exhaustive);
    CHECK(vd.attempts >= 1);
    CHECK(verify_dispersion(vd.graph, 4, 0.25));
}

TEST_CASE("reseeding gives up with an error") {
    DisperserParams p;
    p.ell_star = 1;
    p.epsilon = 0.1;
    p.degree = 1;
    p.delta = 0.25;  // |W| = 4 but every left node sees one right node
    CHECK_THROWS_AS(build_verified_disperser(8, p, build_disperser, 3), Error);
}

TEST_CASE("pluggable factory") {
    int calls = 0;
    DisperserFactory complete = [&](std::uint32_t n, const DisperserParams& p) {
        ++calls;
        const std::uint32_t w = right_size(n, p);
        std::vector<std::uint32_t> row(w);
        for (std::uint32_t i = 0; i < w; ++i) row[i] = i + 1;
        return BipartiteGraph(w, std::vector<std::vector<std::uint32_t>>(n, row));
    };
    DisperserParams p;
    p.degree = 3;
    p.delta = 1.0;
    const VerifiedDisperser vd = build_verified_disperser(8, p, complete);
    CHECK(calls == 1);
    CHECK(vd.graph.right_size() == 3);
}

TEST_CASE("parameter validation") {
    DisperserParams p;
    p.epsilon = 0.5;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.epsilon = 0.2;
    p.ell_star = 0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}
