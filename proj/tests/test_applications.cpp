#include <doctest.h>

#include <map>
#include <set>

#include "qgt/applications.hpp"
#include "qgt/errors.hpp"
#include "qgt/rng.hpp"

using namespace qgt;

namespace {

std::shared_ptr<const GroupTestingCode> multiset_code(std::uint32_t n, std::uint32_t k, Count alpha) {
    return std::make_shared<const GroupTestingCode>(build_code_multiset(n, k, alpha));
}

}  // namespace

TEST_CASE("insert then delete restores the counters") {
    StreamSketch s(multiset_code(16, 4, 4));
    s.insert(3);
    const auto before = s.counters();
    s.insert(9);
    s.erase(9);
    CHECK(s.counters() == before);
    StreamSketch fresh(multiset_code(16, 4, 4));
    fresh.insert(5);
    for (std::size_t q = 0; q < fresh.counters().size(); ++q) {
        CHECK(fresh.counters()[q] == (fresh.code().queries()[q].contains(5) ? 1 : 0));
    }
    CHECK(fresh.update_cost(5) == fresh.code().column(5).size());
}

TEST_CASE("deleting an absent element fails") {
    StreamSketch s(multiset_code(16, 4, 4));
    CHECK_THROWS_AS(s.erase(2), std::invalid_argument);
    CHECK_THROWS_AS(s.insert(17), std::out_of_range);
    CHECK(s.reconstruct().empty());
}

TEST_CASE("exhaustive reconstruction") {
    const auto code = multiset_code(16, 3, 3);
    for (Element a = 1; a <= 16; ++a) {
        for (Element b = a; b <= 16; ++b) {
            for (Element c = b; c <= 16; ++c) {
                StreamSketch s(code);
                HiddenMultiset want;
                for (Element v : {a, b, c}) {
                    s.insert(v);
                    want.add(v);
                }
                CHECK(s.reconstruct() == want);
            }
        }
    }
}

TEST_CASE("random streams against a shadow multiset") {
    const auto code = multiset_code(64, 6, 6);
    StreamSketch s(code);
    std::map<Element, Count> shadow;
    Count total = 0;
    Rng rng(21);
    for (int op = 0; op < 1000; ++op) {
        const bool insert = total == 0 || (total < 6 && rng.bernoulli(0.5));
        if (insert) {
            const auto v = static_cast<Element>(rng.below(64) + 1);
            s.insert(v);
            ++shadow[v];
            ++total;
        } else {
            auto it = std::next(shadow.begin(), static_cast<long>(rng.below(shadow.size())));
            s.erase(it->first);
            if (--it->second == 0) shadow.erase(it);
            --total;
        }
        HiddenMultiset want;
        for (const auto& [v, c] : shadow) want.add(v, c);
        CHECK(s.reconstruct() == want);
    }
}

TEST_CASE("order does not matter") {
    const auto code = multiset_code(16, 4, 4);
    StreamSketch a(code), b(code);
    for (Element v : {1, 5, 5, 9}) a.insert(v);
    a.erase(5);
    for (Element v : {9, 5, 1}) b.insert(v);
    CHECK(a.counters() == b.counters());
}

TEST_CASE("overfull sketch is flagged") {
    const auto code = std::make_shared<const GroupTestingCode>(build_code(16, 2, 2));
    StreamSketch s(code);
    for (Element v : {1, 2, 3}) s.insert(v);
    CHECK_THROWS_AS(s.reconstruct(), DecodeError);
}

TEST_CASE("edge indices") {
    CHECK(edge_index(1, 2, 4) == 1);
    CHECK(edge_index(1, 3, 4) == 2);
    CHECK(edge_index(1, 4, 4) == 3);
    CHECK(edge_index(2, 3, 4) == 4);
    CHECK(edge_index(2, 4, 4) == 5);
    CHECK(edge_index(3, 4, 4) == 6);
    CHECK(edge_index(4, 3, 4) == 6);
    CHECK(edge_universe(4) == 6);
    CHECK_THROWS_AS(edge_index(2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(1, 5, 4), std::out_of_range);
    for (std::uint32_t nodes = 2; nodes <= 64; ++nodes) {
        for (std::uint32_t u = 1; u <= nodes; ++u) {
            for (std::uint32_t v = u + 1; v <= nodes; ++v) {
                CHECK(edge_endpoints(edge_index(u, v, nodes), nodes) == std::make_pair(u, v));
            }
        }
    }
}

TEST_CASE("graph sketches") {
    GraphSketch empty(6, 2);
    CHECK(empty.reconstruct().empty());

    GraphSketch path(6, 2);
    for (std::uint32_t u = 1; u < 6; ++u) path.add_edge(u, u + 1);
    std::vector<Edge> want;
    for (std::uint32_t u = 1; u < 6; ++u) want.emplace_back(u, u + 1);
    CHECK(path.reconstruct() == want);

    for (int i = 0; i < 5; ++i) {
        path.remove_edge(2, 3);
        path.add_edge(3, 2);
    }
    CHECK(path.reconstruct() == want);
    path.remove_edge(2, 3);
    want.erase(want.begin() + 1);
    CHECK(path.reconstruct() == want);
    CHECK_THROWS_AS(path.remove_edge(2, 3), std::invalid_argument);
}

TEST_CASE("random bounded-degree graphs") {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        GraphSketch g(12, 3);
        std::set<Edge> shadow;
        std::vector<int> degree(13, 0);
        for (int op = 0; op < 60; ++op) {
            const auto u = static_cast<std::uint32_t>(rng.below(12) + 1);
            const auto v = static_cast<std::uint32_t>(rng.below(12) + 1);
            if (u == v) continue;
            const Edge e{std::min(u, v), std::max(u, v)};
            if (shadow.count(e)) {
                g.remove_edge(u, v);
                shadow.erase(e);
                --degree[u];
                --degree[v];
            } else if (degree[u] < 3 && degree[v] < 3) {
                g.add_edge(u, v);
                shadow.insert(e);
                ++degree[u];
                ++degree[v];
            }
        }
        CHECK(g.reconstruct() == std::vector<Edge>(shadow.begin(), shadow.end()));
    }
}
