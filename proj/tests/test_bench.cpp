#include <doctest.h>

#include "qgt/bench.hpp"
#include "qgt/errors.hpp"

using namespace qgt;

TEST_CASE("grid parsing") {
    const auto points = parse_grid("# n k alpha\n1024 16 sqrtk\n1024 8 k plain\n\n64 4 2\n");
    REQUIRE(points.size() == 3);
    CHECK(points[0].alpha == 4);
    CHECK(points[1].alpha == 8);
    CHECK(points[1].mode == "plain");
    CHECK(points[2].mode == "auto");
    CHECK(parse_grid("1024 8 sqrtk")[0].alpha == 2);
    CHECK_THROWS_WITH_AS(parse_grid("1 2\n"), doctest::Contains("line 1"), FormatError);
    CHECK_THROWS_AS(parse_grid("16 2 2 weird\n"), FormatError);
    CHECK_THROWS_AS(parse_grid("16 x 2\n"), FormatError);
}

TEST_CASE("bench rows") {
    const BenchRow row = run_bench_point({64, 4, 2, "auto"});
    CHECK(row.mode == Mode::plain);
    CHECK(row.m > 0);
    CHECK(row.ratio == doctest::Approx(row.m / row.lb_total));
    const std::string line = format_bench_row(row);
    CHECK(std::count(line.begin(), line.end(), ',') == 9);
    CHECK(line.rfind("64,4,2,plain,", 0) == 0);
    CHECK(std::count(kBenchHeader.begin(), kBenchHeader.end(), ',') == 9);
}
