#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgt/code_builder.hpp"

namespace qgt {

struct BenchPoint {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    Count alpha = 0;
    std::string mode = "auto";
};

/// One point per line: "n k alpha [mode]". alpha may be "k" or "sqrtk" (floor of sqrt k).
std::vector<BenchPoint> parse_grid(std::string_view text);

struct BenchRow {
    BenchPoint point;
    Mode mode = Mode::plain;
    std::size_t m = 0;
    std::size_t occurrence_max = 0;
    double lb_total = 0;
    double ratio = 0;
    double build_ms = 0;
    std::uint64_t decode_ops = 0;
};

/// Builds the code, decodes one seeded random k-set and records sizes and costs.
BenchRow run_bench_point(const BenchPoint& point, std::uint64_t seed = 1);

inline constexpr std::string_view kBenchHeader = "n,k,alpha,mode,m,occurrence_max,lb_total,ratio,build_ms,decode_ops";
std::string format_bench_row(const BenchRow& row);

}  // namespace qgt
