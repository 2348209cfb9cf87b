#include "qgt/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "qgt/bounds.hpp"
#include "qgt/decoder.hpp"
#include "qgt/errors.hpp"
#include "qgt/rng.hpp"

namespace qgt {

std::vector<BenchPoint> parse_grid(std::string_view text) {
    std::vector<BenchPoint> points;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string x; words >> x;) w.push_back(x);
        if (w.empty()) continue;
        const std::string where = "line " + std::to_string(number) + ": ";
        if (w.size() < 3 || w.size() > 4) throw FormatError(where + "expected 'n k alpha [mode]'");
        BenchPoint p;
        try {
            std::size_t used = 0;
            p.n = static_cast<std::uint32_t>(std::stoul(w[0], &used));
            if (used != w[0].size()) throw std::invalid_argument("n");
            p.k = static_cast<std::uint32_t>(std::stoul(w[1], &used));
            if (used != w[1].size()) throw std::invalid_argument("k");
            if (w[2] == "k") {
                p.alpha = p.k;
            } else if (w[2] == "sqrtk") {
                p.alpha = std::max<Count>(1, static_cast<Count>(std::floor(std::sqrt(static_cast<double>(p.k)) + 1e-9)));
            } else {
                p.alpha = std::stoll(w[2], &used);
                if (used != w[2].size()) throw std::invalid_argument("alpha");
            }
        } catch (const std::logic_error&) {
            throw FormatError(where + "bad number");
        }
        if (w.size() == 4) {
            if (w[3] != "auto" && !parse_mode(w[3])) throw FormatError(where + "unknown mode '" + w[3] + "'");
            p.mode = w[3];
        }
        points.push_back(p);
    }
    return points;
}

BenchRow run_bench_point(const BenchPoint& point, std::uint64_t seed) {
    BenchRow row;
    row.point = point;
    if (point.mode == "auto") {
        row.mode = choose_mode(point.n, point.k, point.alpha);
    } else if (auto m = parse_mode(point.mode)) {
        row.mode = *m;
    } else {
        throw ConfigError("unknown mode '" + point.mode + "'");
    }

    const auto start = std::chrono::steady_clock::now();
    const GroupTestingCode code = build_code_mode(row.mode, point.n, point.k, point.alpha);
    row.build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.m = code.size();
    row.occurrence_max = code.occurrence_max();

    // One random k-set through the decoder.
    Rng rng(seed);
    std::vector<Element> pool(point.n);
    std::iota(pool.begin(), pool.end(), Element{1});
    HiddenMultiset hidden;
    for (std::uint32_t i = 0; i < point.k; ++i) {
        std::swap(pool[i], pool[i + rng.below(point.n - i)]);
        hidden.add(pool[i]);
    }
    DecodeStats stats;
    const HiddenMultiset got = decode(code, feedback_vector(code.queries(), hidden, point.alpha), {}, &stats);
    if (!(got == hidden)) throw Error("bench decode mismatch");
    row.decode_ops = stats.ops;

    const BoundReport lb = lower_bound(point.n, point.k, point.alpha, row.m);
    row.lb_total = lb.lb_total;
    row.ratio = lb.ratio;
    return row;
}

std::string format_bench_row(const BenchRow& row) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%u,%u,%lld,%s,%zu,%zu,%.3f,%.3f,%.2f,%llu", row.point.n, row.point.k,
                  static_cast<long long>(row.point.alpha), std::string(to_string(row.mode)).c_str(), row.m,
                  row.occurrence_max, row.lb_total, row.ratio, row.build_ms,
                  static_cast<unsigned long long>(row.decode_ops));
    return buf;
}

}  // namespace qgt
