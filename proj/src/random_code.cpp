#include "qgt/random_code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qgt/errors.hpp"
#include "qgt/rng.hpp"

namespace qgt {

RandomCodeParams random_code_params(std::uint32_t n, std::uint32_t k, Count alpha, std::uint64_t seed) {
    if (n < 2) throw ConfigError("random code needs n >= 2");
    if (k < 1 || k > n) throw ConfigError("random code needs 1 <= k <= n");
    if (alpha < 1) throw ConfigError("random code needs alpha >= 1");
    RandomCodeParams p;
    p.n = n;
    p.k = k;
    p.alpha = alpha;
    p.seed = seed;
    const double lg = std::log(static_cast<double>(n)) + 1.0 + 4.0;
    const double a = static_cast<double>(alpha);
    p.t1 = static_cast<std::uint64_t>(std::ceil(8.0 * n / a * lg));
    p.t2 = static_cast<std::uint64_t>(std::ceil(k * lg));
    p.p1 = std::min(1.0, a / (6.0 * n));
    p.p2 = std::min({1.0, 1.0 / (6.0 * k), a / (6.0 * n)});
    return p;
}

std::size_t RandomCode::first_part() const noexcept {
    return fallback ? queries.size() : static_cast<std::size_t>(params.t1);
}

RandomCode build_random_queries(const RandomCodeParams& params) {
    RandomCode code;
    code.params = params;
    Rng rng(params.seed);
    auto draw = [&](std::uint64_t count, double p) {
        for (std::uint64_t i = 0; i < count; ++i) {
            std::vector<Element> q;
            for (Element v = 1; v <= params.n; ++v) {
                if (rng.bernoulli(p)) q.push_back(v);
            }
            code.queries.push_back(QuerySet::from_sorted(std::move(q)));
        }
    };
    draw(params.t1, params.p1);
    draw(params.t2, params.p2);
    return code;
}

RandomCode build_random_code(std::uint32_t n, std::uint32_t k, Count alpha, std::uint64_t seed) {
    const RandomCodeParams params = random_code_params(n, k, alpha, seed);
    if (params.t1 + params.t2 >= n) {
        RandomCode code;
        code.params = params;
        code.queries = round_robin(n);
        code.fallback = true;
        return code;
    }
    return build_random_queries(params);
}

GroupTestingCode to_code(const RandomCode& code) {
    return GroupTestingCode(Params{code.params.n, code.params.k, code.params.alpha}, Mode::random, code.queries, {});
}

namespace {

std::string format_set(std::span<const Element> set) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
    out << '}';
    return out.str();
}

struct Range {
    std::size_t begin, end;
};

}  // namespace

std::string ClaimReport::to_text() const {
    std::ostringstream out;
    auto line = [&](int i, bool ok, const std::string& w) {
        out << "claim" << i << (ok ? " pass" : " fail");
        if (!ok && !w.empty()) out << " witness=" << w;
        out << '\n';
    };
    line(1, claim1, witness1);
    line(2, claim2, witness2);
    line(3, claim3, witness3);
    return out.str();
}

ClaimReport verify_claims(const RandomCode& code, const ClaimMode& mode, double budget) {
    const auto& p = code.params;
    const std::uint32_t n = p.n;
    ClaimReport report;

    for (std::size_t i = 0; i < code.queries.size(); ++i) {
        if (static_cast<Count>(code.queries[i].size()) > p.alpha) {
            report.claim1 = false;
            report.witness1 = "query " + std::to_string(i + 1) + " size " + std::to_string(code.queries[i].size());
            break;
        }
    }

    const std::size_t m = code.queries.size();
    const Range q1{0, code.first_part()};
    const Range q2{code.fallback ? 0 : code.first_part(), m};
    const auto small = static_cast<std::uint32_t>(std::min<Count>(p.k, static_cast<Count>(n) / p.alpha));

    if (mode.exhaustive) {
        require_budget(count_subsets_up_to(n, p.k), budget);
        const std::vector<Mask> masks = to_masks(code.queries);
        auto hit_once = [&](Mask set, Range r) {
            for (std::size_t i = r.begin; i < r.end; ++i) {
                const Mask x = masks[i] & set;
                if (x != 0 && (x & (x - 1)) == 0) return true;
            }
            return false;
        };
        auto check = [&](std::uint32_t lo, std::uint32_t hi, Range r, bool& ok, std::string& witness) {
            for (std::uint32_t size = lo; size <= hi && ok; ++size) {
                for_each_subset_mask(n, size, [&](Mask set) {
                    if (hit_once(set, r)) return true;
                    ok = false;
                    witness = format_set(mask_elements(set));
                    return false;
                });
            }
        };
        check(1, small, q1, report.claim2, report.witness2);
        check(small + 1, p.k, q2, report.claim3, report.witness3);
        return report;
    }

    const auto columns = occurrence_index(code.queries, n);
    std::vector<std::uint32_t> hits(m, 0);
    auto hit_once = [&](std::span<const Element> set, Range r) {
        std::fill(hits.begin(), hits.end(), 0);
        for (Element v : set) {
            for (auto q : columns[v - 1]) ++hits[q];
        }
        for (std::size_t i = r.begin; i < r.end; ++i) {
            if (hits[i] == 1) return true;
        }
        return false;
    };
    Rng rng(mode.seed);
    std::vector<Element> pool(n);
    std::iota(pool.begin(), pool.end(), Element{1});
    auto sample = [&](std::uint32_t lo, std::uint32_t hi, Range r, bool& ok, std::string& witness) {
        if (lo > hi) return;
        for (std::size_t t = 0; t < mode.trials && ok; ++t) {
            const auto size = lo + static_cast<std::uint32_t>(rng.below(hi - lo + 1));
            for (std::uint32_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
            std::vector<Element> set(pool.begin(), pool.begin() + size);
            std::sort(set.begin(), set.end());
            if (!hit_once(set, r)) {
                ok = false;
                witness = format_set(set);
            }
        }
    };
    sample(1, small, q1, report.claim2, report.witness2);
    sample(small + 1, p.k, q2, report.claim3, report.witness3);
    return report;
}

VerifiedRandomCode build_verified_random_code(std::uint32_t n, std::uint32_t k, Count alpha, std::uint64_t seed,
                                              const ClaimMode& mode, unsigned retry_cap, bool allow_fallback) {
    for (unsigned i = 0; i < std::max(retry_cap, 1u); ++i) {
        const std::uint64_t s = seed + i;
        RandomCode code =
            allow_fallback ? build_random_code(n, k, alpha, s) : build_random_queries(random_code_params(n, k, alpha, s));
        ClaimReport report = verify_claims(code, mode);
        if (report.pass()) return VerifiedRandomCode{std::move(code), std::move(report), s, i + 1};
    }
    throw Error("random code failed its claims after " + std::to_string(retry_cap) + " seeds");
}

}  // namespace qgt
