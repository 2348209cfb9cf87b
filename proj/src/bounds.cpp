#include "qgt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "qgt/errors.hpp"

namespace qgt {

BoundReport lower_bound(std::uint32_t n, std::uint32_t k, Count alpha, std::size_t measured_m) {
    if (n < 1 || k < 1 || alpha < 1) throw ConfigError("lower bound needs n, k, alpha >= 1");
    if (k > n) throw ConfigError("lower bound needs k <= n");
    BoundReport r;
    const double a = static_cast<double>(alpha);
    const double ratio = static_cast<double>(k) / a;
    r.lb_capped_general = std::min(ratio * ratio, static_cast<double>(n) / a);
    const double denom = alpha >= 2 ? std::log2(a) : 1.0;
    r.lb_info = k * std::log2(static_cast<double>(n) / k) / denom;
    r.lb_total = r.lb_capped_general + r.lb_info;
    r.measured_m = measured_m;
    r.ratio = r.lb_total > 0 ? static_cast<double>(measured_m) / r.lb_total : 0.0;
    return r;
}

std::optional<UnjammedWitness> find_unjammed_violation(const QuerySequence& code, std::uint32_t n, std::uint32_t k,
                                                       Count alpha, double budget) {
    if (n > 64) throw BudgetError("instance too large for exhaustive oracle (n > 64)");
    // Adding elements to K only raises intersections, so the largest size suffices.
    const unsigned size = std::min(k, n);
    require_budget(binomial(n, size) * size, budget);
    const std::vector<Mask> masks = to_masks(code);
    std::vector<std::vector<Mask>> containing(n);
    for (Mask q : masks) {
        for (Mask rest = q; rest; rest &= rest - 1) containing[std::countr_zero(rest)].push_back(q);
    }

    std::optional<UnjammedWitness> found;
    for_each_subset_mask(n, size, [&](Mask set) {
        for (Mask rest = set; rest; rest &= rest - 1) {
            const unsigned x = std::countr_zero(rest);
            const bool jammed = std::all_of(containing[x].begin(), containing[x].end(),
                                            [&](Mask q) { return std::popcount(q & set) >= alpha + 2; });
            if (jammed) {
                found = UnjammedWitness{mask_elements(set), x + 1};
                return false;
            }
        }
        return true;
    });
    return found;
}

bool verify_uniqueness(const QuerySequence& code, std::uint32_t n, std::uint32_t k, Count alpha, double budget) {
    if (n > 64) throw BudgetError("instance too large for exhaustive oracle (n > 64)");
    const double sets = count_subsets_up_to(n, std::min(k, n));
    require_budget(sets * std::max<double>(1.0, static_cast<double>(code.size())), budget);
    const std::vector<Mask> masks = to_masks(code);

    auto feedback = [&](Mask set) {
        std::vector<std::uint8_t> fv(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i) {
            fv[i] = static_cast<std::uint8_t>(std::min<Count>(std::popcount(masks[i] & set), alpha));
        }
        return fv;
    };
    auto hash = [](const std::vector<std::uint8_t>& fv) {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : fv) h = (h ^ x) * 1099511628211ULL;
        return h;
    };

    std::unordered_map<std::uint64_t, std::vector<Mask>> buckets;
    for (unsigned size = 0; size <= std::min(k, n); ++size) {
        const bool ok = for_each_subset_mask(n, size, [&](Mask set) {
            const auto fv = feedback(set);
            auto& bucket = buckets[hash(fv)];
            for (Mask other : bucket) {
                if (feedback(other) == fv) return false;
            }
            bucket.push_back(set);
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

bool counting_bound_holds(std::size_t m, Count alpha, std::uint32_t n, std::uint32_t k) noexcept {
    const double sets = count_subsets_up_to(n, std::min(k, n));
    return static_cast<double>(m) * std::log2(static_cast<double>(alpha) + 1.0) >= std::log2(sets) - 1e-9;
}

}  // namespace qgt
