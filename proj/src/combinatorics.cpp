#include "qgt/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qgt/errors.hpp"

namespace qgt {

double binomial(std::uint64_t n, std::uint64_t r) noexcept {
    if (r > n) return 0;
    r = std::min(r, n - r);
    double result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        result = result * static_cast<double>(n - r + i) / static_cast<double>(i);
        if (!std::isfinite(result)) return std::numeric_limits<double>::infinity();
    }
    return std::round(result);
}

double count_subsets_up_to(std::uint64_t n, std::uint64_t r) noexcept {
    double total = 0;
    for (std::uint64_t j = 0; j <= std::min(r, n); ++j) total += binomial(n, j);
    return total;
}

Mask to_mask(const QuerySet& q) {
    Mask m = 0;
    for (Element v : q) {
        if (v < 1 || v > 64) throw BudgetError("instance too large for exhaustive oracle (n > 64)");
        m |= element_bit(v);
    }
    return m;
}

std::vector<Mask> to_masks(const QuerySequence& queries) {
    std::vector<Mask> out;
    out.reserve(queries.size());
    for (const auto& q : queries) out.push_back(to_mask(q));
    return out;
}

std::vector<Element> mask_elements(Mask m) {
    std::vector<Element> out;
    while (m) {
        out.push_back(static_cast<Element>(std::countr_zero(m)) + 1);
        m &= m - 1;
    }
    return out;
}

HiddenMultiset mask_to_set(Mask m) {
    const auto elems = mask_elements(m);
    return HiddenMultiset::from_set(elems);
}

bool for_each_subset_mask(unsigned n, unsigned r, const std::function<bool(Mask)>& visit) {
    if (r > n) return true;
    if (r == 0) return visit(0);
    const Mask limit_bit = n == 64 ? 0 : (Mask{1} << n);
    Mask m = r == 64 ? ~Mask{0} : ((Mask{1} << r) - 1);
    while (true) {
        if (!visit(m)) return false;
        // Gosper's hack: next mask with the same popcount.
        const Mask c = m & (~m + 1);
        const Mask rr = m + c;
        if (rr == 0) return true;  // overflowed past bit 63
        m = (((rr ^ m) >> 2) / c) | rr;
        if (limit_bit != 0 && m >= limit_bit) return true;
    }
}

bool for_each_combination(std::uint32_t n, std::uint32_t r,
                          const std::function<bool(std::span<const std::uint32_t>)>& visit) {
    if (r > n) return true;
    std::vector<std::uint32_t> idx(r);
    for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return false;
        std::int64_t i = static_cast<std::int64_t>(r) - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void require_budget(double work, double budget) {
    if (work > budget) {
        throw BudgetError("instance too large for exhaustive oracle (" + std::to_string(work) + " > budget " +
                          std::to_string(budget) + ")");
    }
}

}  // namespace qgt
