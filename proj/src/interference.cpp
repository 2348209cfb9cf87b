#include "qgt/interference.hpp"

#include <algorithm>
#include <bit>

#include "qgt/errors.hpp"

namespace qgt {

bool selects(const QuerySet& s, Element v, const HiddenMultiset& k1, const HiddenMultiset& k2, Count alpha) {
    if (!s.contains(v) || !k1.contains(v)) return false;
    for (const auto& [u, c] : k1) {
        if (u != v && s.contains(u)) return false;
    }
    Count interference = 0;
    for (const auto& [u, c] : k2) {
        if (s.contains(u)) interference += c;
    }
    return interference < alpha;
}

namespace {

/// Can at most `remaining` more elements bring every query in `sel` to >= alpha hits?
/// On success `k2` holds the jamming set.
bool can_jam(std::span<const Mask> sel, Mask k1, Mask& k2, unsigned remaining, Count alpha) {
    const Mask* open = nullptr;
    Count have = 0;
    for (const Mask& q : sel) {
        const Count hits = std::popcount(q & k2);
        if (hits < alpha) {
            open = &q;
            have = hits;
            break;
        }
    }
    if (open == nullptr) return true;
    if (alpha - have > static_cast<Count>(remaining)) return false;
    Mask candidates = *open & ~k2 & ~k1;
    while (candidates) {
        const Mask bit = candidates & (~candidates + 1);
        candidates ^= bit;
        Mask next = k2 | bit;
        if (can_jam(sel, k1, next, remaining - 1, alpha)) {
            k2 = next;
            return true;
        }
    }
    return false;
}

}  // namespace

SelectionResult max_unselected(const QuerySequence& family, std::uint32_t n, std::uint32_t ell,
                               std::uint32_t kappa, Count alpha, std::size_t stop_at, double budget) {
    if (n > 64) throw BudgetError("instance too large for exhaustive oracle (n > 64)");
    const unsigned l = std::min(ell, n);
    const unsigned kap = std::min(kappa, n - l);
    require_budget(binomial(n, l) * std::max(1.0, binomial(n, kap)), budget);

    std::vector<Mask> queries;
    for (const auto& q : family) {
        if (!q.empty()) queries.push_back(to_mask(q));
    }
    stop_at = std::max<std::size_t>(stop_at, 1);

    SelectionResult result;
    std::vector<std::vector<Mask>> sel(n);

    auto record = [&](std::size_t count, Mask k1, Mask k2) {
        if (count > result.max_unselected || result.witness_k1.empty()) {
            result.max_unselected = count;
            result.witness_k1 = mask_elements(k1);
            result.witness_k2 = mask_elements(k2);
        }
    };

    for_each_subset_mask(n, l, [&](Mask k1) {
        for (auto& s : sel) s.clear();
        for (Mask q : queries) {
            const Mask x = q & k1;
            if (x != 0 && (x & (x - 1)) == 0) sel[std::countr_zero(x)].push_back(q);
        }

        std::size_t always = 0;
        std::vector<unsigned> fragile;
        for (Mask rest = k1; rest; rest &= rest - 1) {
            const unsigned v = std::countr_zero(rest);
            if (sel[v].empty()) {
                ++always;
                continue;
            }
            const bool robust = std::any_of(sel[v].begin(), sel[v].end(),
                                            [&](Mask q) { return std::popcount(q) - 1 < alpha; });
            if (!robust) fragile.push_back(v);
        }

        if (always >= stop_at) {
            record(always, k1, 0);
            result.exact = false;
            return false;
        }
        if (fragile.empty()) {
            if (always > result.max_unselected) record(always, k1, 0);
            return true;
        }

        if (always + 1 >= stop_at) {
            // Enough to find one jammable element.
            for (unsigned v : fragile) {
                Mask k2 = 0;
                if (can_jam(sel[v], k1, k2, kap, alpha)) {
                    record(always + 1, k1, k2);
                    result.exact = false;
                    return false;
                }
            }
            if (always > result.max_unselected) record(always, k1, 0);
            return true;
        }

        // General case: enumerate K2 over the union of the fragile selectors.
        Mask universe = 0;
        for (unsigned v : fragile) {
            for (Mask q : sel[v]) universe |= q;
        }
        universe &= ~k1;
        const auto pool = mask_elements(universe);
        const unsigned take = std::min<unsigned>(kap, static_cast<unsigned>(pool.size()));
        bool keep_going = true;
        for_each_combination(static_cast<std::uint32_t>(pool.size()), take, [&](std::span<const std::uint32_t> idx) {
            Mask k2 = 0;
            for (auto i : idx) k2 |= element_bit(pool[i]);
            std::size_t count = always;
            for (unsigned v : fragile) {
                const bool jammed = std::all_of(sel[v].begin(), sel[v].end(),
                                                [&](Mask q) { return std::popcount(q & k2) >= alpha; });
                if (jammed) ++count;
            }
            if (count > result.max_unselected) record(count, k1, k2);
            if (count >= stop_at) {
                result.exact = false;
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });
    return result;
}

}  // namespace qgt
