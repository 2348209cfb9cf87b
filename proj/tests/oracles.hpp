#pragma once

// Slow, independent re-implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qgt/core_model.hpp"

namespace oracle {

using qgt::Count;
using qgt::Element;

inline bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d < x; ++d) {
        if (x % d == 0) return false;
    }
    return true;
}

/// Binary of v-1 in b digits followed by its complement, written MSB first.
inline std::string balanced_string(Element v, std::uint32_t n) {
    unsigned b = 0;
    while ((1U << b) < n) ++b;
    std::string high;
    for (unsigned i = 0; i < b; ++i) high.insert(high.begin(), ((v - 1) >> i) & 1U ? '1' : '0');
    std::string low = high;
    for (char& c : low) c = c == '1' ? '0' : '1';
    return high + low;
}

/// Feedback from scratch with std::set semantics.
inline std::vector<Count> feedback(const std::vector<std::vector<Element>>& code, const std::map<Element, Count>& k,
                                   Count alpha) {
    std::vector<Count> out;
    for (const auto& q : code) {
        Count c = 0;
        for (Element v : q) {
            auto it = k.find(v);
            if (it != k.end()) c += it->second;
        }
        out.push_back(std::min(c, alpha));
    }
    return out;
}

inline std::vector<std::vector<Element>> to_lists(const qgt::QuerySequence& code) {
    std::vector<std::vector<Element>> out;
    for (const auto& q : code) out.emplace_back(q.begin(), q.end());
    return out;
}

/// Every subset of [1..n] with at most r elements, by recursion.
inline std::vector<std::vector<Element>> subsets_up_to(std::uint32_t n, std::uint32_t r) {
    std::vector<std::vector<Element>> out;
    std::vector<Element> cur;
    std::function<void(Element)> rec = [&](Element next) {
        out.push_back(cur);
        if (cur.size() == r) return;
        for (Element v = next; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Every multiset over [1..n] with total multiplicity at most t.
inline std::vector<std::map<Element, Count>> multisets_up_to(std::uint32_t n, Count t) {
    std::vector<std::map<Element, Count>> out;
    std::map<Element, Count> cur;
    std::function<void(Element, Count)> rec = [&](Element next, Count left) {
        out.push_back(cur);
        for (Element v = next; v <= n; ++v) {
            for (Count c = 1; c <= left; ++c) {
                cur[v] = c;
                rec(v + 1, left - c);
            }
            cur.erase(v);
        }
    };
    rec(1, t);
    return out;
}

inline qgt::HiddenMultiset to_multiset(const std::map<Element, Count>& m) {
    qgt::HiddenMultiset h;
    for (const auto& [v, c] : m) h.add(v, c);
    return h;
}

/// Largest number of unselected elements over all K1 (|K1| <= ell) and disjoint K2 (|K2| <= kappa),
/// enumerating every size, straight from the definition.
inline std::size_t max_unselected(const std::vector<std::vector<Element>>& family, std::uint32_t n, std::uint32_t ell,
                                  std::uint32_t kappa, Count alpha) {
    const auto all = subsets_up_to(n, std::max(ell, kappa));
    std::size_t best = 0;
    for (const auto& k1 : all) {
        if (k1.size() > ell) continue;
        const std::set<Element> s1(k1.begin(), k1.end());
        for (const auto& k2 : all) {
            if (k2.size() > kappa) continue;
            if (std::any_of(k2.begin(), k2.end(), [&](Element u) { return s1.count(u) > 0; })) continue;
            const std::set<Element> s2(k2.begin(), k2.end());
            std::size_t unselected = 0;
            for (Element v : k1) {
                bool selected = false;
                for (const auto& q : family) {
                    std::size_t in1 = 0, in2 = 0;
                    bool has_v = false;
                    for (Element u : q) {
                        in1 += s1.count(u);
                        in2 += s2.count(u);
                        has_v = has_v || u == v;
                    }
                    if (has_v && in1 == 1 && static_cast<Count>(in2) < alpha) {
                        selected = true;
                        break;
                    }
                }
                if (!selected) ++unselected;
            }
            best = std::max(best, unselected);
        }
    }
    return best;
}

}  // namespace oracle
