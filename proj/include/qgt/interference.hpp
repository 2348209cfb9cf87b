#pragma once

// Exhaustive oracle for selection under interference, shared by the SuI and SSuI verifiers.

#include <cstdint>
#include <vector>

#include "qgt/combinatorics.hpp"
#include "qgt/core_model.hpp"

namespace qgt {

/// S selects v from K1 under alpha-interference from K2 iff S∩K1 = {v} and |S∩K2| < alpha.
bool selects(const QuerySet& s, Element v, const HiddenMultiset& k1, const HiddenMultiset& k2, Count alpha);

struct SelectionResult {
    /// Largest number of elements of some K1 left unselected by every query.
    /// A lower bound when `exact` is false (the search stopped at the requested level).
    std::size_t max_unselected = 0;
    bool exact = true;
    std::vector<Element> witness_k1;
    std::vector<Element> witness_k2;
};

/// Maximises |unselected(K1, K2)| over |K1| <= ell and |K2| <= kappa with K2 disjoint from K1
/// (the interfering set is the already-known part of the input). Both counts are monotone
/// in the sets, so only the largest sizes are enumerated. Stops as soon as the
/// maximum reaches `stop_at`. Requires n <= 64 and C(n,ell)*C(n,kappa) <= budget.
SelectionResult max_unselected(const QuerySequence& family, std::uint32_t n, std::uint32_t ell,
                               std::uint32_t kappa, Count alpha, std::size_t stop_at,
                               double budget = kDefaultBudget);

}  // namespace qgt
