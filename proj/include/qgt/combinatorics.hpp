#pragma once

// Enumeration helpers shared by the exhaustive oracles.

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qgt/core_model.hpp"

namespace qgt {

/// Default cap on the number of candidate configurations an exhaustive oracle may enumerate.
inline constexpr double kDefaultBudget = 2e9;

/// C(n, r) in floating point (saturates to +inf rather than overflowing).
double binomial(std::uint64_t n, std::uint64_t r) noexcept;
/// Sum of C(n, j) for j = 0..r.
double count_subsets_up_to(std::uint64_t n, std::uint64_t r) noexcept;

using Mask = std::uint64_t;

inline Mask element_bit(Element v) noexcept { return Mask{1} << (v - 1); }

/// Bitmask over [1..64]; throws BudgetError if the query holds an element above 64.
Mask to_mask(const QuerySet& q);
std::vector<Mask> to_masks(const QuerySequence& queries);
std::vector<Element> mask_elements(Mask m);
HiddenMultiset mask_to_set(Mask m);

/// Visits every r-subset of [1..n] (n <= 64) as a mask in increasing numeric order.
/// Stops early when the visitor returns false; returns false in that case.
bool for_each_subset_mask(unsigned n, unsigned r, const std::function<bool(Mask)>& visit);

/// Visits every r-combination of {0..n-1} as increasing indices. Same early-exit contract.
bool for_each_combination(std::uint32_t n, std::uint32_t r,
                          const std::function<bool(std::span<const std::uint32_t>)>& visit);

/// Throws BudgetError("instance too large for exhaustive oracle") when work exceeds budget.
void require_budget(double work, double budget);

}  // namespace qgt
