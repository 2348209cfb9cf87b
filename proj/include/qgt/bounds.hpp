#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qgt/combinatorics.hpp"
#include "qgt/core_model.hpp"

namespace qgt {

struct BoundReport {
    double lb_capped_general = 0;  ///< min((k/alpha)^2, n/alpha)
    double lb_info = 0;            ///< k log2(n/k) / log2(alpha), log2(2) for alpha = 1
    double lb_total = 0;
    std::size_t measured_m = 0;
    double ratio = 0;              ///< measured_m / lb_total (0 when lb_total is 0)
};

/// Evaluates the lower-bound expression with all hidden constants set to 1.
BoundReport lower_bound(std::uint32_t n, std::uint32_t k, Count alpha, std::size_t measured_m = 0);

struct UnjammedWitness {
    std::vector<Element> set;
    Element element = 0;
};

/// A set K (|K| <= k) and x in K such that every query containing x meets K in at least
/// alpha+2 elements, making K and K\{x} indistinguishable under some alpha-capped feedback.
std::optional<UnjammedWitness> find_unjammed_violation(const QuerySequence& code, std::uint32_t n, std::uint32_t k,
                                                       Count alpha, double budget = kDefaultBudget);

/// All sets with |K| <= k have pairwise distinct feedback vectors.
bool verify_uniqueness(const QuerySequence& code, std::uint32_t n, std::uint32_t k, Count alpha,
                       double budget = kDefaultBudget);

/// (alpha+1)^m >= number of sets with |K| <= k.
bool counting_bound_holds(std::size_t m, Count alpha, std::uint32_t n, std::uint32_t k) noexcept;

}  // namespace qgt
