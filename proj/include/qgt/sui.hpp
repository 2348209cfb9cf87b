#pragma once

// Selectors-under-Interference: strong selector sets intersected with disperser neighbourhoods.

#include <cstdint>
#include <optional>
#include <string_view>

#include "qgt/combinatorics.hpp"
#include "qgt/core_model.hpp"
#include "qgt/disperser.hpp"

namespace qgt {

enum class SuiProvenance { singleton, disperser_composed, alpha_chunked };

std::string_view to_string(SuiProvenance p) noexcept;

struct SuiOptions {
    double c2 = 1.0;
    /// Strong selector multiplier; the inner selector is an (n, c*delta)-strong-selector.
    std::uint64_t c = 2;
    std::optional<std::uint32_t> degree;
    std::optional<double> delta;
    /// Overrides c*delta as the inner strong selector's strength.
    std::optional<std::uint32_t> strength;
    /// Compose through the disperser even when the singleton branch would apply.
    bool force_composed = false;
    std::uint64_t seed = 1;
    unsigned retry_cap = 64;
    DisperserFactory factory = build_disperser;
};

struct SuIFamily {
    QuerySequence queries;
    std::uint32_t n = 0;
    std::uint32_t ell = 0;
    double epsilon = 0.5;
    std::uint32_t kappa = 0;
    Count alpha = 0;
    SuiProvenance provenance = SuiProvenance::singleton;

    std::uint32_t degree = 0;              ///< disperser left degree
    std::uint32_t right_nodes = 0;         ///< |W|
    std::size_t selector_length = 0;       ///< m, length of the inner strong selector
    std::size_t selector_occurrence = 0;   ///< queries per element in the inner strong selector
    unsigned disperser_attempts = 0;
    std::uint64_t disperser_seed = 0;

    /// deg * (strong selector occurrences); 1 for the singleton branch.
    std::size_t occurrence_bound() const noexcept;
};

/// (n, ell, epsilon, kappa, alpha)-SuI. Requires alpha*ell > c2*kappa and 0 < epsilon <= 1/2.
/// When n <= m|W| the result is the singleton family.
SuIFamily build_sui(std::uint32_t n, std::uint32_t ell, double epsilon, std::uint32_t kappa, Count alpha,
                    const SuiOptions& options = {});

/// Splits every query into ceil(|S|/alpha) consecutive chunks of at most alpha elements.
QuerySequence chunk_queries(const QuerySequence& queries, Count alpha);

/// Sparse variant for alpha*ell <= c2*kappa: the SuI for the smallest admissible ell
/// above c2*kappa/alpha, chunked to queries of at most alpha elements.
SuIFamily build_sui_rr(std::uint32_t n, std::uint32_t ell, double epsilon, std::uint32_t kappa, Count alpha,
                       const SuiOptions& options = {});

struct SuiReport {
    std::size_t max_unselected = 0;
    double threshold = 0;   ///< epsilon * ell
    bool pass = false;      ///< max_unselected < threshold
    bool exact = true;      ///< false when the search stopped at the first failure
    std::vector<Element> witness_k1;
    std::vector<Element> witness_k2;
};

SuiReport verify_sui(const QuerySequence& family, std::uint32_t n, std::uint32_t ell, double epsilon,
                     std::uint32_t kappa, Count alpha, double budget = kDefaultBudget);

}  // namespace qgt
