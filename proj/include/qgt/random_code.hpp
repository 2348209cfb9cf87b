#pragma once

// Existential alpha-Round-Robin construction: independent random queries, verified by brute force.

#include <cstdint>
#include <string>
#include <vector>

#include "qgt/code_builder.hpp"
#include "qgt/combinatorics.hpp"
#include "qgt/core_model.hpp"

namespace qgt {

struct RandomCodeParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    Count alpha = 0;
    std::uint64_t t1 = 0;  ///< ceil((8n/alpha)(ln(ne)+4))
    std::uint64_t t2 = 0;  ///< ceil(k(ln(ne)+4))
    double p1 = 0;         ///< alpha/(6n)
    double p2 = 0;         ///< min(1/(6k), alpha/(6n))
    std::uint64_t seed = 0;
};

RandomCodeParams random_code_params(std::uint32_t n, std::uint32_t k, Count alpha, std::uint64_t seed);

struct RandomCode {
    QuerySequence queries;
    RandomCodeParams params;
    /// Round-Robin singletons were returned because t1 + t2 >= n.
    bool fallback = false;

    /// Queries [0, first_part()) form Q1, the rest Q2. Both are the whole code on fallback.
    std::size_t first_part() const noexcept;
};

/// Round-Robin when t1+t2 >= n, otherwise the random queries.
RandomCode build_random_code(std::uint32_t n, std::uint32_t k, Count alpha, std::uint64_t seed);
/// t1 queries with inclusion probability p1 then t2 with p2, never falling back.
RandomCode build_random_queries(const RandomCodeParams& params);

GroupTestingCode to_code(const RandomCode& code);

struct ClaimMode {
    bool exhaustive = true;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    static ClaimMode sampled(std::size_t trials, std::uint64_t seed) { return {false, trials, seed}; }
};

struct ClaimReport {
    bool claim1 = true;  ///< every query has at most alpha elements
    bool claim2 = true;  ///< |K| <= min(k, n/alpha): some Q1 query meets K exactly once
    bool claim3 = true;  ///< n/alpha < |K| <= k: some Q2 query meets K exactly once
    std::string witness1, witness2, witness3;

    bool pass() const noexcept { return claim1 && claim2 && claim3; }
    /// "claim1 pass", "claim2 fail witness=...", one line per claim.
    std::string to_text() const;
};

ClaimReport verify_claims(const RandomCode& code, const ClaimMode& mode = {}, double budget = kDefaultBudget);

struct VerifiedRandomCode {
    RandomCode code;
    ClaimReport report;
    std::uint64_t seed = 0;
    unsigned attempts = 0;
};

/// Retries seed, seed+1, ... until verify_claims passes; throws Error after retry_cap attempts.
VerifiedRandomCode build_verified_random_code(std::uint32_t n, std::uint32_t k, Count alpha, std::uint64_t seed,
                                              const ClaimMode& mode = {}, unsigned retry_cap = 64,
                                              bool allow_fallback = true);

}  // namespace qgt
