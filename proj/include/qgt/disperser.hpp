#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgt/combinatorics.hpp"
#include "qgt/core_model.hpp"

namespace qgt {

struct DisperserParams {
    std::uint32_t ell_star = 1;
    double epsilon = 0.25;
    /// Left degree; defaults to ceil(log2(n)^2).
    std::optional<std::uint32_t> degree;
    /// Entropy loss; defaults to ceil(log2(n)^3).
    std::optional<double> delta;
    std::uint64_t seed = 0;

    /// Throws ConfigError unless 0 < epsilon < 1/2, ell_star >= 1 and any explicit degree/delta is positive.
    void validate() const;
};

std::uint32_t default_degree(std::uint32_t n);
double default_delta(std::uint32_t n);
std::uint32_t resolved_degree(std::uint32_t n, const DisperserParams& params);
/// |W| = max(1, ceil(ell_star * degree / delta)).
std::uint32_t right_size(std::uint32_t n, const DisperserParams& params);

/// Left-regular bipartite graph V = [1..nV], W = [1..nW].
class BipartiteGraph {
   public:
    BipartiteGraph(std::uint32_t right, std::vector<std::vector<std::uint32_t>> adjacency);

    std::uint32_t left_size() const noexcept { return static_cast<std::uint32_t>(adjacency_.size()); }
    std::uint32_t right_size() const noexcept { return right_; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint64_t edge_count() const noexcept;

    /// Recorded neighbours of left node v (may repeat).
    std::span<const std::uint32_t> neighbors(Element v) const { return adjacency_.at(v - 1); }
    /// N_G(w) as a query over V.
    QuerySet right_neighborhood(std::uint32_t w) const;
    /// Distinct right neighbours of a left subset.
    std::size_t neighborhood_size(std::span<const Element> left) const;

    /// One line per left node: space-separated right-neighbour indices.
    std::string dump() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

   private:
    std::uint32_t right_;
    std::uint32_t degree_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Seeded random left-regular graph. Neighbours are drawn without replacement while
/// degree <= |W|; beyond that the surplus edges repeat nodes uniformly.
BipartiteGraph build_disperser(std::uint32_t n, const DisperserParams& params);

/// Pluggable source of dispersers; an explicit construction can replace the seeded one.
using DisperserFactory = std::function<BipartiteGraph(std::uint32_t n, const DisperserParams&)>;

struct DispersionMode {
    bool exhaustive = true;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    static DispersionMode exhaustive_check() { return {}; }
    static DispersionMode sampled(std::size_t trials, std::uint64_t seed) { return {false, trials, seed}; }
};

/// Every L of size ell_star (all of them, or the sampled ones) must reach >= (1-epsilon)|W| right nodes.
bool verify_dispersion(const BipartiteGraph& graph, std::uint32_t ell_star, double epsilon,
                       const DispersionMode& mode = {}, double budget = kDefaultBudget);

struct VerifiedDisperser {
    BipartiteGraph graph;
    std::uint64_t seed = 0;
    unsigned attempts = 0;
    bool exhaustive = false;
};

/// Builds with params.seed, seed+1, ... until the graph verifies. Exhaustive when
/// C(n, ell_star) <= exhaustive_budget, sampled otherwise. Throws Error after retry_cap attempts.
VerifiedDisperser build_verified_disperser(std::uint32_t n, const DisperserParams& params,
                                           const DisperserFactory& factory = build_disperser,
                                           unsigned retry_cap = 64, double exhaustive_budget = 5e6,
                                           std::size_t sampled_trials = 4096);

}  // namespace qgt
