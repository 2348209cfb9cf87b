#pragma once

// Streaming multiset maintenance and dynamic graph reconstruction over a Group Testing code.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qgt/code_builder.hpp"
#include "qgt/core_model.hpp"
#include "qgt/decoder.hpp"

namespace qgt {

/// Exact per-query counters; the cap is applied only when reconstructing.
class StreamSketch {
   public:
    explicit StreamSketch(std::shared_ptr<const GroupTestingCode> code);

    void insert(Element v);
    /// Throws std::invalid_argument when some counter of v's column is already 0.
    void erase(Element v);

    /// Caps the counters at alpha and decodes. Throws DecodeError ("capacity exceeded ...")
    /// when the current contents cannot be reconstructed.
    HiddenMultiset reconstruct(DecodeStats* stats = nullptr) const;
    FeedbackVector capped_counters() const;

    const std::vector<Count>& counters() const noexcept { return counters_; }
    const GroupTestingCode& code() const noexcept { return *code_; }
    /// Counters touched by an update of v.
    std::size_t update_cost(Element v) const { return code_->column(v).size(); }

   private:
    std::shared_ptr<const GroupTestingCode> code_;
    std::vector<Count> counters_;
};

/// 1 <= u < v <= nodes -> row-major triangular index in [1..nodes(nodes-1)/2].
std::uint32_t edge_index(std::uint32_t u, std::uint32_t v, std::uint32_t nodes);
std::pair<std::uint32_t, std::uint32_t> edge_endpoints(std::uint32_t index, std::uint32_t nodes);
std::uint32_t edge_universe(std::uint32_t nodes) noexcept;

using Edge = std::pair<std::uint32_t, std::uint32_t>;

class GraphSketch {
   public:
    /// Code over the edge universe (padded to a power of 2) for up to
    /// min(max_degree*nodes/2, edge_budget) edges. alpha defaults to that edge capacity.
    GraphSketch(std::uint32_t nodes, std::uint32_t max_degree, std::optional<Count> alpha = std::nullopt,
                std::optional<std::uint32_t> edge_budget = std::nullopt);

    void add_edge(std::uint32_t u, std::uint32_t v);
    void remove_edge(std::uint32_t u, std::uint32_t v);
    /// Sorted edge list (u < v).
    std::vector<Edge> reconstruct(DecodeStats* stats = nullptr) const;

    std::uint32_t nodes() const noexcept { return nodes_; }
    std::uint32_t edge_capacity() const noexcept { return capacity_; }
    const StreamSketch& sketch() const noexcept { return sketch_; }

   private:
    std::uint32_t nodes_;
    std::uint32_t capacity_;
    StreamSketch sketch_;
};

}  // namespace qgt
