#include "qgt/applications.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qgt/errors.hpp"

namespace qgt {

StreamSketch::StreamSketch(std::shared_ptr<const GroupTestingCode> code) : code_(std::move(code)) {
    if (!code_) throw std::invalid_argument("stream sketch needs a code");
    if (code_->mode() == Mode::random) throw ConfigError("stream sketch needs a decodable code");
    counters_.assign(code_->size(), 0);
}

namespace {

void check_element(Element v, std::uint32_t n) {
    if (v < 1 || v > n) throw std::out_of_range("element " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
}

}  // namespace

void StreamSketch::insert(Element v) {
    check_element(v, code_->params().n);
    for (auto q : code_->column(v)) ++counters_[q];
}

void StreamSketch::erase(Element v) {
    check_element(v, code_->params().n);
    const auto col = code_->column(v);
    if (std::any_of(col.begin(), col.end(), [&](std::uint32_t q) { return counters_[q] == 0; })) {
        throw std::invalid_argument("cannot delete element " + std::to_string(v) + ": it is not present");
    }
    for (auto q : col) --counters_[q];
}

FeedbackVector StreamSketch::capped_counters() const {
    FeedbackVector fv;
    fv.values.reserve(counters_.size());
    const Count alpha = code_->params().alpha;
    for (Count c : counters_) fv.values.push_back(std::min(c, alpha));
    return fv;
}

HiddenMultiset StreamSketch::reconstruct(DecodeStats* stats) const {
    try {
        return decode(*code_, capped_counters(), {}, stats);
    } catch (const DecodeError& e) {
        throw DecodeError(std::string("capacity exceeded or contents not decodable: ") + e.what());
    }
}

std::uint32_t edge_universe(std::uint32_t nodes) noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(nodes) * (nodes - (nodes > 0 ? 1 : 0)) / 2);
}

std::uint32_t edge_index(std::uint32_t u, std::uint32_t v, std::uint32_t nodes) {
    if (u == v) throw std::invalid_argument("self loops have no edge index");
    if (u > v) std::swap(u, v);
    if (u < 1 || v > nodes) throw std::out_of_range("edge endpoint outside [1..nodes]");
    const std::uint64_t row = static_cast<std::uint64_t>(u - 1) * (2ULL * nodes - u) / 2;
    return static_cast<std::uint32_t>(row + (v - u));
}

std::pair<std::uint32_t, std::uint32_t> edge_endpoints(std::uint32_t index, std::uint32_t nodes) {
    if (index < 1 || index > edge_universe(nodes)) throw std::out_of_range("edge index outside the universe");
    std::uint32_t u = 1;
    std::uint32_t rest = index;
    while (rest > nodes - u) {
        rest -= nodes - u;
        ++u;
    }
    return {u, u + rest};
}

namespace {

std::uint32_t graph_capacity(std::uint32_t nodes, std::uint32_t max_degree, std::optional<std::uint32_t> budget) {
    if (nodes < 2) throw ConfigError("graph sketch needs at least 2 nodes");
    if (max_degree < 1) throw ConfigError("graph sketch needs max_degree >= 1");
    std::uint64_t cap = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(max_degree) * nodes / 2);
    cap = std::min<std::uint64_t>(cap, edge_universe(nodes));
    if (budget) cap = std::min<std::uint64_t>(cap, std::max<std::uint32_t>(*budget, 1));
    return static_cast<std::uint32_t>(cap);
}

std::shared_ptr<const GroupTestingCode> graph_code(std::uint32_t nodes, std::uint32_t capacity, Count alpha) {
    const auto n = static_cast<std::uint32_t>(next_power_of_two(std::max<std::uint32_t>(edge_universe(nodes), 2)));
    return std::make_shared<const GroupTestingCode>(build_code_mode(choose_mode(n, capacity, alpha), n, capacity, alpha));
}

}  // namespace

GraphSketch::GraphSketch(std::uint32_t nodes, std::uint32_t max_degree, std::optional<Count> alpha,
                         std::optional<std::uint32_t> edge_budget)
    : nodes_(nodes),
      capacity_(graph_capacity(nodes, max_degree, edge_budget)),
      sketch_(graph_code(nodes, capacity_, alpha.value_or(capacity_))) {}

void GraphSketch::add_edge(std::uint32_t u, std::uint32_t v) { sketch_.insert(edge_index(u, v, nodes_)); }

void GraphSketch::remove_edge(std::uint32_t u, std::uint32_t v) { sketch_.erase(edge_index(u, v, nodes_)); }

std::vector<Edge> GraphSketch::reconstruct(DecodeStats* stats) const {
    const HiddenMultiset edges = sketch_.reconstruct(stats);
    std::vector<Edge> out;
    for (const auto& [e, mult] : edges) {
        if (e > edge_universe(nodes_) || mult != 1) {
            throw DecodeError("graph sketch decoded an impossible edge; the graph exceeds its capacity");
        }
        out.push_back(edge_endpoints(e, nodes_));
    }
    return out;
}

}  // namespace qgt
