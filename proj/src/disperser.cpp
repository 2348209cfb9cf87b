#include "qgt/disperser.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "qgt/errors.hpp"
#include "qgt/rng.hpp"

namespace qgt {

void DisperserParams::validate() const {
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw ConfigError("disperser epsilon must lie in (0, 1/2)");
    if (ell_star < 1) throw ConfigError("disperser ell_star must be >= 1");
    if (degree && *degree < 1) throw ConfigError("disperser degree must be >= 1");
    if (delta && !(*delta > 0.0)) throw ConfigError("disperser delta must be positive");
}

namespace {

double log2n(std::uint32_t n) { return std::log2(static_cast<double>(std::max<std::uint32_t>(n, 2))); }

}  // namespace

std::uint32_t default_degree(std::uint32_t n) {
    const double l = log2n(n);
    return static_cast<std::uint32_t>(std::ceil(l * l - 1e-9));
}

double default_delta(std::uint32_t n) {
    const double l = log2n(n);
    return std::ceil(l * l * l - 1e-9);
}

std::uint32_t resolved_degree(std::uint32_t n, const DisperserParams& params) {
    return params.degree.value_or(default_degree(n));
}

std::uint32_t right_size(std::uint32_t n, const DisperserParams& params) {
    const double delta = params.delta.value_or(default_delta(n));
    const double w = std::ceil(static_cast<double>(params.ell_star) * resolved_degree(n, params) / delta - 1e-9);
    return static_cast<std::uint32_t>(std::max(1.0, w));
}

BipartiteGraph::BipartiteGraph(std::uint32_t right, std::vector<std::vector<std::uint32_t>> adjacency)
    : right_(right), degree_(0), adjacency_(std::move(adjacency)) {
    if (right_ < 1) throw std::invalid_argument("bipartite graph needs at least one right node");
    if (!adjacency_.empty()) degree_ = static_cast<std::uint32_t>(adjacency_.front().size());
    for (const auto& row : adjacency_) {
        if (row.size() != degree_) throw std::invalid_argument("bipartite graph is not left-regular");
        for (auto w : row) {
            if (w < 1 || w > right_) throw std::invalid_argument("right neighbour out of range");
        }
    }
}

std::uint64_t BipartiteGraph::edge_count() const noexcept {
    return static_cast<std::uint64_t>(adjacency_.size()) * degree_;
}

QuerySet BipartiteGraph::right_neighborhood(std::uint32_t w) const {
    std::vector<Element> out;
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        const auto& row = adjacency_[v];
        if (std::find(row.begin(), row.end(), w) != row.end()) out.push_back(static_cast<Element>(v + 1));
    }
    return QuerySet::from_sorted(std::move(out));
}

std::size_t BipartiteGraph::neighborhood_size(std::span<const Element> left) const {
    std::vector<char> hit(right_ + 1, 0);
    std::size_t count = 0;
    for (Element v : left) {
        for (auto w : neighbors(v)) {
            if (!hit[w]) {
                hit[w] = 1;
                ++count;
            }
        }
    }
    return count;
}

std::string BipartiteGraph::dump() const {
    std::ostringstream out;
    for (const auto& row : adjacency_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

BipartiteGraph build_disperser(std::uint32_t n, const DisperserParams& params) {
    params.validate();
    const std::uint32_t deg = resolved_degree(n, params);
    const std::uint32_t right = right_size(n, params);
    Rng rng(params.seed);
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    for (auto& row : adjacency) {
        row.reserve(deg);
        const std::uint32_t distinct = std::min(deg, right);
        // Floyd's sampling: `distinct` different nodes out of [1..right].
        std::unordered_set<std::uint32_t> chosen;
        for (std::uint32_t j = right - distinct; j < right; ++j) {
            const auto t = static_cast<std::uint32_t>(rng.below(j + 1)) + 1;
            const std::uint32_t pick = chosen.contains(t) ? j + 1 : t;
            chosen.insert(pick);
            row.push_back(pick);
        }
        for (std::uint32_t j = distinct; j < deg; ++j) row.push_back(static_cast<std::uint32_t>(rng.below(right)) + 1);
    }
    return BipartiteGraph(right, std::move(adjacency));
}

bool verify_dispersion(const BipartiteGraph& graph, std::uint32_t ell_star, double epsilon,
                       const DispersionMode& mode, double budget) {
    const std::uint32_t n = graph.left_size();
    const std::uint32_t size = std::min(ell_star, n);
    const double need = (1.0 - epsilon) * graph.right_size();
    auto ok = [&](std::span<const Element> left) {
        return static_cast<double>(graph.neighborhood_size(left)) >= need - 1e-9;
    };

    if (mode.exhaustive) {
        require_budget(binomial(n, size), budget);
        std::vector<Element> left(size);
        return for_each_combination(n, size, [&](std::span<const std::uint32_t> idx) {
            for (std::size_t i = 0; i < idx.size(); ++i) left[i] = idx[i] + 1;
            return ok(left);
        });
    }

    Rng rng(mode.seed);
    std::vector<Element> pool(n);
    std::iota(pool.begin(), pool.end(), Element{1});
    for (std::size_t t = 0; t < mode.trials; ++t) {
        for (std::uint32_t i = 0; i < size; ++i) {
            const auto j = i + static_cast<std::uint32_t>(rng.below(n - i));
            std::swap(pool[i], pool[j]);
        }
        if (!ok(std::span<const Element>(pool.data(), size))) return false;
    }
    return true;
}

VerifiedDisperser build_verified_disperser(std::uint32_t n, const DisperserParams& params,
                                           const DisperserFactory& factory, unsigned retry_cap,
                                           double exhaustive_budget, std::size_t sampled_trials) {
    params.validate();
    const bool exhaustive = binomial(n, std::min(params.ell_star, n)) <= exhaustive_budget;
    DisperserParams attempt = params;
    for (unsigned i = 0; i < std::max(retry_cap, 1u); ++i) {
        attempt.seed = params.seed + i;
        BipartiteGraph graph = factory(n, attempt);
        const DispersionMode mode =
            exhaustive ? DispersionMode::exhaustive_check() : DispersionMode::sampled(sampled_trials, attempt.seed);
        if (verify_dispersion(graph, params.ell_star, params.epsilon, mode, exhaustive_budget)) {
            return VerifiedDisperser{std::move(graph), attempt.seed, i + 1, exhaustive};
        }
    }
    throw Error("disperser verification failed after " + std::to_string(retry_cap) + " attempts");
}

}  // namespace qgt
