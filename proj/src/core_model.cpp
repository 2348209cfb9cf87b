#include "qgt/core_model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qgt/errors.hpp"

namespace qgt {

bool is_power_of_two(std::uint64_t x) noexcept { return std::has_single_bit(x); }

std::uint64_t next_power_of_two(std::uint64_t x) noexcept { return x <= 1 ? 1 : std::bit_ceil(x); }

unsigned log2_exact(std::uint64_t n) {
    if (!is_power_of_two(n)) throw ConfigError("n must be a power of 2, got " + std::to_string(n));
    return static_cast<unsigned>(std::countr_zero(n));
}

void Params::validate() const {
    if (n < 2 || !is_power_of_two(n)) throw ConfigError("n must be a power of 2 and at least 2");
    if (k < 1 || k > n) throw ConfigError("k must satisfy 1 <= k <= n");
    if (alpha < 1) throw ConfigError("alpha must be at least 1");
}

QuerySet::QuerySet(std::initializer_list<Element> elements) : QuerySet(std::vector<Element>(elements)) {}

QuerySet::QuerySet(std::vector<Element> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

QuerySet QuerySet::from_sorted(std::vector<Element> elements) {
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (elements[i - 1] >= elements[i]) throw std::invalid_argument("query indices not strictly increasing");
    }
    QuerySet q;
    q.elements_ = std::move(elements);
    return q;
}

bool QuerySet::contains(Element v) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

QuerySequence round_robin(std::uint32_t n) {
    QuerySequence out;
    out.reserve(n);
    for (Element v = 1; v <= n; ++v) out.push_back(QuerySet{v});
    return out;
}

bool is_round_robin(const QuerySequence& queries, std::uint32_t n) noexcept {
    if (queries.size() != n) return false;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (queries[i].size() != 1 || queries[i].front() != i + 1) return false;
    }
    return true;
}

void check_range(const QuerySequence& queries, std::uint32_t n) {
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const auto& q = queries[i];
        if (!q.empty() && (q.front() < 1 || q.back() > n)) {
            throw std::invalid_argument("query " + std::to_string(i + 1) + " holds an index outside [1.." +
                                        std::to_string(n) + "]");
        }
    }
}

std::vector<std::vector<std::uint32_t>> occurrence_index(const QuerySequence& queries, std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> columns(n);
    for (std::size_t i = 0; i < queries.size(); ++i) {
        for (Element v : queries[i]) columns.at(v - 1).push_back(static_cast<std::uint32_t>(i));
    }
    return columns;
}

HiddenMultiset::HiddenMultiset(std::initializer_list<Element> set) {
    for (Element v : set) add(v);
}

HiddenMultiset::HiddenMultiset(std::initializer_list<std::pair<const Element, Count>> counts) {
    for (const auto& [v, c] : counts) add(v, c);
}

HiddenMultiset HiddenMultiset::from_set(std::span<const Element> set) {
    HiddenMultiset m;
    for (Element v : set) m.add(v);
    return m;
}

void HiddenMultiset::add(Element v, Count multiplicity) {
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    counts_[v] += multiplicity;
}

void HiddenMultiset::remove(Element v, Count multiplicity) {
    auto it = counts_.find(v);
    if (it == counts_.end() || it->second < multiplicity) {
        throw std::invalid_argument("removing element " + std::to_string(v) + " that is not present");
    }
    it->second -= multiplicity;
    if (it->second == 0) counts_.erase(it);
}

Count HiddenMultiset::multiplicity(Element v) const noexcept {
    auto it = counts_.find(v);
    return it == counts_.end() ? 0 : it->second;
}

Count HiddenMultiset::total() const noexcept {
    Count t = 0;
    for (const auto& [v, c] : counts_) t += c;
    return t;
}

bool HiddenMultiset::is_set() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(), [](const auto& e) { return e.second == 1; });
}

Count capped_feedback(const QuerySet& query, const HiddenMultiset& hidden, Count alpha) {
    Count sum = 0;
    if (hidden.support_size() <= query.size()) {
        for (const auto& [v, c] : hidden) {
            if (query.contains(v)) sum += c;
        }
    } else {
        for (Element v : query) sum += hidden.multiplicity(v);
    }
    return std::min(sum, alpha);
}

FeedbackVector feedback_vector(const QuerySequence& code, const HiddenMultiset& hidden, Count alpha) {
    FeedbackVector fv;
    fv.values.reserve(code.size());
    for (const auto& q : code) fv.values.push_back(capped_feedback(q, hidden, alpha));
    return fv;
}

bool distinguishes(const QuerySequence& code, const HiddenMultiset& a, const HiddenMultiset& b, Count alpha) {
    if (a == b) throw std::invalid_argument("identical sets");
    for (const auto& q : code) {
        if (capped_feedback(q, a, alpha) != capped_feedback(q, b, alpha)) return true;
    }
    return false;
}

}  // namespace qgt
