#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace qgt {

/// Elements of the universe are 1-indexed: [1..n].
using Element = std::uint32_t;
/// Feedback values, multiplicities and counters.
using Count = std::int64_t;

bool is_power_of_two(std::uint64_t x) noexcept;
std::uint64_t next_power_of_two(std::uint64_t x) noexcept;
/// log2 of a power of two; throws ConfigError otherwise.
unsigned log2_exact(std::uint64_t n);

struct Params {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    Count alpha = 0;

    /// Checks n is a power of 2 (n >= 2), 1 <= k <= n and alpha >= 1.
    void validate() const;
    friend bool operator==(const Params&, const Params&) = default;
};

/// A query: strictly increasing element indices.
class QuerySet {
   public:
    QuerySet() = default;
    QuerySet(std::initializer_list<Element> elements);
    /// Sorts and removes duplicates.
    explicit QuerySet(std::vector<Element> elements);

    /// Takes ownership of an already strictly increasing vector; throws std::invalid_argument otherwise.
    static QuerySet from_sorted(std::vector<Element> elements);

    bool contains(Element v) const noexcept;
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    Element front() const { return elements_.front(); }
    Element back() const { return elements_.back(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }
    std::span<const Element> elements() const noexcept { return elements_; }

    friend bool operator==(const QuerySet&, const QuerySet&) = default;

   private:
    std::vector<Element> elements_;
};

using QuerySequence = std::vector<QuerySet>;

/// The singleton code <{1},...,{n}>.
QuerySequence round_robin(std::uint32_t n);
bool is_round_robin(const QuerySequence& queries, std::uint32_t n) noexcept;
/// Throws std::invalid_argument if some query holds an index outside [1..n].
void check_range(const QuerySequence& queries, std::uint32_t n);

/// For each element v, the indices of the queries containing it (slot v-1).
std::vector<std::vector<std::uint32_t>> occurrence_index(const QuerySequence& queries, std::uint32_t n);

/// The hidden input: element -> multiplicity (>= 1). Plain sets have all multiplicities 1.
class HiddenMultiset {
   public:
    HiddenMultiset() = default;
    HiddenMultiset(std::initializer_list<Element> set);
    HiddenMultiset(std::initializer_list<std::pair<const Element, Count>> counts);

    static HiddenMultiset from_set(std::span<const Element> set);

    void add(Element v, Count multiplicity = 1);
    /// Throws std::invalid_argument when removing more than is present.
    void remove(Element v, Count multiplicity = 1);

    Count multiplicity(Element v) const noexcept;
    bool contains(Element v) const noexcept { return counts_.contains(v); }
    std::size_t support_size() const noexcept { return counts_.size(); }
    Count total() const noexcept;
    bool empty() const noexcept { return counts_.empty(); }
    bool is_set() const noexcept;

    auto begin() const noexcept { return counts_.begin(); }
    auto end() const noexcept { return counts_.end(); }

    friend bool operator==(const HiddenMultiset&, const HiddenMultiset&) = default;

   private:
    std::map<Element, Count> counts_;
};

struct FeedbackVector {
    std::vector<Count> values;

    std::size_t size() const noexcept { return values.size(); }
    Count operator[](std::size_t i) const { return values[i]; }
    friend bool operator==(const FeedbackVector&, const FeedbackVector&) = default;
};

/// min(sum of multiplicities of hidden elements inside query, alpha).
Count capped_feedback(const QuerySet& query, const HiddenMultiset& hidden, Count alpha);

FeedbackVector feedback_vector(const QuerySequence& code, const HiddenMultiset& hidden, Count alpha);

/// True iff the two inputs produce different feedback vectors. Throws std::invalid_argument("identical sets").
bool distinguishes(const QuerySequence& code, const HiddenMultiset& a, const HiddenMultiset& b, Count alpha);

}  // namespace qgt
