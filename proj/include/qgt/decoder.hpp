#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qgt/code_builder.hpp"
#include "qgt/core_model.hpp"

namespace qgt {

struct DecodeOptions {
    /// Promised bound on the total multiplicity of the hidden input. When it does not
    /// exceed alpha, a feedback value equal to alpha is exact. Defaults to the code's k.
    std::optional<Count> mass_bound;
};

struct DecodeStats {
    std::uint64_t ops = 0;      ///< query inspections + slice reads + counter updates
    std::uint64_t sweeps = 0;
    std::uint64_t decoded = 0;  ///< successful DecodeElement calls
};

/// K_acc plus, for every query, the multiplicity-weighted count of K_acc inside it.
class DecodeState {
   public:
    explicit DecodeState(const GroupTestingCode& code);

    const HiddenMultiset& accumulated() const noexcept { return accumulated_; }
    Count known(std::size_t query) const { return known_[query]; }
    void add(Element v, Count multiplicity);
    std::uint64_t updates() const noexcept { return updates_; }

   private:
    const GroupTestingCode* code_;
    HiddenMultiset accumulated_;
    std::vector<Count> known_;
    std::uint64_t updates_ = 0;
};

/// Whether a feedback value can be taken at face value.
bool feedback_is_exact(Count value, Count alpha, std::optional<Count> mass_bound) noexcept;

/// The base query is below the cap (or provably uncapped) and holds exactly one unit of
/// undecoded mass (plain mode); in multiset mode any positive residual qualifies.
bool query_is_good(const GroupTestingCode& code, std::size_t base, const FeedbackVector& fv,
                   const DecodeState& state, const DecodeOptions& options = {});

/// Subtracts the known counts from the slices of `base`, reads the residual balanced ID and,
/// on success, adds the element (with the residual multiplicity) to the state.
/// std::nullopt signals INVALID: the query is skipped.
std::optional<Element> decode_element(const GroupTestingCode& code, std::size_t base, const FeedbackVector& fv,
                                      DecodeState& state, const DecodeOptions& options = {},
                                      DecodeStats* stats = nullptr);

/// Level-by-level sweep to a fixed point. Throws DecodeError when the result does not
/// reproduce the feedback vector.
HiddenMultiset decode(const GroupTestingCode& code, const FeedbackVector& fv, const DecodeOptions& options = {},
                      DecodeStats* stats = nullptr);

}  // namespace qgt
