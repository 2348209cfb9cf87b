#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgt/core_model.hpp"
#include "qgt/strong_selector.hpp"
#include "qgt/sui.hpp"

namespace qgt {

enum class Mode { plain, large, multiset, random };
enum class BlockKind { sui, ssui, rr };

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(BlockKind k) noexcept;
std::optional<Mode> parse_mode(std::string_view s) noexcept;
std::optional<BlockKind> parse_block_kind(std::string_view s) noexcept;

/// One enhanced selector: a run of base queries, each followed by its slice_count slices.
/// The block spans [offset, next block's offset).
struct Block {
    BlockKind kind = BlockKind::sui;
    std::uint32_t level = 0;
    std::size_t offset = 0;  ///< 0-based index of the first base query
    std::uint32_t slice_count = 0;

    friend bool operator==(const Block&, const Block&) = default;
};

struct LayoutIssue {
    std::size_t block = 0;               ///< 0-based block index
    std::optional<std::size_t> query;    ///< 0-based query index when a single query is at fault
    std::string message;
};

/// First inconsistency between the queries and the block layout, if any.
std::optional<LayoutIssue> find_layout_issue(const Params& params, Mode mode, const QuerySequence& queries,
                                             const std::vector<Block>& blocks);

/// A Group Testing code with its enhanced-selector layout. Immutable.
class GroupTestingCode {
   public:
    /// Validates the layout (offsets, strides, slices) and throws FormatError on mismatch.
    GroupTestingCode(Params params, Mode mode, QuerySequence queries, std::vector<Block> blocks);

    const Params& params() const noexcept { return params_; }
    Mode mode() const noexcept { return mode_; }
    const QuerySequence& queries() const noexcept { return queries_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return queries_.size(); }

    /// One past the last query of block i.
    std::size_t block_end(std::size_t i) const noexcept;
    /// Indices of the base queries of block i.
    std::vector<std::size_t> base_queries(std::size_t i) const;

    /// Indices of the queries that contain v.
    std::span<const std::uint32_t> column(Element v) const { return columns_.at(v - 1); }
    std::size_t occurrence_max() const noexcept;

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

    friend bool operator==(const GroupTestingCode& a, const GroupTestingCode& b) {
        return a.params_ == b.params_ && a.mode_ == b.mode_ && a.queries_ == b.queries_ && a.blocks_ == b.blocks_;
    }

   private:
    Params params_;
    Mode mode_;
    QuerySequence queries_;
    std::vector<Block> blocks_;
    std::vector<std::vector<std::uint32_t>> columns_;
    std::vector<std::string> warnings_;
};

/// <S, R_1(S), ..., R_{2 log2 n}(S)>.
std::vector<QuerySet> enhance(const QuerySet& s, std::uint32_t n);

struct BuildOptions {
    SuiOptions sui;
    SsuiConfig ssui;
    /// Stop after a level that came out as the full singleton family: it already
    /// isolates every element with zero interference, so later levels add nothing.
    bool collapse_round_robin = true;
    /// Use the singleton family for the terminal strong selector when the Reed-Solomon
    /// family would have at least n queries. Singletons isolate every element and meet no
    /// other element, so they satisfy every strong selection requirement.
    bool prefer_singletons = true;
};

/// Construction-side parameters derived from (n, k, alpha).
struct CodePlan {
    std::uint32_t k_levels = 0;   ///< k rounded up to a power of 2
    Count interference = 0;       ///< interference cap of the selectors (alpha - 1, or k_levels when alpha >= k)
    bool uncapped = false;        ///< alpha >= k: no feedback value of a k-set is ever capped
    double threshold = 0;         ///< c2 * k_levels / interference
};

CodePlan plan_code(std::uint32_t n, std::uint32_t k, Count alpha, double c2 = 1.0);

/// Enhanced SuI levels ell = k, k/2, ... while ell > c2*k/(alpha-1), then an enhanced SSuI.
GroupTestingCode build_code(std::uint32_t n, std::uint32_t k, Count alpha, const BuildOptions& options = {});
/// Enhanced SuI levels down to the threshold, then enhanced alpha-chunked SuI levels down to 1.
GroupTestingCode build_code_large(std::uint32_t n, std::uint32_t k, Count alpha, const BuildOptions& options = {});
/// Enhanced selector levels ell = k, ..., 1 and no SSuI. k bounds the total multiplicity.
GroupTestingCode build_code_multiset(std::uint32_t n, std::uint32_t k, Count alpha,
                                     const BuildOptions& options = {});

/// plain vs large: compares (k/alpha)^2 log^3 n with (n/alpha) log^4 n.
Mode choose_mode(std::uint32_t n, std::uint32_t k, Count alpha);
bool in_large_regime(std::uint32_t n, std::uint32_t k, Count alpha);
GroupTestingCode build_code_mode(Mode mode, std::uint32_t n, std::uint32_t k, Count alpha,
                                 const BuildOptions& options = {});

}  // namespace qgt
