#include "qgt/code_builder.hpp"

#include <algorithm>
#include <cmath>

#include "qgt/balanced_id.hpp"
#include "qgt/errors.hpp"

namespace qgt {

std::string_view to_string(Mode m) noexcept {
    switch (m) {
        case Mode::plain:
            return "plain";
        case Mode::large:
            return "large";
        case Mode::multiset:
            return "multiset";
        case Mode::random:
            return "random";
    }
    return "?";
}

std::string_view to_string(BlockKind k) noexcept {
    switch (k) {
        case BlockKind::sui:
            return "sui";
        case BlockKind::ssui:
            return "ssui";
        case BlockKind::rr:
            return "rr";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view s) noexcept {
    for (Mode m : {Mode::plain, Mode::large, Mode::multiset, Mode::random}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

std::optional<BlockKind> parse_block_kind(std::string_view s) noexcept {
    for (BlockKind k : {BlockKind::sui, BlockKind::ssui, BlockKind::rr}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::optional<LayoutIssue> find_layout_issue(const Params& params, Mode mode, const QuerySequence& queries,
                                             const std::vector<Block>& blocks) {
    if (mode == Mode::random) {
        if (!blocks.empty()) return LayoutIssue{0, std::nullopt, "random codes carry no block layout"};
        return std::nullopt;
    }
    if (blocks.empty()) {
        if (!queries.empty()) return LayoutIssue{0, std::nullopt, "code has queries but no block layout"};
        return std::nullopt;
    }
    const unsigned b = log2_exact(params.n);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& blk = blocks[i];
        const std::string name = "block " + std::to_string(i + 1);
        if (i == 0 && blk.offset != 0) return LayoutIssue{i, std::nullopt, name + " does not start at the first query"};
        if (blk.slice_count != 2 * b) {
            return LayoutIssue{i, std::nullopt,
                               name + ": slice count " + std::to_string(blk.slice_count) + ", expected " +
                                   std::to_string(2 * b)};
        }
        const std::size_t end = i + 1 < blocks.size() ? blocks[i + 1].offset : queries.size();
        if (end <= blk.offset || end > queries.size()) {
            return LayoutIssue{i, std::nullopt, name + ": offsets out of order or past the last query"};
        }
        const std::size_t stride = 1 + blk.slice_count;
        if ((end - blk.offset) % stride != 0) {
            return LayoutIssue{i, std::nullopt, name + ": length is not a multiple of its stride"};
        }
        for (std::size_t s = blk.offset; s < end; s += stride) {
            for (unsigned j = 1; j <= blk.slice_count; ++j) {
                if (!(queries[s + j] == slice_query(queries[s], j, params.n))) {
                    return LayoutIssue{i, s + j,
                                       name + ": query " + std::to_string(s + j + 1) + " is not slice " +
                                           std::to_string(j) + " of query " + std::to_string(s + 1)};
                }
            }
        }
    }
    return std::nullopt;
}

GroupTestingCode::GroupTestingCode(Params params, Mode mode, QuerySequence queries, std::vector<Block> blocks)
    : params_(params), mode_(mode), queries_(std::move(queries)), blocks_(std::move(blocks)) {
    params_.validate();
    try {
        check_range(queries_, params_.n);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    if (auto issue = find_layout_issue(params_, mode_, queries_, blocks_)) throw FormatError(issue->message);
    columns_ = occurrence_index(queries_, params_.n);
}

std::size_t GroupTestingCode::block_end(std::size_t i) const noexcept {
    return i + 1 < blocks_.size() ? blocks_[i + 1].offset : queries_.size();
}

std::vector<std::size_t> GroupTestingCode::base_queries(std::size_t i) const {
    const Block& blk = blocks_.at(i);
    std::vector<std::size_t> out;
    for (std::size_t s = blk.offset; s < block_end(i); s += 1 + blk.slice_count) out.push_back(s);
    return out;
}

std::size_t GroupTestingCode::occurrence_max() const noexcept {
    std::size_t best = 0;
    for (const auto& c : columns_) best = std::max(best, c.size());
    return best;
}

std::vector<QuerySet> enhance(const QuerySet& s, std::uint32_t n) {
    const unsigned b = log2_exact(n);
    std::vector<QuerySet> out;
    out.reserve(1 + 2 * b);
    out.push_back(s);
    for (unsigned i = 1; i <= 2 * b; ++i) out.push_back(slice_query(s, i, n));
    return out;
}

CodePlan plan_code(std::uint32_t n, std::uint32_t k, Count alpha, double c2) {
    Params{n, k, alpha}.validate();
    if (alpha < 2 && k >= 2) throw ConfigError("cap too small for quantitative decoding");
    CodePlan plan;
    plan.k_levels = static_cast<std::uint32_t>(std::min<std::uint64_t>(next_power_of_two(k), n));
    plan.uncapped = alpha >= static_cast<Count>(k);
    plan.interference = plan.uncapped ? static_cast<Count>(plan.k_levels) : alpha - 1;
    plan.threshold = c2 * plan.k_levels / static_cast<double>(plan.interference);
    return plan;
}

namespace {

class Assembler {
   public:
    Assembler(std::uint32_t n, std::uint32_t k, Count alpha, Mode mode) : n_(n), k_(k), alpha_(alpha), mode_(mode) {
        slices_ = 2 * log2_exact(n);
    }

    /// Appends one enhanced level. Returns true when the level was the full singleton family.
    bool add(BlockKind kind, std::uint32_t level, const QuerySequence& family) {
        blocks_.push_back(Block{kind, level, queries_.size(), slices_});
        for (const auto& s : family) {
            auto e = enhance(s, n_);
            queries_.insert(queries_.end(), std::make_move_iterator(e.begin()), std::make_move_iterator(e.end()));
        }
        if (family.empty()) {
            // Keep the layout well formed: an empty level contributes no block.
            blocks_.pop_back();
        }
        return is_round_robin(family, n_);
    }

    void warn(std::string w) { warnings_.push_back(std::move(w)); }

    GroupTestingCode finish() {
        GroupTestingCode code(Params{n_, k_, alpha_}, mode_, std::move(queries_), std::move(blocks_));
        for (auto& w : warnings_) code.add_warning(std::move(w));
        return code;
    }

   private:
    std::uint32_t n_;
    std::uint32_t k_;
    Count alpha_;
    Mode mode_;
    unsigned slices_ = 0;
    QuerySequence queries_;
    std::vector<Block> blocks_;
    std::vector<std::string> warnings_;
};

SuiOptions level_options(const BuildOptions& options, unsigned index) {
    SuiOptions o = options.sui;
    o.seed = options.sui.seed + 1000ULL * index;
    return o;
}

/// SuI levels ell = k_levels, k_levels/2, ... while ell > threshold. Leaves `ell` at the first
/// level not built; returns true when a level collapsed to singletons.
bool sui_levels(Assembler& out, std::uint32_t n, const CodePlan& plan, const BuildOptions& options, unsigned& index,
                std::uint32_t& ell) {
    for (ell = plan.k_levels; ell >= 1 && ell > plan.threshold; ell /= 2) {
        const SuIFamily f = build_sui(n, ell, 0.5, plan.k_levels, plan.interference, level_options(options, index++));
        if (out.add(BlockKind::sui, ell, f.queries) && options.collapse_round_robin) return true;
    }
    return false;
}

}  // namespace

GroupTestingCode build_code(std::uint32_t n, std::uint32_t k, Count alpha, const BuildOptions& options) {
    const CodePlan plan = plan_code(n, k, alpha, options.sui.c2);
    Assembler out(n, k, alpha, Mode::plain);
    unsigned index = 0;
    std::uint32_t level = 0;
    if (sui_levels(out, n, plan, options, index, level)) return out.finish();

    const auto ell = static_cast<std::uint32_t>(std::max(1.0, std::ceil(plan.threshold - 1e-9)));
    SsuiConfig cfg = options.ssui;
    cfg.c2 = options.sui.c2;
    const SSuIFamily f = build_ssui_auto(n, ell, plan.k_levels, plan.interference, cfg);
    if (options.prefer_singletons && f.queries.size() >= n) {
        out.add(BlockKind::ssui, ell, round_robin(n));
        return out.finish();
    }
    if (!f.analytic_ok) out.warn("strong selector did not meet the analytic selection bound");
    out.add(BlockKind::ssui, ell, f.queries);
    return out.finish();
}

GroupTestingCode build_code_large(std::uint32_t n, std::uint32_t k, Count alpha, const BuildOptions& options) {
    const CodePlan plan = plan_code(n, k, alpha, options.sui.c2);
    Assembler out(n, k, alpha, Mode::large);
    if (!in_large_regime(n, k, alpha)) out.warn("parameters are outside the large-k regime (k/alpha)^2 > n/alpha");
    unsigned index = 0;
    std::uint32_t ell = 0;
    if (sui_levels(out, n, plan, options, index, ell)) return out.finish();
    for (; ell >= 1; ell /= 2) {
        const SuIFamily f =
            build_sui_rr(n, ell, 0.5, plan.k_levels, plan.interference, level_options(options, index++));
        if (out.add(BlockKind::rr, ell, f.queries) && options.collapse_round_robin) break;
    }
    return out.finish();
}

GroupTestingCode build_code_multiset(std::uint32_t n, std::uint32_t k, Count alpha, const BuildOptions& options) {
    const CodePlan plan = plan_code(n, k, alpha, options.sui.c2);
    Assembler out(n, k, alpha, Mode::multiset);
    unsigned index = 0;
    for (std::uint32_t ell = plan.k_levels; ell >= 1; ell /= 2) {
        const SuiOptions o = level_options(options, index++);
        const bool admissible = static_cast<double>(plan.interference) * ell > options.sui.c2 * plan.k_levels;
        const SuIFamily f = admissible ? build_sui(n, ell, 0.5, plan.k_levels, plan.interference, o)
                                       : build_sui_rr(n, ell, 0.5, plan.k_levels, plan.interference, o);
        if (out.add(admissible ? BlockKind::sui : BlockKind::rr, ell, f.queries) && options.collapse_round_robin) {
            break;
        }
    }
    return out.finish();
}

Mode choose_mode(std::uint32_t n, std::uint32_t k, Count alpha) {
    const double l = std::log2(static_cast<double>(n));
    const double r = static_cast<double>(k) / static_cast<double>(alpha);
    return r * r * l * l * l > (static_cast<double>(n) / static_cast<double>(alpha)) * l * l * l * l ? Mode::large
                                                                                                     : Mode::plain;
}

bool in_large_regime(std::uint32_t n, std::uint32_t k, Count alpha) {
    const double r = static_cast<double>(k) / static_cast<double>(alpha);
    return r * r > static_cast<double>(n) / static_cast<double>(alpha);
}

GroupTestingCode build_code_mode(Mode mode, std::uint32_t n, std::uint32_t k, Count alpha,
                                 const BuildOptions& options) {
    switch (mode) {
        case Mode::plain:
            return build_code(n, k, alpha, options);
        case Mode::large:
            return build_code_large(n, k, alpha, options);
        case Mode::multiset:
            return build_code_multiset(n, k, alpha, options);
        case Mode::random:
            break;
    }
    throw ConfigError("random codes are built by the random construction");
}

}  // namespace qgt
