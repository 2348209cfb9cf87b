#include "qgt/decoder.hpp"

#include <algorithm>

#include "qgt/balanced_id.hpp"
#include "qgt/errors.hpp"

namespace qgt {

DecodeState::DecodeState(const GroupTestingCode& code) : code_(&code), known_(code.size(), 0) {}

void DecodeState::add(Element v, Count multiplicity) {
    accumulated_.add(v, multiplicity);
    const auto col = code_->column(v);
    for (auto q : col) known_[q] += multiplicity;
    updates_ += col.size();
}

bool feedback_is_exact(Count value, Count alpha, std::optional<Count> mass_bound) noexcept {
    return value < alpha || (mass_bound && *mass_bound <= alpha);
}

namespace {

Count mass_bound(const GroupTestingCode& code, const DecodeOptions& options) {
    return options.mass_bound.value_or(static_cast<Count>(code.params().k));
}

}  // namespace

bool query_is_good(const GroupTestingCode& code, std::size_t base, const FeedbackVector& fv,
                   const DecodeState& state, const DecodeOptions& options) {
    const Count value = fv[base];
    if (!feedback_is_exact(value, code.params().alpha, mass_bound(code, options))) return false;
    const Count residual = value - state.known(base);
    return code.mode() == Mode::multiset ? residual >= 1 : residual == 1;
}

std::optional<Element> decode_element(const GroupTestingCode& code, std::size_t base, const FeedbackVector& fv,
                                      DecodeState& state, const DecodeOptions& options, DecodeStats* stats) {
    if (!query_is_good(code, base, fv, state, options)) return std::nullopt;
    const std::uint32_t n = code.params().n;
    const unsigned width = 2 * log2_exact(n);
    const Count r = fv[base] - state.known(base);

    std::vector<Count> bits(width);
    for (unsigned j = 1; j <= width; ++j) {
        const Count diff = fv[base + j] - state.known(base + j);
        if (diff != 0 && diff != r) {
            if (stats) stats->ops += j;
            return std::nullopt;
        }
        bits[width - j] = diff / r;
    }
    if (stats) stats->ops += width;

    const auto v = decode_balanced(bits, n);
    if (!v || !code.queries()[base].contains(*v)) return std::nullopt;
    if (code.mode() != Mode::multiset && state.accumulated().contains(*v)) return std::nullopt;

    const auto before = state.updates();
    state.add(*v, r);
    if (stats) {
        stats->ops += state.updates() - before;
        ++stats->decoded;
    }
    return v;
}

HiddenMultiset decode(const GroupTestingCode& code, const FeedbackVector& fv, const DecodeOptions& options,
                      DecodeStats* stats) {
    if (code.mode() == Mode::random) throw DecodeError("random codes carry no layout to decode with");
    if (fv.size() != code.size()) {
        throw FormatError("feedback has " + std::to_string(fv.size()) + " values, code has " +
                          std::to_string(code.size()) + " queries");
    }
    const Count alpha = code.params().alpha;
    for (Count x : fv.values) {
        if (x < 0 || x > alpha) throw DecodeError("inconsistent feedback: value outside [0, alpha]");
    }

    DecodeStats local;
    DecodeStats& st = stats ? *stats : local;
    DecodeState state(code);
    const bool plain = code.mode() != Mode::multiset;

    for (std::size_t i = 0; i < code.blocks().size(); ++i) {
        const auto bases = code.base_queries(i);
        bool progress = true;
        while (progress) {
            progress = false;
            ++st.sweeps;
            for (std::size_t s : bases) {
                ++st.ops;
                if (decode_element(code, s, fv, state, options, &st)) progress = true;
            }
            if (plain && state.accumulated().support_size() > code.params().k) {
                throw DecodeError("inconsistent feedback: more than k elements decoded");
            }
        }
    }

    // The decoded input must reproduce every feedback value.
    bool consistent = true;
    bool blocked = false;
    const Count bound = mass_bound(code, options);
    for (std::size_t q = 0; q < code.size(); ++q) {
        const Count known = state.known(q);
        if (std::min(known, alpha) != fv[q]) consistent = false;
        if (fv[q] > known && !feedback_is_exact(fv[q], alpha, bound)) blocked = true;
    }
    st.ops += code.size();
    if (!consistent) {
        if (!plain && blocked) throw DecodeError("cap too small: a capped query blocked multiset decoding");
        throw DecodeError("inconsistent feedback");
    }
    return state.accumulated();
}

}  // namespace qgt
