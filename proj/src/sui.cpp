#include "qgt/sui.hpp"

#include <algorithm>
#include <cmath>

#include "qgt/errors.hpp"
#include "qgt/interference.hpp"
#include "qgt/strong_selector.hpp"

namespace qgt {

std::string_view to_string(SuiProvenance p) noexcept {
    switch (p) {
        case SuiProvenance::singleton:
            return "singleton";
        case SuiProvenance::disperser_composed:
            return "disperser-composed";
        case SuiProvenance::alpha_chunked:
            return "alpha-chunked";
    }
    return "?";
}

std::size_t SuIFamily::occurrence_bound() const noexcept {
    if (degree == 0) return 1;
    return static_cast<std::size_t>(degree) * selector_occurrence;
}

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.5)) throw ConfigError("SuI epsilon must lie in (0, 1/2]");
}

SuIFamily singletons(std::uint32_t n, std::uint32_t ell, double epsilon, std::uint32_t kappa, Count alpha) {
    SuIFamily f;
    f.queries = round_robin(n);
    f.n = n;
    f.ell = ell;
    f.epsilon = epsilon;
    f.kappa = kappa;
    f.alpha = alpha;
    f.provenance = SuiProvenance::singleton;
    f.selector_length = n;
    f.selector_occurrence = 1;
    return f;
}

}  // namespace

SuIFamily build_sui(std::uint32_t n, std::uint32_t ell, double epsilon, std::uint32_t kappa, Count alpha,
                    const SuiOptions& options) {
    check_epsilon(epsilon);
    if (n < 1 || ell < 1 || alpha < 1) throw ConfigError("SuI needs n, ell, alpha >= 1");
    if (!(static_cast<double>(alpha) * ell > options.c2 * kappa)) {
        throw ConfigError("inadmissible SuI parameters: alpha*ell must exceed c2*kappa");
    }

    DisperserParams dp;
    dp.ell_star = static_cast<std::uint32_t>(std::ceil(epsilon * ell - 1e-9));
    dp.ell_star = std::max<std::uint32_t>(dp.ell_star, 1);
    // The disperser slack must stay below 1/2; a tighter slack only strengthens the graph.
    dp.epsilon = epsilon < 0.5 ? epsilon : 0.25;
    dp.degree = options.degree;
    dp.delta = options.delta;
    dp.seed = options.seed;

    const double delta = dp.delta.value_or(default_delta(n));
    const auto strength = options.strength.value_or(
        static_cast<std::uint32_t>(std::min(std::ceil(static_cast<double>(options.c) * delta), 4294967295.0)));

    // Inner (n, strength)-strong-selector: Reed-Solomon when shorter than n, singletons otherwise.
    const RSCodeParams rs = make_rs_params(n, std::max<std::uint32_t>(strength, 1), options.c);
    const bool rs_inner = rs.q * rs.q < n;
    const std::size_t m = rs_inner ? static_cast<std::size_t>(rs.q * rs.q) : n;
    const std::uint32_t w = right_size(n, dp);

    if (!options.force_composed && static_cast<double>(n) <= static_cast<double>(m) * w) {
        return singletons(n, ell, epsilon, kappa, alpha);
    }

    QuerySequence inner = rs_inner ? build_ssui(n, std::max<std::uint32_t>(strength, 1), 0, 1, options.c).queries
                                   : round_robin(n);
    VerifiedDisperser vd = build_verified_disperser(n, dp, options.factory, options.retry_cap);

    SuIFamily f;
    f.n = n;
    f.ell = ell;
    f.epsilon = epsilon;
    f.kappa = kappa;
    f.alpha = alpha;
    f.provenance = SuiProvenance::disperser_composed;
    f.degree = vd.graph.degree();
    f.right_nodes = vd.graph.right_size();
    f.selector_length = inner.size();
    f.selector_occurrence = rs_inner ? static_cast<std::size_t>(rs.q) : 1;
    f.disperser_attempts = vd.attempts;
    f.disperser_seed = vd.seed;
    f.queries.reserve(static_cast<std::size_t>(f.right_nodes) * inner.size());
    for (std::uint32_t a = 1; a <= f.right_nodes; ++a) {
        const QuerySet nw = vd.graph.right_neighborhood(a);
        for (const auto& t : inner) {
            std::vector<Element> both;
            std::set_intersection(t.begin(), t.end(), nw.begin(), nw.end(), std::back_inserter(both));
            f.queries.push_back(QuerySet::from_sorted(std::move(both)));
        }
    }
    return f;
}

QuerySequence chunk_queries(const QuerySequence& queries, Count alpha) {
    if (alpha < 1) throw ConfigError("chunk size must be >= 1");
    const auto step = static_cast<std::size_t>(alpha);
    QuerySequence out;
    for (const auto& q : queries) {
        const auto el = q.elements();
        for (std::size_t i = 0; i < el.size(); i += step) {
            const std::size_t end = std::min(el.size(), i + step);
            out.push_back(QuerySet::from_sorted(std::vector<Element>(el.begin() + i, el.begin() + end)));
        }
    }
    return out;
}

SuIFamily build_sui_rr(std::uint32_t n, std::uint32_t ell, double epsilon, std::uint32_t kappa, Count alpha,
                       const SuiOptions& options) {
    check_epsilon(epsilon);
    if (ell < 1 || alpha < 1) throw ConfigError("SuI needs ell, alpha >= 1");
    if (static_cast<double>(alpha) * ell > options.c2 * kappa) {
        throw ConfigError("sparse SuI covers alpha*ell <= c2*kappa only");
    }
    const auto base_ell = static_cast<std::uint32_t>(std::floor(options.c2 * kappa / static_cast<double>(alpha))) + 1;
    SuIFamily f = build_sui(n, base_ell, epsilon, kappa, alpha, options);
    f.queries = chunk_queries(f.queries, alpha);
    f.ell = ell;
    f.provenance = SuiProvenance::alpha_chunked;
    return f;
}

SuiReport verify_sui(const QuerySequence& family, std::uint32_t n, std::uint32_t ell, double epsilon,
                     std::uint32_t kappa, Count alpha, double budget) {
    SuiReport report;
    report.threshold = epsilon * ell;
    const auto stop = static_cast<std::size_t>(std::ceil(report.threshold - 1e-9));
    const SelectionResult r = max_unselected(family, n, ell, kappa, alpha, std::max<std::size_t>(stop, 1), budget);
    report.max_unselected = r.max_unselected;
    report.exact = r.exact;
    report.pass = static_cast<double>(r.max_unselected) < report.threshold;
    report.witness_k1 = r.witness_k1;
    report.witness_k2 = r.witness_k2;
    return report;
}

}  // namespace qgt
