#include "qgt/strong_selector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qgt/errors.hpp"
#include "qgt/interference.hpp"

namespace qgt {

bool is_prime(std::uint64_t x) noexcept {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::uint64_t f = 3; f * f <= x; f += 2) {
        if (x % f == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) throw ConfigError("field modulus " + std::to_string(q) + " is not prime");
    if (q > (std::uint64_t{1} << 32)) throw ConfigError("field modulus too large");
}

std::uint64_t PrimeField::evaluate(std::span<const std::uint64_t> coefficients, std::uint64_t x) const noexcept {
    std::uint64_t acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = add(mul(acc, x), *it % q_);
    return acc;
}

namespace {

/// base^exp >= target, without overflow.
bool power_at_least(std::uint64_t base, unsigned exp, std::uint64_t target) noexcept {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (acc >= target) return true;
        if (base != 0 && acc > UINT64_MAX / base) return true;
        acc *= base;
    }
    return acc >= target;
}

}  // namespace

unsigned rs_degree(std::uint64_t ell, std::uint64_t n) noexcept {
    ell = std::max<std::uint64_t>(ell, 2);
    unsigned d = 1;
    while (!power_at_least(ell, d, n)) ++d;
    return d;
}

std::uint64_t smallest_admissible_prime(std::uint64_t ell, unsigned degree, std::uint64_t c, std::uint64_t n) {
    if (ell < 2 || degree < 1 || c < 1) throw ConfigError("smallest_admissible_prime needs ell >= 2, d >= 1, c >= 1");
    std::uint64_t q = std::max<std::uint64_t>(2, c * ell * degree);
    while (!(is_prime(q) && power_at_least(q, degree + 1, n))) ++q;
    return q;
}

RSCodeParams make_rs_params(std::uint32_t n, std::uint32_t ell, std::uint64_t c) {
    const std::uint64_t l = std::max<std::uint32_t>(ell, 2);
    RSCodeParams p;
    p.degree = rs_degree(l, n);
    p.c = c;
    p.q = smallest_admissible_prime(l, p.degree, c, n);
    return p;
}

std::vector<std::uint64_t> nth_polynomial(std::uint64_t i, const RSCodeParams& params, std::uint64_t n) {
    if (i < 1 || i > n) throw std::out_of_range("polynomial index " + std::to_string(i) + " outside [1..n]");
    if (!power_at_least(params.q, params.degree + 1, n)) throw ConfigError("q^(d+1) < n");
    std::vector<std::uint64_t> coeffs(params.degree + 1, 0);
    std::uint64_t x = i - 1;
    for (auto& c : coeffs) {
        c = x % params.q;
        x /= params.q;
    }
    return coeffs;
}

SSuIFamily build_ssui(std::uint32_t n, std::uint32_t ell, std::uint32_t kappa, Count alpha, std::uint64_t c,
                      double c2) {
    log2_exact(n);
    if (alpha < 1) throw ConfigError("SSuI needs alpha >= 1");
    if (ell < 1) throw ConfigError("SSuI needs ell >= 1");
    if (static_cast<double>(ell) * static_cast<double>(alpha) < c2 * static_cast<double>(kappa)) {
        throw ConfigError("inadmissible SSuI parameters: ell >= c2*kappa/alpha violated (ell=" + std::to_string(ell) +
                          ", kappa=" + std::to_string(kappa) + ", alpha=" + std::to_string(alpha) + ")");
    }

    SSuIFamily fam;
    fam.n = n;
    fam.ell = ell;
    fam.kappa = kappa;
    fam.alpha = alpha;
    fam.rs = make_rs_params(n, ell, c);

    const std::uint64_t q = fam.rs.q;
    const std::uint64_t d = fam.rs.degree;
    const std::uint64_t l = std::max<std::uint32_t>(ell, 2);
    fam.analytic_ok = q > (l - 1) * d &&
                      static_cast<double>(kappa) * static_cast<double>(d) <
                          static_cast<double>(alpha) * static_cast<double>(q - (l - 1) * d);

    const PrimeField field(q);
    std::vector<std::vector<Element>> rows(q * q);
    for (Element i = 1; i <= n; ++i) {
        const auto poly = nth_polynomial(i, fam.rs, n);
        for (std::uint64_t x = 0; x < q; ++x) rows[x * q + field.evaluate(poly, x)].push_back(i);
    }
    fam.queries.reserve(rows.size());
    for (auto& r : rows) fam.queries.push_back(QuerySet::from_sorted(std::move(r)));
    return fam;
}

SSuIFamily build_ssui_auto(std::uint32_t n, std::uint32_t ell, std::uint32_t kappa, Count alpha,
                           const SsuiConfig& config) {
    std::uint64_t c = std::max<std::uint64_t>(config.c, 1);
    while (true) {
        auto fam = build_ssui(n, ell, kappa, alpha, c, config.c2);
        if (fam.analytic_ok || c >= config.max_c) return fam;
        c *= 2;
    }
}

bool verify_ssui(const QuerySequence& family, std::uint32_t n, std::uint32_t ell, std::uint32_t kappa, Count alpha,
                 double budget) {
    return max_unselected(family, n, ell, kappa, alpha, 1, budget).max_unselected == 0;
}

std::size_t max_cooccurrence(const QuerySequence& family, std::uint32_t n) {
    std::vector<std::uint32_t> pair_counts(static_cast<std::size_t>(n) * n, 0);
    std::uint32_t best = 0;
    for (const auto& q : family) {
        const auto e = q.elements();
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                auto& cnt = pair_counts[static_cast<std::size_t>(e[a] - 1) * n + (e[b] - 1)];
                best = std::max(best, ++cnt);
            }
        }
    }
    return best;
}

}  // namespace qgt
