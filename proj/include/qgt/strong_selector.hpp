#pragma once

// Reed-Solomon (Kautz-Singleton) strong selectors under interference.

#include <cstdint>
#include <span>
#include <vector>

#include "qgt/combinatorics.hpp"
#include "qgt/core_model.hpp"

namespace qgt {

/// Deterministic trial division.
bool is_prime(std::uint64_t x) noexcept;

class PrimeField {
   public:
    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const noexcept { return q_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return (a + b) % q_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % q_; }
    /// Horner evaluation; coefficient i multiplies x^i.
    std::uint64_t evaluate(std::span<const std::uint64_t> coefficients, std::uint64_t x) const noexcept;

   private:
    std::uint64_t q_;
};

struct RSCodeParams {
    unsigned degree = 1;  ///< d = ceil(log_ell n), at least 1
    std::uint64_t q = 2;  ///< prime, q >= c*ell*d, q^(d+1) >= n
    std::uint64_t c = 2;

    friend bool operator==(const RSCodeParams&, const RSCodeParams&) = default;
};

/// Smallest d >= 1 with ell^d >= n (ell clamped to >= 2).
unsigned rs_degree(std::uint64_t ell, std::uint64_t n) noexcept;
std::uint64_t smallest_admissible_prime(std::uint64_t ell, unsigned degree, std::uint64_t c, std::uint64_t n);
RSCodeParams make_rs_params(std::uint32_t n, std::uint32_t ell, std::uint64_t c);

/// Coefficients of the (i-1)-th polynomial in lexicographic order: the base-q digits of i-1,
/// least significant digit = constant term. 1 <= i <= n <= q^(d+1).
std::vector<std::uint64_t> nth_polynomial(std::uint64_t i, const RSCodeParams& params, std::uint64_t n);

struct SSuIFamily {
    QuerySequence queries;
    std::uint32_t n = 0;
    std::uint32_t ell = 0;
    std::uint32_t kappa = 0;
    Count alpha = 0;
    RSCodeParams rs;
    /// kappa*d/alpha < q - (ell-1)*d, the inequality the selection argument needs.
    bool analytic_ok = false;
};

struct SsuiConfig {
    std::uint64_t c = 2;
    double c2 = 1.0;
    std::uint64_t max_c = 1 << 12;
};

/// (n, ell, kappa, alpha)-SSuI: element i joins query x*q + P_i(x) for every x in F_q.
/// Throws ConfigError when ell < c2*kappa/alpha.
SSuIFamily build_ssui(std::uint32_t n, std::uint32_t ell, std::uint32_t kappa, Count alpha, std::uint64_t c,
                      double c2 = 1.0);

/// Doubles c from config.c until the analytic inequality holds.
SSuIFamily build_ssui_auto(std::uint32_t n, std::uint32_t ell, std::uint32_t kappa, Count alpha,
                           const SsuiConfig& config = {});

/// Exhaustive SSuI check: every v in every K1 (|K1| <= ell) is selected under
/// alpha-interference from every K2 (|K2| <= kappa). Requires n <= 64.
bool verify_ssui(const QuerySequence& family, std::uint32_t n, std::uint32_t ell, std::uint32_t kappa, Count alpha,
                 double budget = kDefaultBudget);

/// Largest number of queries shared by two distinct elements.
std::size_t max_cooccurrence(const QuerySequence& family, std::uint32_t n);

}  // namespace qgt
