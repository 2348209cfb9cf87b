#include "qgt/balanced_id.hpp"

#include <bit>
#include <stdexcept>

#include "qgt/errors.hpp"

namespace qgt {

namespace {

unsigned half_width(std::uint32_t n) {
    const unsigned b = log2_exact(n);
    if (b == 0) throw ConfigError("balanced IDs need n >= 2");
    return b;
}

}  // namespace

int BalancedId::popcount() const noexcept { return std::popcount(bits); }

std::string BalancedId::to_string() const {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i) {
        if ((bits >> i) & 1U) s[width - 1 - i] = '1';
    }
    return s;
}

BalancedId encode_balanced(Element v, std::uint32_t n) {
    const unsigned b = half_width(n);
    if (v < 1 || v > n) throw std::out_of_range("element " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
    const std::uint64_t low_mask = (std::uint64_t{1} << b) - 1;
    const std::uint64_t high = v - 1;
    const std::uint64_t low = ~high & low_mask;
    return BalancedId{(high << b) | low, 2 * b, v};
}

std::optional<Element> decode_balanced(std::span<const Count> bits, std::uint32_t n) {
    const unsigned b = half_width(n);
    if (bits.size() != 2 * b) throw std::invalid_argument("balanced ID needs exactly 2*log2(n) values");
    std::uint64_t word = 0;
    for (Count x : bits) {
        if (x != 0 && x != 1) return std::nullopt;
        word = (word << 1) | static_cast<std::uint64_t>(x);
    }
    if (std::popcount(word) != static_cast<int>(b)) return std::nullopt;
    const std::uint64_t low_mask = (std::uint64_t{1} << b) - 1;
    const std::uint64_t high = word >> b;
    if ((word & low_mask) != (~high & low_mask)) return std::nullopt;
    return static_cast<Element>(high + 1);
}

bool balanced_bit(Element v, unsigned position, std::uint32_t n) {
    const auto id = encode_balanced(v, n);
    if (position < 1 || position > id.width) throw std::out_of_range("slice position out of range");
    return id.bit(position);
}

QuerySet slice_query(const QuerySet& s, unsigned position, std::uint32_t n) {
    const unsigned b = half_width(n);
    if (position < 1 || position > 2 * b) throw std::out_of_range("slice position out of range");
    std::vector<Element> out;
    if (position <= b) {
        // Low half stores the complement of binary(v-1).
        const unsigned bit = position - 1;
        for (Element v : s) {
            if (!(((v - 1) >> bit) & 1U)) out.push_back(v);
        }
    } else {
        const unsigned bit = position - 1 - b;
        for (Element v : s) {
            if (((v - 1) >> bit) & 1U) out.push_back(v);
        }
    }
    return QuerySet::from_sorted(std::move(out));
}

}  // namespace qgt
