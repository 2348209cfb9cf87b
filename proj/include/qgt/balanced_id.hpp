#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "qgt/core_model.hpp"

namespace qgt {

/// A 2b-bit identifier (b = log2 n) with exactly b ones: binary(v-1) in the high
/// half and its complement in the low half. Bit 1 is the least significant bit.
struct BalancedId {
    std::uint64_t bits = 0;
    unsigned width = 0;
    Element value = 0;

    int popcount() const noexcept;
    bool bit(unsigned position) const noexcept { return (bits >> (position - 1)) & 1U; }
    /// Written most significant bit first, e.g. "011100" for v=4, n=8.
    std::string to_string() const;
};

BalancedId encode_balanced(Element v, std::uint32_t n);

/// `bits` lists the 2b observed values most significant first (as the word is written).
/// Returns the element when they form an exact balanced ID, std::nullopt (INVALID) otherwise.
std::optional<Element> decode_balanced(std::span<const Count> bits, std::uint32_t n);

/// Whether bit `position` (1 = LSB) of v's balanced ID is set.
bool balanced_bit(Element v, unsigned position, std::uint32_t n);

/// R_i(S) = { v in S : bit i of the balanced ID of v is 1 }, i in [1..2 log2 n].
QuerySet slice_query(const QuerySet& s, unsigned position, std::uint32_t n);

}  // namespace qgt
