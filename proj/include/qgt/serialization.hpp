#pragma once

// Text formats: code files ("qgtc 1"), feedback vectors, multisets, op logs, bench grids.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgt/code_builder.hpp"
#include "qgt/core_model.hpp"

namespace qgt {

/// Header lines "qgtc 1", "n", "k", "alpha", "mode", "blocks <count>", then one line per
/// block "<kind> <level> <base-offset> <slice-count>" (offset 1-indexed), then one query
/// per line as ascending indices (empty line for an empty query). LF line endings.
std::string serialize_code(const GroupTestingCode& code);
GroupTestingCode parse_code(std::string_view text);

std::string format_feedback(const FeedbackVector& fv);
FeedbackVector parse_feedback(std::string_view text);

/// "v[:mult],..." e.g. "3:2,7".
HiddenMultiset parse_multiset_spec(std::string_view text);
/// "element multiplicity" lines sorted by element.
std::string format_multiset(const HiddenMultiset& m);

struct Op {
    bool insert = true;
    std::uint32_t a = 0;
    std::uint32_t b = 0;  ///< second endpoint for graph ops, 0 otherwise
};

/// "I v" / "D v", or "I u v" / "D u v" when `edges` is set. Blank lines and '#' comments skipped.
std::vector<Op> parse_ops(std::string_view text, bool edges);

}  // namespace qgt
