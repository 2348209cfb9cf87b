#include "qgt/serialization.hpp"

#include <charconv>
#include <sstream>

#include "qgt/errors.hpp"

namespace qgt {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) words.push_back(line.substr(start, i - start));
    }
    return words;
}

std::string at_line(std::size_t line, const std::string& what) { return "line " + std::to_string(line) + ": " + what; }

template <class T>
bool parse_number(std::string_view word, T& out) {
    const auto* end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, out);
    return ec == std::errc() && ptr == end;
}

template <class T>
T number_at(std::string_view word, std::size_t line, const char* what) {
    T value{};
    if (!parse_number(word, value)) throw FormatError(at_line(line, std::string("bad ") + what + " '" + std::string(word) + "'"));
    return value;
}

/// "<key> <value>" header line.
std::string_view header_value(const std::vector<std::string_view>& lines, std::size_t index, std::string_view key) {
    const std::size_t line = index + 1;
    if (index >= lines.size()) throw FormatError(at_line(line, "missing '" + std::string(key) + "' header"));
    const auto words = split_words(lines[index]);
    if (words.size() != 2 || words[0] != key) {
        throw FormatError(at_line(line, "expected '" + std::string(key) + " <value>'"));
    }
    return words[1];
}

}  // namespace

std::string serialize_code(const GroupTestingCode& code) {
    std::ostringstream out;
    out << "qgtc 1\n";
    out << "n " << code.params().n << '\n';
    out << "k " << code.params().k << '\n';
    out << "alpha " << code.params().alpha << '\n';
    out << "mode " << to_string(code.mode()) << '\n';
    out << "blocks " << code.blocks().size() << '\n';
    for (const auto& b : code.blocks()) {
        out << to_string(b.kind) << ' ' << b.level << ' ' << b.offset + 1 << ' ' << b.slice_count << '\n';
    }
    for (const auto& q : code.queries()) {
        bool first = true;
        for (Element v : q) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

GroupTestingCode parse_code(std::string_view text) {
    if (text.find('\r') != std::string_view::npos) throw FormatError("code files use LF line endings");
    const auto lines = split_lines(text);

    const auto version = header_value(lines, 0, "qgtc");
    if (version != "1") throw FormatError(at_line(1, "unsupported format version '" + std::string(version) + "'"));
    Params params;
    params.n = number_at<std::uint32_t>(header_value(lines, 1, "n"), 2, "n");
    params.k = number_at<std::uint32_t>(header_value(lines, 2, "k"), 3, "k");
    params.alpha = number_at<Count>(header_value(lines, 3, "alpha"), 4, "alpha");
    const auto mode_word = header_value(lines, 4, "mode");
    const auto mode = parse_mode(mode_word);
    if (!mode) throw FormatError(at_line(5, "unknown mode '" + std::string(mode_word) + "'"));
    const auto block_count = number_at<std::size_t>(header_value(lines, 5, "blocks"), 6, "block count");
    try {
        params.validate();
    } catch (const ConfigError& e) {
        throw FormatError(at_line(2, e.what()));
    }

    constexpr std::size_t kHeader = 6;
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < block_count; ++i) {
        const std::size_t line = kHeader + i + 1;
        if (kHeader + i >= lines.size()) throw FormatError(at_line(line, "missing block line"));
        const auto words = split_words(lines[kHeader + i]);
        if (words.size() != 4) throw FormatError(at_line(line, "expected '<kind> <level> <offset> <slice-count>'"));
        Block b;
        const auto kind = parse_block_kind(words[0]);
        if (!kind) throw FormatError(at_line(line, "unknown block kind '" + std::string(words[0]) + "'"));
        b.kind = *kind;
        b.level = number_at<std::uint32_t>(words[1], line, "level");
        const auto offset = number_at<std::size_t>(words[2], line, "offset");
        if (offset < 1) throw FormatError(at_line(line, "offsets are 1-indexed"));
        b.offset = offset - 1;
        b.slice_count = number_at<std::uint32_t>(words[3], line, "slice count");
        blocks.push_back(b);
    }

    const std::size_t body = kHeader + block_count;
    QuerySequence queries;
    for (std::size_t i = body; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        std::vector<Element> q;
        for (auto w : split_words(lines[i])) {
            const auto v = number_at<Element>(w, line, "element");
            if (v < 1 || v > params.n) throw FormatError(at_line(line, "element " + std::string(w) + " out of range"));
            if (!q.empty() && v <= q.back()) throw FormatError(at_line(line, "elements not strictly ascending"));
            q.push_back(v);
        }
        queries.push_back(QuerySet::from_sorted(std::move(q)));
    }

    if (auto issue = find_layout_issue(params, *mode, queries, blocks)) {
        const std::size_t line = issue->query ? body + *issue->query + 1 : kHeader + issue->block + 1;
        throw FormatError(at_line(line, issue->message));
    }
    return GroupTestingCode(params, *mode, std::move(queries), std::move(blocks));
}

std::string format_feedback(const FeedbackVector& fv) {
    std::ostringstream out;
    for (std::size_t i = 0; i < fv.size(); ++i) out << (i ? " " : "") << fv[i];
    out << '\n';
    return out.str();
}

FeedbackVector parse_feedback(std::string_view text) {
    FeedbackVector fv;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (auto w : split_words(lines[i])) fv.values.push_back(number_at<Count>(w, i + 1, "feedback value"));
    }
    return fv;
}

HiddenMultiset parse_multiset_spec(std::string_view text) {
    HiddenMultiset m;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(start, comma - start);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\n')) item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\n')) item.remove_suffix(1);
        if (!item.empty()) {
            const auto colon = item.find(':');
            Element v = 0;
            Count mult = 1;
            if (!parse_number(item.substr(0, colon), v) || v < 1) {
                throw FormatError("bad element in set spec '" + std::string(item) + "'");
            }
            if (colon != std::string_view::npos && (!parse_number(item.substr(colon + 1), mult) || mult < 1)) {
                throw FormatError("bad multiplicity in set spec '" + std::string(item) + "'");
            }
            m.add(v, mult);
        } else if (comma < text.size()) {
            throw FormatError("empty item in set spec");
        }
        start = comma + 1;
    }
    return m;
}

std::string format_multiset(const HiddenMultiset& m) {
    std::ostringstream out;
    for (const auto& [v, c] : m) out << v << ' ' << c << '\n';
    return out.str();
}

std::vector<Op> parse_ops(std::string_view text, bool edges) {
    std::vector<Op> ops;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        auto content = lines[i];
        if (const auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
        const auto words = split_words(content);
        if (words.empty()) continue;
        const std::size_t want = edges ? 3 : 2;
        if (words.size() != want || (words[0] != "I" && words[0] != "D")) {
            throw FormatError(at_line(line, edges ? "expected 'I u v' or 'D u v'" : "expected 'I v' or 'D v'"));
        }
        Op op;
        op.insert = words[0] == "I";
        op.a = number_at<std::uint32_t>(words[1], line, "element");
        if (edges) op.b = number_at<std::uint32_t>(words[2], line, "element");
        ops.push_back(op);
    }
    return ops;
}

}  // namespace qgt
