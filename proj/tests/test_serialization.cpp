#include <doctest.h>

#include "qgt/code_builder.hpp"
#include "qgt/errors.hpp"
#include "qgt/random_code.hpp"
#include "qgt/serialization.hpp"

using namespace qgt;

namespace {

std::string replace_line(const std::string& text, std::size_t line, const std::string& with) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < line; ++i) start = text.find('\n', start) + 1;
    const std::size_t end = text.find('\n', start);
    return text.substr(0, start) + with + text.substr(end);
}

}  // namespace

TEST_CASE("roundtrip of built codes") {
    BuildOptions raw;
    raw.prefer_singletons = false;
    raw.collapse_round_robin = false;
    for (std::uint32_t n : {8u, 16u, 32u}) {
        for (std::uint32_t k : {1u, 2u, 3u}) {
            for (Count a : {Count{2}, Count{3}}) {
                for (const auto& code : {build_code(n, k, a), build_code(n, k, a, raw), build_code_large(n, k, a),
                                         build_code_multiset(n, k, a)}) {
                    const std::string text = serialize_code(code);
                    CHECK(parse_code(text) == code);
                    CHECK(serialize_code(parse_code(text)) == text);
                }
            }
        }
    }
    const auto random = to_code(build_random_code(32, 3, 8, 1));
    CHECK(parse_code(serialize_code(random)) == random);
}

TEST_CASE("header and empty query lines") {
    const GroupTestingCode code(Params{2, 1, 1}, Mode::plain, {{}, {}, {}}, {Block{BlockKind::ssui, 1, 0, 2}});
    const std::string text = serialize_code(code);
    CHECK(text == "qgtc 1\nn 2\nk 1\nalpha 1\nmode plain\nblocks 1\nssui 1 1 2\n\n\n\n");
    CHECK(parse_code(text) == code);
}

TEST_CASE("tampering names the line") {
    const std::string text = serialize_code(build_code(8, 2, 2));
    CHECK_THROWS_WITH_AS(parse_code(replace_line(text, 7, "sui 2 2 6")), doctest::Contains("line 7"), FormatError);
    CHECK_THROWS_WITH_AS(parse_code(replace_line(text, 1, "qgtc 2")), doctest::Contains("line 1"), FormatError);
    CHECK_THROWS_WITH_AS(parse_code(replace_line(text, 5, "mode fancy")), doctest::Contains("line 5"), FormatError);
    CHECK_THROWS_WITH_AS(parse_code(replace_line(text, 8, "3 1")), doctest::Contains("line 8"), FormatError);
    CHECK_THROWS_WITH_AS(parse_code(replace_line(text, 8, "9")), doctest::Contains("line 8"), FormatError);
    CHECK_THROWS_WITH_AS(parse_code(replace_line(text, 9, "2")), doctest::Contains("line 9"), FormatError);
    CHECK_THROWS_WITH_AS(parse_code(replace_line(text, 2, "n 12")), doctest::Contains("line 2"), FormatError);
    CHECK_THROWS_AS(parse_code("qgtc 1\nn 8\n"), FormatError);
    std::string crlf = text;
    crlf.insert(6, "\r");
    CHECK_THROWS_AS(parse_code(crlf), FormatError);
}

TEST_CASE("feedback and multiset text") {
    const FeedbackVector fv{{0, 2, 1}};
    CHECK(format_feedback(fv) == "0 2 1\n");
    CHECK(parse_feedback("0 2 1\n") == fv);
    CHECK_THROWS_AS(parse_feedback("0 x 1"), FormatError);

    CHECK(parse_multiset_spec("3:2,7") == HiddenMultiset{{3, 2}, {7, 1}});
    CHECK(parse_multiset_spec("").empty());
    CHECK_THROWS_AS(parse_multiset_spec("3:0"), FormatError);
    CHECK_THROWS_AS(parse_multiset_spec("a"), FormatError);
    CHECK(format_multiset(HiddenMultiset{{7, 1}, {3, 2}}) == "3 2\n7 1\n");
}

TEST_CASE("op logs") {
    const auto ops = parse_ops("I 3\n# note\n\nD 3\n", false);
    REQUIRE(ops.size() == 2);
    CHECK(ops[0].insert);
    CHECK_FALSE(ops[1].insert);
    const auto edges = parse_ops("I 1 2\nD 1 2\n", true);
    CHECK(edges[0].b == 2);
    CHECK_THROWS_WITH_AS(parse_ops("I 1\nX 2\n", false), doctest::Contains("line 2"), FormatError);
    CHECK_THROWS_AS(parse_ops("I 1\n", true), FormatError);
}
