#ifndef SGON_SRC_TEXT_UTIL_HH
#define SGON_SRC_TEXT_UTIL_HH

#include <sgon/errors.hh>

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace sgon::detail {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

// Splits text into lines of whitespace-separated tokens, dropping blank lines
// and lines whose first non-blank character is '#'.
inline auto content_lines(std::string_view text) -> std::vector<Line>
{
    std::vector<Line> result;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            auto start = i;
            while (i < raw.size() && ! (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            if (i > start)
                line.tokens.push_back(raw.substr(start, i - start));
        }
        if (! line.tokens.empty() && line.tokens.front().front() != '#')
            result.push_back(std::move(line));
        if (end == text.size())
            break;
    }
    return result;
}

inline auto parse_int(std::string_view token, int line) -> long long
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

inline auto parse_count(std::string_view token, int line) -> int
{
    auto value = parse_int(token, line);
    if (value < 0 || value > 100'000'000)
        throw ParseError(line, "count out of range: " + std::string(token));
    return static_cast<int>(value);
}

inline void expect_arity(const Line & line, std::size_t arity)
{
    if (line.tokens.size() != arity)
        throw ParseError(line.number, "expected " + std::to_string(arity) + " tokens on '" + std::string(line.tokens.front()) + "' line");
}

} // namespace sgon::detail

#endif
