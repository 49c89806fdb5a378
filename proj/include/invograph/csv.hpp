#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace invograph::csv {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

std::vector<std::string_view> split_fields(std::string_view line, char sep = ',');

std::string_view trim(std::string_view text);

// Strict numeric field parsers; throw ParseError naming `what`.
std::int64_t parse_int(std::string_view field, std::string_view what);
double parse_double(std::string_view field, std::string_view what);

// Reads lines, strips a trailing '\r', tracks 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line);
    std::size_t line_number() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

// Consumes the header line and checks it matches exactly.
void expect_header(LineReader& reader, std::string_view expected);

// Minimal row writer: fields are never quoted, so callers must not pass
// values containing the separator.
class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    Writer& field(std::string_view text);
    Writer& field(double value);
    Writer& field(std::int64_t value);
    Writer& field(int value) { return field(static_cast<std::int64_t>(value)); }
    Writer& field(std::size_t value) { return field(static_cast<std::int64_t>(value)); }
    void end_row();

    void header(std::initializer_list<std::string_view> names);

private:
    std::ostream& out_;
    bool first_ = true;
};

}  // namespace invograph::csv
