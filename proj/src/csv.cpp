#include "invograph/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "invograph/error.hpp"

namespace invograph::csv {

std::string format_double(double value) {
    if (value == 0.0) return "0";  // folds -0 as well
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(sep, pos);
        if (next == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
}

std::string_view trim(std::string_view text) {
    constexpr std::string_view ws = " \t\r\n";
    const auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(ws);
    return text.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view field, std::string_view what) {
    field = trim(field);
    std::int64_t value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(field) + "'");
    }
    return value;
}

double parse_double(std::string_view field, std::string_view what) {
    field = trim(field);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(field) + "'");
    }
    return value;
}

bool LineReader::next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

void expect_header(LineReader& reader, std::string_view expected) {
    std::string line;
    if (!reader.next(line)) {
        throw ParseError("empty input, expected header '" + std::string(expected) + "'");
    }
    // Tolerate a UTF-8 byte-order mark.
    if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line != expected) {
        throw ParseError("line 1: header '" + line + "' does not match '" + std::string(expected) + "'");
    }
}

Writer& Writer::field(std::string_view text) {
    if (!first_) out_ << ',';
    out_ << text;
    first_ = false;
    return *this;
}

Writer& Writer::field(double value) { return field(std::string_view(format_double(value))); }

Writer& Writer::field(std::int64_t value) { return field(std::string_view(std::to_string(value))); }

void Writer::end_row() {
    out_ << '\n';
    first_ = true;
}

void Writer::header(std::initializer_list<std::string_view> names) {
    for (auto name : names) field(name);
    end_row();
}

}  // namespace invograph::csv
