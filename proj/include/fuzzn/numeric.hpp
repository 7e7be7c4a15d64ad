#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzn {

// Renders a finite double as the shortest decimal string that parses back to
// exactly the same value. std::to_chars picks scientific notation when that
// form is shorter; those are expanded into plain decimal so all emitted
// numbers stay exponent-free (the definition language accepts only plain
// decimals).
inline std::string render_number(double v) {
    if (v == 0.0) return "0";

    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    std::string s(buf.data(), res.ptr);

    auto epos = s.find_first_of("eE");
    if (epos == std::string::npos) return s;

    // Expand mantissa/exponent into a plain decimal with the same digits.
    bool negative = s[0] == '-';
    std::string_view body(s);
    body.remove_prefix(negative ? 1 : 0);
    epos = body.find_first_of("eE");

    std::string digits;
    for (char c : body.substr(0, epos)) {
        if (c != '.') digits.push_back(c);
    }
    // Decimal point position counted from the left of `digits`.
    auto dot = body.find('.');
    int point = dot == std::string_view::npos ? static_cast<int>(epos) : static_cast<int>(dot);
    int exponent = 0;
    std::from_chars(body.data() + epos + 1, body.data() + body.size(), exponent);
    point += exponent;

    std::string out;
    if (negative) out.push_back('-');
    if (point <= 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-point), '0');
        out += digits;
    } else if (point >= static_cast<int>(digits.size())) {
        out += digits;
        out.append(static_cast<std::size_t>(point) - digits.size(), '0');
    } else {
        out.append(digits, 0, static_cast<std::size_t>(point));
        out.push_back('.');
        out.append(digits, static_cast<std::size_t>(point), std::string::npos);
    }
    return out;
}

// Strict plain-decimal parser: [+-] digits [ '.' digits ]. No exponent, no
// hex, no inf/nan, no leading dot, no trailing dot. Returns nullopt when the
// text is not exactly one such literal.
inline std::optional<double> parse_decimal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t int_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == int_begin) return std::nullopt;
    if (i < text.size() && text[i] == '.') {
        ++i;
        std::size_t frac_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == frac_begin) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;

    double value = 0.0;
    auto first = text.data();
    if (*first == '+') ++first;  // from_chars does not accept '+'
    auto res = std::from_chars(first, text.data() + text.size(), value,
                               std::chars_format::fixed);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

// Evenly spaced grid over [lo, hi] with both endpoints exact. Interior points
// use (lo*(N-g) + hi*g)/N so integer-valued ranges produce integer grid
// values.
inline std::vector<double> linear_grid(double lo, double hi, int points) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points > 0 ? points : 0));
    if (points <= 0) return grid;
    if (points == 1 || lo == hi) {
        grid.push_back(lo);
        return grid;
    }
    const double n = static_cast<double>(points - 1);
    for (int g = 0; g < points; ++g) {
        if (g == 0) {
            grid.push_back(lo);
        } else if (g == points - 1) {
            grid.push_back(hi);
        } else {
            grid.push_back((lo * (n - g) + hi * g) / n);
        }
    }
    return grid;
}

}  // namespace fuzzn
