#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace codegraph {

// One maximal block 0^zeros 1^ones of a generating code.
struct CodeString {
    long long zeros = 0;
    long long ones = 0;

    friend bool operator==(const CodeString& a, const CodeString& b) {
        return a.zeros == b.zeros && a.ones == b.ones;
    }
    friend bool operator!=(const CodeString& a, const CodeString& b) { return !(a == b); }
};

// Normalized binary generating code 0^{s_1} 1^{t_1} ... 0^{s_k} 1^{t_k}.
// Always starts with a 0-run and ends with a 1-run; all run lengths >= 1.
struct GeneratingCode {
    std::vector<CodeString> strings;

    long long total_length() const;      // number of bits == number of vertices realized
    int string_count() const { return static_cast<int>(strings.size()); }

    friend bool operator==(const GeneratingCode& a, const GeneratingCode& b) {
        return a.strings == b.strings;
    }
    friend bool operator!=(const GeneratingCode& a, const GeneratingCode& b) { return !(a == b); }
};

enum class ParseErrorKind {
    empty_input,
    illegal_character,
    zero_exponent,
    leading_one,
    trailing_zero,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
        : std::runtime_error(message), kind_(kind), position_(position) {}

    ParseErrorKind kind() const { return kind_; }
    // Byte offset into the original input (meaningful for illegal_character / zero_exponent).
    std::size_t position() const { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

// Parses either raw bits ("00101...") or exponent tokens ("0^3 1^2 (0 1^4)").
// The token form is detected by the presence of '^'; whitespace and parentheses
// are separators in both forms. Adjacent runs of the same bit are merged, so the
// result is always normalized.
GeneratingCode parse_code(const std::string& input);

// Builds a code directly from (zeros, ones) pairs, merging adjacent runs of the
// same bit. Throws ParseError on empty input or non-positive run lengths.
GeneratingCode make_code(const std::vector<CodeString>& strings);

// Expands a code to its bit sequence, e.g. [(2,1)] -> "001".
std::string expand_code(const GeneratingCode& code);

// Canonical compressed rendering, e.g. "(0^3 1^2)(0 1)". Exponent 1 is omitted.
// parse_code(to_string(code)) == code.
std::string to_string(const GeneratingCode& code);

// Every valid code with total expanded length <= max_total_length, ordered by
// length and then by the expanded bit string. There are 2^(L-2) codes of
// length L, so keep max_total_length at desk scale.
std::vector<GeneratingCode> enumerate_codes(int max_total_length);

}  // namespace codegraph
