#include "codegraph/code.hpp"

#include <cctype>
#include <sstream>

namespace codegraph {

long long GeneratingCode::total_length() const {
    long long n = 0;
    for (const auto& s : strings) n += s.zeros + s.ones;
    return n;
}

namespace {

bool is_separator(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')';
}

// Shared tail of both parse paths: turn a (bit, count, position) run list into a
// normalized code, enforcing the 0-prefix / 1-suffix shape required for a
// connected realization.
GeneratingCode assemble(const std::vector<std::pair<char, long long>>& runs,
                        const std::string& input) {
    if (runs.empty()) throw ParseError(ParseErrorKind::empty_input, 0, "empty code");
    if (runs.front().first != '0')
        throw ParseError(ParseErrorKind::leading_one, 0, "code must start with 0");
    if (runs.back().first != '1')
        throw ParseError(ParseErrorKind::trailing_zero, input.size(), "code must end with 1");

    GeneratingCode code;
    for (std::size_t i = 0; i + 1 < runs.size(); i += 2)
        code.strings.push_back({runs[i].second, runs[i + 1].second});
    return code;
}

}  // namespace

GeneratingCode parse_code(const std::string& input) {
    // Run-length encode the token stream; adjacent same-bit tokens merge here,
    // which both normalizes the code and keeps huge exponents unexpanded.
    std::vector<std::pair<char, long long>> runs;
    bool token_form = input.find('^') != std::string::npos;
    std::size_t i = 0;
    bool saw_bit = false;

    while (i < input.size()) {
        char c = input[i];
        if (is_separator(c)) {
            ++i;
            continue;
        }
        if (c != '0' && c != '1')
            throw ParseError(ParseErrorKind::illegal_character, i,
                             std::string("unexpected character '") + c + "'");
        saw_bit = true;
        long long count = 1;
        std::size_t bit_pos = i;
        ++i;
        if (token_form && i < input.size() && input[i] == '^') {
            std::size_t exp_pos = i;
            ++i;
            if (i >= input.size() || !std::isdigit(static_cast<unsigned char>(input[i])))
                throw ParseError(ParseErrorKind::illegal_character, exp_pos,
                                 "'^' must be followed by a positive integer");
            count = 0;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) {
                count = count * 10 + (input[i] - '0');
                if (count > (1LL << 40))
                    throw ParseError(ParseErrorKind::illegal_character, i,
                                     "exponent out of range");
                ++i;
            }
            if (count == 0)
                throw ParseError(ParseErrorKind::zero_exponent, exp_pos,
                                 "exponent must be at least 1");
        }
        if (!runs.empty() && runs.back().first == c)
            runs.back().second += count;
        else
            runs.push_back({c, count});
        (void)bit_pos;
    }

    if (!saw_bit) throw ParseError(ParseErrorKind::empty_input, 0, "empty code");
    return assemble(runs, input);
}

GeneratingCode make_code(const std::vector<CodeString>& strings) {
    std::vector<std::pair<char, long long>> runs;
    for (const auto& s : strings) {
        if (s.zeros < 0 || s.ones < 0)
            throw ParseError(ParseErrorKind::zero_exponent, 0, "negative run length");
        if (s.zeros > 0) {
            if (!runs.empty() && runs.back().first == '0')
                runs.back().second += s.zeros;
            else
                runs.push_back({'0', s.zeros});
        }
        if (s.ones > 0) {
            if (!runs.empty() && runs.back().first == '1')
                runs.back().second += s.ones;
            else
                runs.push_back({'1', s.ones});
        }
    }
    return assemble(runs, "");
}

std::string expand_code(const GeneratingCode& code) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(code.total_length()));
    for (const auto& s : code.strings) {
        bits.append(static_cast<std::size_t>(s.zeros), '0');
        bits.append(static_cast<std::size_t>(s.ones), '1');
    }
    return bits;
}

std::string to_string(const GeneratingCode& code) {
    std::ostringstream out;
    for (const auto& s : code.strings) {
        out << '(';
        out << '0';
        if (s.zeros > 1) out << '^' << s.zeros;
        out << ' ' << '1';
        if (s.ones > 1) out << '^' << s.ones;
        out << ')';
    }
    return out.str();
}

std::vector<GeneratingCode> enumerate_codes(int max_total_length) {
    if (max_total_length > 30)
        throw std::invalid_argument("enumerate_codes: limit too large for exhaustive listing");
    std::vector<GeneratingCode> out;
    for (int len = 2; len <= max_total_length; ++len) {
        // First bit is 0 and last is 1; the middle bits count up as a binary
        // number with the earliest position most significant, which yields
        // lexicographic order of the expanded strings.
        const int middle = len - 2;
        for (std::uint64_t counter = 0; counter < (1ULL << middle); ++counter) {
            std::string bits(static_cast<std::size_t>(len), '0');
            bits.back() = '1';
            for (int i = 0; i < middle; ++i)
                if (counter >> (middle - 1 - i) & 1ULL) bits[static_cast<std::size_t>(i) + 1] = '1';
            out.push_back(parse_code(bits));
        }
    }
    return out;
}

}  // namespace codegraph
