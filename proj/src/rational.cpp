#include "fibband/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fibband {

Rat make_rat(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("make_rat: zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) {
    return value.get_str();
}

std::string to_string(const Int& value) {
    return value.get_str();
}

namespace {

// [+-]?digits with at least one digit, returned in the form mpz accepts
// (minus kept, plus dropped)
std::optional<std::string> take_integer(std::string_view text,
                                        std::size_t& pos) {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t first = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == first) {
        return std::nullopt;
    }
    std::string digits(text.substr(first, pos - first));
    return negative ? "-" + digits : digits;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
    std::size_t pos = 0;
    std::optional<std::string> num = take_integer(text, pos);
    if (!num) {
        return std::nullopt;
    }
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') {
            return std::nullopt;
        }
        ++pos;
        std::optional<std::string> scanned = take_integer(text, pos);
        if (!scanned || pos != text.size()) {
            return std::nullopt;
        }
        den = std::move(*scanned);
    }
    Int n(*num, 10);
    Int d(den, 10);
    if (d == 0) {
        return std::nullopt;
    }
    Rat r(n);
    r /= Rat(d);
    return r;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

long ceil_div(long a, long b) {
    return -floor_div(-a, b);
}

}  // namespace fibband
