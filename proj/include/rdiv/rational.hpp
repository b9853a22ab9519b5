#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdiv {

/// Exact rational arithmetic for weight-balance comparisons. Balance
/// thresholds like 2/3 are compared exactly; floating point is reserved
/// for the log-ratio schedule values where exactness is not required.
using Rat = boost::rational<std::int64_t>;

inline std::string to_fraction_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q", a plain integer, or a short decimal such as "0.25".
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t num = std::stoll(text.substr(0, slash));
        const std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("rational with zero denominator: " + text);
        }
        return Rat(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rat(std::stoll(text), 1);
    }
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15) {
        throw std::invalid_argument("decimal literal too precise for exact rational: " + text);
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
        den *= 10;
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::int64_t whole_part = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    const std::int64_t frac_part = frac.empty() ? 0 : std::stoll(frac);
    Rat magnitude(std::llabs(whole_part), 1);
    magnitude += Rat(frac_part, den);
    return negative || whole_part < 0 ? -magnitude : magnitude;
}

}  // namespace rdiv
