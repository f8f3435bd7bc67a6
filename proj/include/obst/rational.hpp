#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "obst/errors.hpp"

namespace obst {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the canonical form as an
/// invariant: gcd(|num|, den) == 1 and den > 0, so value equality is
/// representation equality.
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& v) { return v.sign(); }
inline int sign_of(const Int& v) { return v.sign(); }

/// Builds num/den, normalizing the sign into the numerator.
/// The backend rejects negative denominators outright.
inline Rat make_rational(Int num, Int den) {
    if (den == 0) throw SchemaError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(num, den);
}

/// Parses "p", "-p", "p/q" or "-p/q" (q > 0, digits only).
inline Rat parse_rational(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!all_digits(num_part) || !all_digits(den_part))
        throw SchemaError("bad rational literal: \"" + original + "\"");
    Int num{std::string(num_part)};
    Int den{std::string(den_part)};
    if (den == 0) throw SchemaError("bad rational literal (zero denominator): \"" + original + "\"");
    if (negative) num = -num;
    return Rat(num, den);
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rat& v) {
    const Int num = numerator(v);
    const Int den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// A positive rational r with r <= sqrt(v), for v > 0. Used to turn exact
/// squared distances into usable radii without leaving the rationals.
inline Rat sqrt_lower_bound(const Rat& v) {
    if (v <= 0) throw PreconditionError("sqrt_lower_bound needs a positive value");
    const Int num = numerator(v);
    const Int den = denominator(v);
    const Int a = sqrt(num); // floor sqrt
    if (a == 0) return v / 2; // v < 1, and then v/2 < sqrt(v)
    const Int b = sqrt(den) + 1; // strictly above sqrt(den)
    return Rat(a, b);
}

} // namespace obst
