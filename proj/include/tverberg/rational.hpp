#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tverberg/errors.hpp"

namespace tverberg {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator; every construction path below canonicalizes. No verdict in
/// this library ever touches floating point.
using Rat = mpq_class;

/// Coordinate / coefficient vector.
using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "n" or "n/d" with optional leading '-'. Anything else — in
/// particular decimal or exponent notation — is rejected.
inline std::optional<Rat> parse_rat(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num, den;
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(s);
        den = "1";
    } else {
        num = std::string(s.substr(0, slash));
        den = std::string(s.substr(slash + 1));
    }
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Rat r;
    if (r.set_str(num + "/" + den, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

/// Canonical rendering: "n" for integers, "n/d" otherwise.
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

} // namespace tverberg
