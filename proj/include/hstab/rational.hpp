#pragma once

// Exact arithmetic over Q backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Result is canonical.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto is_digit_run = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digit_run(num) || !is_digit_run(den))
        throw std::invalid_argument("not a rational number: '" + s + "'");
    Rational r{Integer(std::string(num)), Integer(std::string(den))};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

/// Smallest positive integer multiple of a rational vector; sign and direction preserved,
/// content removed.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Rational scaled = x * l;
        out.push_back(scaled.get_num());
        g = gcd(g, scaled.get_num());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace hstab
