#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphpoly {

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
// Expression templates are off so mixed arithmetic yields concrete values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Int& i) { return i.convert_to<double>(); }

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e >= 0) {
        Rational r(int_pow(boost::multiprecision::numerator(base), static_cast<unsigned long>(e)),
                   int_pow(boost::multiprecision::denominator(base), static_cast<unsigned long>(e)));
        return r;
    }
    if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
    // invert keeping the denominator positive
    Int p = boost::multiprecision::numerator(base);
    Int q = boost::multiprecision::denominator(base);
    if (p < 0) return rational_pow(Rational(-q, -p), -e);
    return rational_pow(Rational(q, p), -e);
}

// Accepts "p/q", plain integers, and decimal literals ("2.5" -> 5/2).
inline Rational parse_rational(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("parse_rational: cannot parse '" + std::string(s) + "'");
    };
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string num(s.substr(0, slash));
        std::string den(s.substr(slash + 1));
        if (num.empty() || den.empty()) return fail();
        try {
            Int n(num), d(den);
            if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
            if (d < 0) {
                n = -n;
                d = -d;
            }
            return Rational(n, d);
        } catch (const std::runtime_error&) {
            return fail();
        }
    }
    size_t dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string whole(s.substr(0, dot));
        std::string frac(s.substr(dot + 1));
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        for (char c : frac)
            if (c < '0' || c > '9') return fail();
        try {
            Int w(whole);
            Int scale = int_pow(10, frac.size());
            Int f = frac.empty() ? Int(0) : Int(frac);
            bool neg = !whole.empty() && whole[0] == '-';
            Int n = w * scale + (neg ? -f : f);
            return Rational(n, scale);
        } catch (const std::runtime_error&) {
            return fail();
        }
    }
    try {
        return Rational(Int(std::string(s)));
    } catch (const std::runtime_error&) {
        return fail();
    }
}

// Renders as "p" or "p/q" (lowest terms, q > 0).
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Int& i) { return i.str(); }

}  // namespace graphpoly
