#pragma once

/*
 * Exact scalar types used throughout the library.
 *
 * All measures, weights, dimensions and operator entries are kept as
 * arbitrary-precision rationals so that every identity the test suite
 * checks is an exact equality, never a floating-point comparison.
 * Complex rationals (re + im*i with rational parts) are enough for the
 * groupoid ring: every construction here stays inside that subfield.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gpd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

inline double rat_double(const Rat& x) { return x.convert_to<double>(); }

struct CRat {
    Rat re;
    Rat im;

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    CRat& operator+=(const CRat& b) { re += b.re; im += b.im; return *this; }
    CRat& operator-=(const CRat& b) { re -= b.re; im -= b.im; return *this; }
    CRat& operator*=(const CRat& b) { *this = *this * b; return *this; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline CRat conj_val(const CRat& a) { return {a.re, -a.im}; }
inline Rat conj_val(const Rat& a) { return a; }

inline bool value_is_zero(const CRat& a) { return a.is_zero(); }
inline bool value_is_zero(const Rat& a) { return a == 0; }

inline std::string crat_str(const CRat& a) {
    if (a.im == 0) return rat_str(a.re);
    return rat_str(a.re) + (a.im > 0 ? "+" : "") + rat_str(a.im) + "i";
}

}  // namespace gpd
