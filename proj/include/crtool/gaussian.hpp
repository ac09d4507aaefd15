// Exact scalar arithmetic: rationals (boost cpp_rational) and Gaussian
// rationals a + bi with rational a, b.  All coefficient arithmetic in the
// project runs over these types; nothing here ever rounds.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

#include "crtool/errors.hpp"

namespace crtool {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign(const Rational& r) { return r.sign(); }

std::string rational_to_string(const Rational& r);
double rational_to_double(const Rational& r);

// Exact integer n-th root: returns true and sets root if v = root^n with
// root >= 0.  v must be >= 0.
bool integer_nth_root(const BigInt& v, unsigned n, BigInt& root);

// Exact rational n-th root (nonnegative input); false if irrational.
bool rational_nth_root(const Rational& v, unsigned n, Rational& root);

struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
    Gaussian(long r) : re(r) {}                 // NOLINT
    Gaussian(int r) : re(r) {}                  // NOLINT
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }
    Rational norm() const { return re * re + im * im; }  // |.|^2

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational nr = re * o.re - im * o.im;
        Rational ni = re * o.im + im * o.re;
        re = std::move(nr);
        im = std::move(ni);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    // Total order (re, then im), used only for canonical container keys.
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

// Parses the CLI literal grammar [+-]?p(/q)?([+-]p(/q)?I)? as well as the
// pure-imaginary shorthands "I", "-I", "p/qI".  Throws ParseError.
Gaussian parse_gaussian(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace crtool
