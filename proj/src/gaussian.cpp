#include "crtool/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace crtool {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

bool integer_nth_root(const BigInt& v, unsigned n, BigInt& root) {
    if (v < 0) return false;
    if (v == 0 || v == 1) {
        root = v;
        return true;
    }
    // Bisection on r^n = v; v fits well within the sizes used here.
    BigInt lo = 1, hi = v;
    while (lo <= hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt p = 1;
        for (unsigned k = 0; k < n; ++k) p *= mid;
        if (p == v) {
            root = mid;
            return true;
        }
        if (p < v)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return false;
}

bool rational_nth_root(const Rational& v, unsigned n, Rational& root) {
    if (v < 0) return false;
    BigInt rn, rd;
    if (!integer_nth_root(numerator(v), n, rn)) return false;
    if (!integer_nth_root(denominator(v), n, rd)) return false;
    root = Rational(rn, rd);
    return true;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    Rational n = o.norm();
    if (n == 0) throw DomainError("division by zero Gaussian rational");
    Rational nr = (re * o.re + im * o.im) / n;
    Rational ni = (im * o.re - re * o.im) / n;
    re = std::move(nr);
    im = std::move(ni);
    return *this;
}

std::string Gaussian::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    if (g.im == 0) return os << g.re;
    if (g.re == 0) {
        if (g.im == 1) return os << "I";
        if (g.im == -1) return os << "-I";
        return os << g.im << "*I";
    }
    os << g.re;
    if (g.im > 0)
        os << "+";
    // negative sign comes from the value itself
    if (g.im == 1)
        os << "I";
    else if (g.im == -1)
        os << "-I";
    else
        os << g.im << "*I";
    return os;
}

namespace {

// Reads an optionally signed rational p or p/q starting at pos.
Rational read_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected digits in rational at '" + s.substr(start) + "'");
    BigInt num(s.substr(start, pos - start));
    BigInt den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw ParseError("expected denominator digits in '" + s + "'");
        den = BigInt(s.substr(dstart, pos - dstart));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    Rational r = read_rational(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in rational '" + text + "'");
    return r;
}

Gaussian parse_gaussian(const std::string& text) {
    if (text.empty()) throw ParseError("empty Gaussian literal");
    size_t pos = 0;
    // Pure imaginary shorthands: I, -I, +I, or <rational>I.
    auto is_imag_tail = [&](size_t p) {
        return p < text.size() && (text[p] == 'I' || text[p] == 'i') && p + 1 == text.size();
    };
    if (is_imag_tail(0)) return Gaussian::i();
    if ((text[0] == '-' || text[0] == '+') && is_imag_tail(1)) {
        Rational one(1);
        return Gaussian(Rational(0), text[0] == '-' ? -one : one);
    }
    Rational first = read_rational(text, pos);
    if (pos < text.size() && text[pos] == '*') {
        // p/q*I form
        ++pos;
        if (!is_imag_tail(pos)) throw ParseError("expected I after '*' in '" + text + "'");
        return Gaussian(Rational(0), first);
    }
    if (is_imag_tail(pos)) return Gaussian(Rational(0), first);
    if (pos == text.size()) return Gaussian(first);
    // Real part consumed; the rest must be a signed imaginary part.
    if (text[pos] != '+' && text[pos] != '-')
        throw ParseError("expected '+' or '-' before imaginary part in '" + text + "'");
    if (is_imag_tail(pos + 1)) {
        Rational one(1);
        return Gaussian(first, text[pos] == '-' ? -one : one);
    }
    Rational second = read_rational(text, pos);
    if (pos < text.size() && text[pos] == '*') ++pos;
    if (!is_imag_tail(pos)) throw ParseError("expected I to close imaginary part in '" + text + "'");
    return Gaussian(first, second);
}

}  // namespace crtool
