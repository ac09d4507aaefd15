// Multivariate polynomial ring over the Gaussian rationals in three variable
// families: complex variables z_a with formal conjugates zb_a, transverse
// complex variables w_j with conjugates wb_j, and real variables u_idx.
// Real variables are fixed by conjugation; the u index space doubles as the
// encoding for chart coordinates and group/orbit parameters (see VarTable).
//
// Monomials are kept in a canonical sorted representation and polynomials in
// a degree-lex ordered map, so equality of polynomials is equality of
// representations.  Everything is exact and immutable-after-construction.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crtool/gaussian.hpp"

namespace crtool {

enum class VarKind : uint8_t { Z = 0, Zbar = 1, W = 2, Wbar = 3, U = 4 };

struct VarId {
    VarKind kind;
    uint16_t index;  // 1-based

    friend bool operator==(const VarId& a, const VarId& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const VarId& a, const VarId& b) { return !(a == b); }
    friend bool operator<(const VarId& a, const VarId& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.index < b.index;
    }

    VarId conj() const {
        switch (kind) {
            case VarKind::Z: return {VarKind::Zbar, index};
            case VarKind::Zbar: return {VarKind::Z, index};
            case VarKind::W: return {VarKind::Wbar, index};
            case VarKind::Wbar: return {VarKind::W, index};
            case VarKind::U: return *this;
        }
        return *this;
    }
    bool is_real() const { return kind == VarKind::U; }
};

inline VarId Zv(int a = 1) { return {VarKind::Z, static_cast<uint16_t>(a)}; }
inline VarId Zbv(int a = 1) { return {VarKind::Zbar, static_cast<uint16_t>(a)}; }
inline VarId Wv(int j) { return {VarKind::W, static_cast<uint16_t>(j)}; }
inline VarId Wbv(int j) { return {VarKind::Wbar, static_cast<uint16_t>(j)}; }
inline VarId Uv(int j) { return {VarKind::U, static_cast<uint16_t>(j)}; }

// Reserved U-index ranges.  1..9: u_j = Re w_j on a surface.  11..19 / 21..29:
// chart coordinates x_a / y_a.  31..39: v_j = Im w_j in the ambient real
// chart.  40..51: named real parameters.
namespace chart {
inline VarId x(int a = 1) { return Uv(10 + a); }
inline VarId y(int a = 1) { return Uv(20 + a); }
inline VarId v(int j) { return Uv(30 + j); }
}  // namespace chart

namespace param {
inline const VarId lambda = Uv(40);
inline const VarId px = Uv(41);
inline const VarId py = Uv(42);
inline VarId q(int j) { return Uv(41 + j); }  // q2 -> 43, q3 -> 44, q4 -> 45
inline const VarId eps = Uv(46);
inline const VarId mu = Uv(47);
inline const VarId sigma = Uv(48);
inline const VarId nu = Uv(49);
inline const VarId rho = Uv(50);
inline const VarId tau = Uv(51);
}  // namespace param

std::string var_name(const VarId& v);
std::optional<VarId> var_from_name(const std::string& name);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(VarId v, unsigned e = 1);

    static Monomial one() { return Monomial(); }

    unsigned exponent(const VarId& v) const;
    unsigned total_degree() const;
    bool is_one() const { return exps_.empty(); }
    const std::vector<std::pair<VarId, unsigned>>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    Monomial conj() const;

    // True if v divides this monomial; quotient returned via out.
    bool divide_by(const VarId& v, Monomial& out) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const;

private:
    // Sorted by VarId, exponents > 0.
    std::vector<std::pair<VarId, unsigned>> exps_;
    friend struct MonomialDegLex;
};

// Degree-lexicographic order: total degree first, then lexicographic with
// earlier variables (smaller VarId) dominating.
struct MonomialDegLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Grading;

class PolyCC {
public:
    using TermMap = std::map<Monomial, Gaussian, MonomialDegLex>;

    PolyCC() = default;
    PolyCC(Gaussian c);                 // NOLINT: constant polynomial
    PolyCC(int c) : PolyCC(Gaussian(c)) {}  // NOLINT
    explicit PolyCC(const VarId& v);

    static PolyCC variable(const VarId& v) { return PolyCC(v); }
    static PolyCC term(const Monomial& m, const Gaussian& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Gaussian constant_term() const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;

    Gaussian coefficient(const Monomial& m) const;

    PolyCC operator-() const;
    PolyCC& operator+=(const PolyCC& o);
    PolyCC& operator-=(const PolyCC& o);
    PolyCC operator*(const PolyCC& o) const;
    PolyCC& operator*=(const PolyCC& o) { return *this = *this * o; }

    friend PolyCC operator+(PolyCC a, const PolyCC& b) { return a += b; }
    friend PolyCC operator-(PolyCC a, const PolyCC& b) { return a -= b; }
    friend bool operator==(const PolyCC& a, const PolyCC& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyCC& a, const PolyCC& b) { return !(a == b); }

    PolyCC scaled(const Gaussian& c) const;
    PolyCC pow(unsigned n) const;

    std::vector<VarId> variables() const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Gaussian& c);
    TermMap terms_;

    friend PolyCC conjugate(const PolyCC& p);
    friend PolyCC wirtinger_derivative(const PolyCC& p, const VarId& v);
    friend PolyCC substitute(const PolyCC& p, const std::map<VarId, PolyCC>& bindings);
};

// The bar involution: conjugates coefficients, swaps Z <-> Zbar, W <-> Wbar,
// fixes U.
PolyCC conjugate(const PolyCC& p);
bool is_real(const PolyCC& p);

inline PolyCC re_part(const PolyCC& p) { return (p + conjugate(p)).scaled(Gaussian(Rational(1, 2))); }
inline PolyCC im_part(const PolyCC& p) {
    return (p - conjugate(p)).scaled(Gaussian(Rational(0), Rational(-1, 2)));
}

// Formal partial derivative treating every VarId as independent.
PolyCC wirtinger_derivative(const PolyCC& p, const VarId& v);

// Ring-homomorphic substitution.  Bindings must respect conjugation: if both
// a variable and its conjugate are bound, the images must be conjugate; if
// only one of a conjugate pair is bound, the mirror binding is implied.
// Unbound variables map to themselves.  Throws ConjugationMismatch.
PolyCC substitute(const PolyCC& p, const std::map<VarId, PolyCC>& bindings);

// Full evaluation; every variable of p must be bound.  Values must respect
// conjugation (checked the same way as substitute).
Gaussian evaluate(const PolyCC& p, const std::map<VarId, Gaussian>& values);

class Grading {
public:
    // Defaults: weight 1 for Z/Zbar, weight j for W_j/Wbar_j/U_j (j <= 9),
    // weight 1 for chart coordinates x_a, y_a, weight 0 is never used.
    Grading() = default;

    void set_weight(const VarId& v, int w);
    int weight(const VarId& v) const;
    int monomial_weight(const Monomial& m) const;

    static Grading dilation();  // the default grading, explicit spelling

private:
    std::map<VarId, int> overrides_;
};

// Ascending weight decomposition; summing the components returns p.
std::vector<std::pair<int, PolyCC>> weight_components(const PolyCC& p, const Grading& g);

// Terms of weighted degree <= cap.
PolyCC weight_truncate(const PolyCC& p, const Grading& g, int cap);

}  // namespace crtool
