#include "crtool/analytic.hpp"

#include <cmath>
#include <map>

#include "crtool/errors.hpp"

namespace crtool {

namespace {

AnalyticExpr node(AnalyticNode n) {
    return std::make_shared<const AnalyticNode>(std::move(n));
}

}  // namespace

AnalyticExpr an_const(std::complex<double> c) {
    AnalyticNode n;
    n.kind = AnKind::CONST;
    n.cval = c;
    return node(std::move(n));
}

AnalyticExpr an_const(const Rational& r) {
    return an_const(std::complex<double>(rational_to_double(r), 0.0));
}

AnalyticExpr an_var(int slot) {
    AnalyticNode n;
    n.kind = AnKind::VAR;
    n.slot = slot;
    return node(std::move(n));
}

AnalyticExpr an_conj_var(int slot) {
    AnalyticNode n;
    n.kind = AnKind::CONJ_VAR;
    n.slot = slot;
    return node(std::move(n));
}

AnalyticExpr an_add(AnalyticExpr a, AnalyticExpr b) {
    AnalyticNode n;
    n.kind = AnKind::ADD;
    n.a = std::move(a);
    n.b = std::move(b);
    return node(std::move(n));
}

AnalyticExpr an_sub(AnalyticExpr a, AnalyticExpr b) {
    AnalyticNode n;
    n.kind = AnKind::SUB;
    n.a = std::move(a);
    n.b = std::move(b);
    return node(std::move(n));
}

AnalyticExpr an_mul(AnalyticExpr a, AnalyticExpr b) {
    AnalyticNode n;
    n.kind = AnKind::MUL;
    n.a = std::move(a);
    n.b = std::move(b);
    return node(std::move(n));
}

AnalyticExpr an_pow(AnalyticExpr a, int k) {
    AnalyticNode n;
    n.kind = AnKind::POW_INT;
    n.a = std::move(a);
    n.ipow = k;
    return node(std::move(n));
}

AnalyticExpr an_pow_real(AnalyticExpr a, const Rational& e) {
    AnalyticNode n;
    n.kind = AnKind::POW_REAL;
    n.a = std::move(a);
    n.rpow = e;
    return node(std::move(n));
}

AnalyticExpr an_re(AnalyticExpr a) {
    AnalyticNode n;
    n.kind = AnKind::RE;
    n.a = std::move(a);
    return node(std::move(n));
}

AnalyticExpr an_im(AnalyticExpr a) {
    AnalyticNode n;
    n.kind = AnKind::IM;
    n.a = std::move(a);
    return node(std::move(n));
}

AnalyticExpr an_mod2(AnalyticExpr a) {
    AnalyticNode n;
    n.kind = AnKind::MOD2;
    n.a = std::move(a);
    return node(std::move(n));
}

std::complex<double> eval_numeric(const AnalyticExpr& e,
                                  const std::vector<std::complex<double>>& point) {
    if (!e) throw InvalidParams("empty analytic expression");
    switch (e->kind) {
        case AnKind::CONST:
            return e->cval;
        case AnKind::VAR:
            if (e->slot < 0 || e->slot >= static_cast<int>(point.size()))
                throw InvalidParams("variable slot out of range");
            return point[static_cast<size_t>(e->slot)];
        case AnKind::CONJ_VAR:
            if (e->slot < 0 || e->slot >= static_cast<int>(point.size()))
                throw InvalidParams("variable slot out of range");
            return std::conj(point[static_cast<size_t>(e->slot)]);
        case AnKind::ADD:
            return eval_numeric(e->a, point) + eval_numeric(e->b, point);
        case AnKind::SUB:
            return eval_numeric(e->a, point) - eval_numeric(e->b, point);
        case AnKind::MUL:
            return eval_numeric(e->a, point) * eval_numeric(e->b, point);
        case AnKind::POW_INT: {
            std::complex<double> v = eval_numeric(e->a, point);
            if (e->ipow < 0) {
                if (std::abs(v) == 0.0) throw DomainError("zero base with negative power");
                return std::pow(v, e->ipow);
            }
            std::complex<double> acc(1.0, 0.0);
            for (int k = 0; k < e->ipow; ++k) acc *= v;
            return acc;
        }
        case AnKind::POW_REAL: {
            std::complex<double> v = eval_numeric(e->a, point);
            double ex = rational_to_double(e->rpow);
            constexpr double tol = 1e-9;
            if (std::abs(v.imag()) > tol * (1.0 + std::abs(v.real())))
                throw DomainError("fractional power of a non-real value");
            if (v.real() <= 0.0)
                throw DomainError("fractional power of a non-positive value");
            return {std::pow(v.real(), ex), 0.0};
        }
        case AnKind::RE:
            return {eval_numeric(e->a, point).real(), 0.0};
        case AnKind::IM:
            return {eval_numeric(e->a, point).imag(), 0.0};
        case AnKind::MOD2: {
            std::complex<double> v = eval_numeric(e->a, point);
            return {std::norm(v), 0.0};
        }
    }
    throw InvalidParams("unknown analytic node kind");
}

AnalyticExpr to_analytic(const PolyCC& p, unsigned n_slots) {
    AnalyticExpr sum = an_const(std::complex<double>(0.0, 0.0));
    bool first = true;
    for (const auto& [mono, coef] : p.terms()) {
        AnalyticExpr term =
            an_const(std::complex<double>(rational_to_double(coef.re), rational_to_double(coef.im)));
        for (const auto& [var, exp] : mono.exponents()) {
            AnalyticExpr base;
            unsigned a = var.index;
            if (a == 0 || a > n_slots)
                throw InvalidParams("variable outside slot range");
            if (var.kind == VarKind::Z) {
                base = an_var(static_cast<int>(a) - 1);
            } else if (var.kind == VarKind::Zbar) {
                base = an_conj_var(static_cast<int>(a) - 1);
            } else {
                throw InvalidParams("non-coordinate variable in analytic conversion");
            }
            term = an_mul(term, exp == 1 ? base : an_pow(base, static_cast<int>(exp)));
        }
        sum = first ? term : an_add(sum, term);
        first = false;
    }
    return sum;
}

AnalyticExpr to_analytic(const GraphFunction& g, unsigned n_slots) {
    AnalyticExpr sum = to_analytic(g.poly, n_slots);
    for (const auto& t : g.frac) {
        AnalyticExpr term = an_mul(to_analytic(t.prefactor, n_slots),
                                   an_pow_real(to_analytic(t.base, n_slots), t.expnt));
        sum = an_add(sum, term);
    }
    return sum;
}

namespace {

double eval_real(const AnalyticExpr& f, const std::vector<std::complex<double>>& point) {
    std::complex<double> v = eval_numeric(f, point);
    if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v.real())))
        throw IdentityFailure("expression is not real-valued at sample point");
    return v.real();
}

// Second derivative of f along real coordinates u, v of the flattened
// point (x1, y1, x2, y2), centered at base, with step h.
double second_diff(const AnalyticExpr& f,
                   const std::array<std::complex<double>, 2>& base,
                   int u, int v, double h) {
    auto at = [&](double du, double dv) {
        std::array<double, 4> c = {base[0].real(), base[0].imag(),
                                   base[1].real(), base[1].imag()};
        c[static_cast<size_t>(u)] += du;
        c[static_cast<size_t>(v)] += dv;
        std::vector<std::complex<double>> pt = {{c[0], c[1]}, {c[2], c[3]}};
        return eval_real(f, pt);
    };
    if (u == v) {
        return (at(h, 0) - 2.0 * at(0, 0) + at(-h, 0)) / (h * h);
    }
    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h);
}

NumericHermitian2 jet_once(const AnalyticExpr& f,
                           const std::array<std::complex<double>, 2>& base,
                           double h) {
    // Real Hessian in coordinates (x1, y1, x2, y2).
    std::array<std::array<double, 4>, 4> hess{};
    for (int u = 0; u < 4; ++u)
        for (int v = u; v < 4; ++v)
            hess[static_cast<size_t>(u)][static_cast<size_t>(v)] =
                hess[static_cast<size_t>(v)][static_cast<size_t>(u)] = second_diff(f, base, u, v, h);
    // d^2 f / dz_a dzbar_b = (1/4)[f_{xa xb} + f_{ya yb} + i (f_{xa yb} - f_{ya xb})].
    NumericHermitian2 out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            size_t xa = static_cast<size_t>(2 * a), ya = xa + 1;
            size_t xb = static_cast<size_t>(2 * b), yb = xb + 1;
            out.h[static_cast<size_t>(a)][static_cast<size_t>(b)] = 0.25 *
                std::complex<double>(hess[xa][xb] + hess[ya][yb],
                                     hess[xa][yb] - hess[ya][xb]);
        }
    }
    return out;
}

}  // namespace

NumericHermitian2 numeric_hermitian_jet(const AnalyticExpr& f,
                                        const std::array<std::complex<double>, 2>& base,
                                        double step) {
    NumericHermitian2 coarse = jet_once(f, base, step);
    NumericHermitian2 fine = jet_once(f, base, step / 2.0);
    double worst = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            auto c = coarse.h[static_cast<size_t>(a)][static_cast<size_t>(b)];
            auto g = fine.h[static_cast<size_t>(a)][static_cast<size_t>(b)];
            worst = std::max(worst, std::abs(c - g) / (1.0 + std::abs(g)));
        }
    if (worst > 1e-5)
        throw IdentityFailure("finite-difference stencils disagree; jet unreliable");
    // Enforce Hermitian symmetry and flag gross violations.
    auto& h = fine.h;
    double asym = std::max(std::abs(h[0][0].imag()) + std::abs(h[1][1].imag()),
                           std::abs(h[0][1] - std::conj(h[1][0])));
    if (asym > 1e-6)
        throw IdentityFailure("numeric jet is not Hermitian");
    h[0][0] = {h[0][0].real(), 0.0};
    h[1][1] = {h[1][1].real(), 0.0};
    auto off = 0.5 * (h[0][1] + std::conj(h[1][0]));
    h[0][1] = off;
    h[1][0] = std::conj(off);
    return fine;
}

}  // namespace crtool
