#pragma once

// Real-analytic expression trees over a handful of complex variables,
// together with a numeric second-order jet extractor.
//
// Expressions are immutable DAG nodes built through the an_* helpers.
// eval_numeric evaluates at a complex point; fractional powers demand a
// strictly positive real base and throw DomainError otherwise, which is
// how graph functions signal that a probe left their domain of
// definition.
//
// numeric_hermitian_jet recovers the Hermitian quadratic part of a pair
// of real-valued expressions at a base point by central finite
// differences. The step is halved once and the two stencils compared,
// so silently wrong derivatives are rejected rather than returned.

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "crtool/poly.hpp"
#include "crtool/jet.hpp"

namespace crtool {

enum class AnKind {
    CONST,
    VAR,
    CONJ_VAR,
    ADD,
    SUB,
    MUL,
    POW_INT,
    POW_REAL,
    RE,
    IM,
    MOD2,
};

struct AnalyticNode;
using AnalyticExpr = std::shared_ptr<const AnalyticNode>;

struct AnalyticNode {
    AnKind kind;
    std::complex<double> cval{};   // CONST
    int slot = -1;                 // VAR / CONJ_VAR, zero-based
    int ipow = 0;                  // POW_INT
    Rational rpow = 0;             // POW_REAL
    AnalyticExpr a;                // first child
    AnalyticExpr b;                // second child (ADD/SUB/MUL)
};

AnalyticExpr an_const(std::complex<double> c);
AnalyticExpr an_const(const Rational& r);
AnalyticExpr an_var(int slot);
AnalyticExpr an_conj_var(int slot);
AnalyticExpr an_add(AnalyticExpr a, AnalyticExpr b);
AnalyticExpr an_sub(AnalyticExpr a, AnalyticExpr b);
AnalyticExpr an_mul(AnalyticExpr a, AnalyticExpr b);
AnalyticExpr an_pow(AnalyticExpr a, int k);
AnalyticExpr an_pow_real(AnalyticExpr a, const Rational& e);
AnalyticExpr an_re(AnalyticExpr a);
AnalyticExpr an_im(AnalyticExpr a);
AnalyticExpr an_mod2(AnalyticExpr a);

// Evaluates at point, where point[slot] feeds VAR(slot) and its
// conjugate feeds CONJ_VAR(slot). POW_REAL with a non-integral exponent
// requires its argument to evaluate to a real number > 0 (imaginary
// part below tol) and throws DomainError otherwise.
std::complex<double> eval_numeric(const AnalyticExpr& e,
                                  const std::vector<std::complex<double>>& point);

// Converts an exact polynomial in z_1, .., z_n and conjugates into an
// expression tree, mapping z_a to slot a-1. Variables outside that
// range are rejected.
AnalyticExpr to_analytic(const PolyCC& p, unsigned n_slots);

// Polynomial part plus prefactor * base^exponent terms.
AnalyticExpr to_analytic(const GraphFunction& g, unsigned n_slots);

struct NumericHermitian2 {
    std::array<std::array<std::complex<double>, 2>, 2> h{};
};

// Hermitian quadratic coefficients H[a][b] ~ d^2 f / dz_a dzbar_b of a
// real-valued expression in two complex slots, at the given base point.
// Uses central differences with step h and a half-step consistency
// check; throws IdentityFailure if the expression is detectably
// non-real at the sample points or if the two stencils disagree beyond
// the internal gate, and propagates DomainError from evaluation.
NumericHermitian2 numeric_hermitian_jet(const AnalyticExpr& f,
                                        const std::array<std::complex<double>, 2>& base,
                                        double step = 1e-4);

}  // namespace crtool
