// Exact second-order Taylor expansion at a point, for functions built from a
// polynomial part plus fractional-power corrections c(z) * g(z)^e whose base
// g equals 1 at the expansion point.  Everything stays inside the Gaussian
// rationals: (1 + u)^e is expanded through the quadratic binomial term, which
// is all a degree-2 jet can see.
#pragma once

#include <array>
#include <map>
#include <vector>

#include "crtool/poly.hpp"

namespace crtool {

// Terms of total degree <= cap.
PolyCC degree_truncate(const PolyCC& p, unsigned cap);

// f with every variable of `center` replaced by center-value + variable, so
// the point `center` moves to the origin of the new variables.  Conjugate
// mirror bindings are implied; pass only the z-side of each pair.
PolyCC taylor_shift(const PolyCC& f, const std::map<VarId, Gaussian>& center);

// Degree-2 truncation of g^e for rational e.  Requires the constant term of
// g to be exactly 1; throws InvalidParams otherwise.
PolyCC frac_power_trunc2(const PolyCC& g, const Rational& e);

// prefactor * base^expnt, one correction term of a GraphFunction.
struct FracTerm {
    PolyCC prefactor;
    PolyCC base;
    Rational expnt;
};

// A real-analytic function of (z_1, z_2): polynomial plus fractional-power
// corrections whose bases equal 1 at the intended expansion point.
struct GraphFunction {
    PolyCC poly;
    std::vector<FracTerm> frac;
};

// Degree-2 Taylor polynomial of f at the point z = probe; the returned
// polynomial lives in the shifted variables, which keep the names
// z_1, z_2 and their conjugates.
PolyCC quadratic_jet(const GraphFunction& f, const std::array<Gaussian, 2>& probe);

}  // namespace crtool
