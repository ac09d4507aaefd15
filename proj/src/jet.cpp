#include "crtool/jet.hpp"

#include "crtool/errors.hpp"

namespace crtool {

PolyCC degree_truncate(const PolyCC& p, unsigned cap) {
    PolyCC out;
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() <= cap) out += PolyCC::term(m, c);
    return out;
}

PolyCC taylor_shift(const PolyCC& f, const std::map<VarId, Gaussian>& center) {
    std::map<VarId, PolyCC> bindings;
    for (const auto& [v, value] : center) bindings[v] = PolyCC(value) + PolyCC(v);
    return substitute(f, bindings);
}

PolyCC frac_power_trunc2(const PolyCC& g, const Rational& e) {
    if (g.coefficient(Monomial::one()) != Gaussian(1))
        throw InvalidParams("fractional power base must equal 1 at the expansion point");
    PolyCC u = degree_truncate(g, 2) - PolyCC(1);
    PolyCC u2 = degree_truncate(u * u, 2);
    Rational quad = e * (e - 1) / 2;
    return PolyCC(1) + u.scaled(Gaussian(e)) + u2.scaled(Gaussian(quad));
}

PolyCC quadratic_jet(const GraphFunction& f, const std::array<Gaussian, 2>& probe) {
    std::map<VarId, Gaussian> center{{Zv(1), probe[0]}, {Zv(2), probe[1]}};
    PolyCC out = degree_truncate(taylor_shift(f.poly, center), 2);
    for (const auto& t : f.frac) {
        PolyCC pre = degree_truncate(taylor_shift(t.prefactor, center), 2);
        PolyCC powed = frac_power_trunc2(taylor_shift(t.base, center), t.expnt);
        out += degree_truncate(pre * powed, 2);
    }
    return out;
}

}  // namespace crtool
