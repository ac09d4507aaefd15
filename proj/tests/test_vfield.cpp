#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "crtool/errors.hpp"
#include "crtool/linalg.hpp"
#include "crtool/parser.hpp"
#include "crtool/surface.hpp"
#include "crtool/vfield.hpp"
#include "doctest.h"

using namespace crtool;

namespace {

PolyVectorField field_sum(const PolyVectorField& a, const PolyVectorField& b) {
    PolyVectorField out = a;
    for (const auto& [v, c] : b.comps) out.add(v, c);
    return out;
}

PolyVectorField field_scaled(const PolyVectorField& a, const Rational& r) {
    PolyVectorField out;
    for (const auto& [v, c] : a.comps) out.add(v, c.scaled(Gaussian(r)));
    return out;
}

PolyVectorField random_field(std::mt19937_64& rng) {
    std::vector<VarId> coords = {chart::x(1), chart::y(1), Uv(2), Uv(3)};
    PolyVectorField f;
    for (const VarId& dir : coords) {
        PolyCC coeff;
        int terms = static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            int factors = static_cast<int>(rng() % 3);
            for (int k = 0; k < factors; ++k)
                m = m * Monomial(coords[rng() % coords.size()]);
            coeff += PolyCC::term(m, Gaussian(Rational(static_cast<long>(rng() % 7) - 3)));
        }
        f.add(dir, coeff);
    }
    return f;
}

// Residuals of the tangency condition for the realified fields, written in
// chart variables; zero means X and Y are tangent to the surface.
std::vector<PolyCC> tangency_residuals(const ModelSurface& s) {
    std::map<VarId, PolyCC> to_chart;
    for (int a = 1; a <= s.n; ++a)
        to_chart[Zv(a)] = PolyCC(chart::x(a)) + PolyCC(chart::y(a)).scaled(Gaussian::i());
    std::vector<PolyCC> residuals;
    for (const CROperator& op : cr_operators(s)) {
        for (const auto& e : s.eqs) {
            PolyCC phi = substitute(e.phi, to_chart);
            PolyCC Aj = substitute(op.A.at(e.w_index), to_chart);
            PolyCC rx = im_part(Aj) - wirtinger_derivative(phi, chart::x(op.alpha));
            PolyCC ry = re_part(Aj) - wirtinger_derivative(phi, chart::y(op.alpha));
            for (const auto& e2 : s.eqs) {
                PolyCC Am = substitute(op.A.at(e2.w_index), to_chart);
                PolyCC du = wirtinger_derivative(phi, Uv(e2.w_index));
                rx -= re_part(Am) * du;
                ry += im_part(Am) * du;
            }
            residuals.push_back(rx);
            residuals.push_back(ry);
        }
    }
    return residuals;
}

}  // namespace

TEST_CASE("hyperquadric CR operator") {
    ModelSurface h = make_hyperquadric();
    auto ops = cr_operators(h);
    REQUIRE(ops.size() == 1);
    CHECK(ops[0].A.at(1) == parse_poly("2*I*zb"));

    auto fields = cr_fields(h);
    REQUIRE(fields.size() == 2);
    CHECK(fields[0].component(chart::x(1)) == PolyCC(1));
    CHECK(fields[0].component(Uv(1)) == parse_poly("2*y"));
    CHECK(fields[1].component(chart::y(1)) == PolyCC(1));
    CHECK(fields[1].component(Uv(1)) == parse_poly("-2*x"));
}

TEST_CASE("Q(3,2,0) operator coefficients and weights") {
    ModelSurface q = make_q({3, 2, 0});
    auto ops = cr_operators(q);
    REQUIRE(ops.size() == 1);
    CHECK(ops[0].A.at(2) == parse_poly("2*I*zb"));
    CHECK(ops[0].A.at(3) == parse_poly("4*I*z*zb + 2*I*zb^2"));
    CHECK(ops[0].A.at(4) == parse_poly("12*I*z^2*zb + 12*I*z*zb^2 + 4*I*zb^3"));

    Grading g = q.grading();
    for (const auto& [j, Aj] : ops[0].A) {
        auto comps = weight_components(Aj, g);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].first == j - 1);
    }
}

TEST_CASE("surface F yields a trivial second pair") {
    ModelSurface f = make_named(NamedSurface::F);
    auto ops = cr_operators(f);
    REQUIRE(ops.size() == 2);
    for (const auto& [j, Aj] : ops[1].A) CHECK(Aj.is_zero());

    auto fields = cr_fields(f);
    REQUIRE(fields.size() == 4);
    CHECK(fields[2].comps.size() == 1);
    CHECK(fields[2].component(chart::x(2)) == PolyCC(1));
    CHECK(fields[3].comps.size() == 1);
    CHECK(fields[3].component(chart::y(2)) == PolyCC(1));
}

TEST_CASE("tangency holds across the named corpus") {
    std::vector<ModelSurface> corpus = {make_q({3, 2, 0}),
                                        make_q({1, 2, -3}),
                                        make_named(NamedSurface::VPN_CUBIC),
                                        make_named(NamedSurface::E),
                                        make_named(NamedSurface::F),
                                        make_named(NamedSurface::Q_PLUS),
                                        make_named(NamedSurface::Q_MINUS),
                                        make_named(NamedSurface::Q_ZERO),
                                        make_hyperquadric()};
    for (const auto& s : corpus)
        for (const PolyCC& r : tangency_residuals(s)) CHECK(r.is_zero());
}

TEST_CASE("tangency holds through the truncation weight for u-dependent surfaces") {
    GeneralGermCoeffs g;
    g.a = 1;
    g.alpha = Gaussian(1);
    g.b = 1;
    g.c = 2;
    g.d = 1;
    g.delta = Gaussian(Rational(1), Rational(1));
    g.chi = Gaussian(3);
    ModelSurface s = make_general_germ(g);
    Grading grading = s.grading();
    for (const PolyCC& r : tangency_residuals(s))
        CHECK(weight_truncate(r, grading, 2 * s.max_weight()).is_zero());
}

TEST_CASE("bracket basics") {
    PolyVectorField ddx;
    ddx.add(chart::x(1), PolyCC(1));
    PolyVectorField xddu;
    xddu.add(Uv(2), PolyCC(chart::x(1)));

    PolyVectorField b = bracket(ddx, xddu);
    CHECK(b.comps.size() == 1);
    CHECK(b.component(Uv(2)) == PolyCC(1));

    CHECK(bracket(xddu, xddu).is_zero());
    CHECK(bracket(ddx, ddx).is_zero());
}

TEST_CASE("bracket is antisymmetric bilinear and satisfies Jacobi") {
    std::mt19937_64 rng(0);
    for (int rep = 0; rep < 10; ++rep) {
        PolyVectorField X = random_field(rng), Y = random_field(rng), Z = random_field(rng);

        CHECK(field_sum(bracket(X, Y), bracket(Y, X)).is_zero());

        Rational r(3, 2);
        CHECK(bracket(field_scaled(X, r), Y) == field_scaled(bracket(X, Y), r));
        CHECK(bracket(field_sum(X, Y), Z) == field_sum(bracket(X, Z), bracket(Y, Z)));

        PolyVectorField jacobi = field_sum(
            field_sum(bracket(bracket(X, Y), Z), bracket(bracket(Y, Z), X)),
            bracket(bracket(Z, X), Y));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("field evaluation") {
    PolyVectorField xddu;
    xddu.add(Uv(2), PolyCC(chart::x(1)));
    std::vector<VarId> coords = {chart::x(1), chart::y(1), Uv(2)};
    std::map<VarId, Rational> pt{{chart::x(1), Rational(2)},
                                 {chart::y(1), Rational(0)},
                                 {Uv(2), Rational(0)}};
    auto vec = evaluate(xddu, coords, pt);
    CHECK(vec == std::vector<Rational>{0, 0, 2});
}

TEST_CASE("CR fields span 2n directions at the origin") {
    std::vector<ModelSurface> corpus = {make_q({3, 2, 0}),
                                        make_named(NamedSurface::VPN_CUBIC),
                                        make_named(NamedSurface::E),
                                        make_named(NamedSurface::F),
                                        make_named(NamedSurface::Q_PLUS),
                                        make_named(NamedSurface::Q_MINUS),
                                        make_named(NamedSurface::Q_ZERO),
                                        make_hyperquadric()};
    for (const auto& s : corpus) {
        std::vector<VarId> coords = intrinsic_chart(s);
        std::map<VarId, Rational> origin;
        for (const VarId& v : coords) origin[v] = 0;
        auto fields = cr_fields(s);
        CHECK(static_cast<int>(fields.size()) == 2 * s.n);
        std::vector<std::vector<Rational>> rows;
        for (const auto& f : fields) rows.push_back(evaluate(f, coords, origin));
        CHECK(rank(rows) == static_cast<size_t>(2 * s.n));
    }
}
