#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "crtool/errors.hpp"
#include "crtool/group.hpp"
#include "crtool/hermitian.hpp"
#include "crtool/jet.hpp"
#include "crtool/surface.hpp"
#include "doctest.h"

using namespace crtool;

namespace {

const Gaussian I = Gaussian::i();

// Closed forms of the derived probe pairs, frozen from a hand computation of
// the degree-2 jets of the orbit graph functions.
HermitianPencil pos_pair(const Rational& mu, const Rational& sg) {
    return {HermitianMatrix2::make(Rational(-3) * mu / 2, I, Rational(3) * mu / 16),
            HermitianMatrix2::make(12 - 2 * sg, I * Gaussian(Rational(9) * mu / 2),
                                   sg / 2)};
}

HermitianPencil neg_pair(const Rational& nu, const Rational& sg) {
    return {HermitianMatrix2::make(Rational(3) * nu / 2, I, Rational(3) * nu / 16),
            HermitianMatrix2::make(2 * sg - 12, -I * Gaussian(Rational(9) * nu / 2),
                                   sg / 2)};
}

HermitianPencil rho_pair(const Rational& r) {
    return {HermitianMatrix2::make(1, Gaussian(0), 0),
            HermitianMatrix2::make(0, I * Gaussian(3), r / 9)};
}

Rational rnd_rat(std::mt19937_64& rng) {
    return Rational(static_cast<long>(rng() % 9) - 4,
                    static_cast<long>(rng() % 3) + 1);
}

Gaussian rnd_gauss(std::mt19937_64& rng) { return {rnd_rat(rng), rnd_rat(rng)}; }

using CMatrix2 = std::array<std::array<Gaussian, 2>, 2>;

CMatrix2 rnd_invertible(std::mt19937_64& rng) {
    while (true) {
        CMatrix2 g = {{{rnd_gauss(rng), rnd_gauss(rng)},
                       {rnd_gauss(rng), rnd_gauss(rng)}}};
        if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != Gaussian(0)) return g;
    }
}

// Evaluates a graph function at a CR point where every fractional-power base
// comes out exactly 1, so the value stays rational.
Rational eval_graph_at_unit_base(const GraphFunction& f, const Gaussian& z,
                                 const Gaussian& w) {
    std::map<VarId, Gaussian> vals{{Zv(1), z}, {Zv(2), w}};
    Gaussian out = evaluate(f.poly, vals);
    for (const auto& t : f.frac) {
        REQUIRE(evaluate(t.base, vals) == Gaussian(1));
        out = out + evaluate(t.prefactor, vals);
    }
    REQUIRE(out.im == 0);
    return out.re;
}

}  // namespace

TEST_CASE("hermitian matrices: construction, determinant, congruence") {
    HermitianMatrix2 a = HermitianMatrix2::make(2, Gaussian(Rational(1), Rational(1)), 3);
    CHECK(a.h[1][0] == Gaussian(Rational(1), Rational(-1)));
    CHECK(a.det() == 4);  // 2*3 - |1+i|^2
    CHECK(!a.is_zero());
    CHECK(HermitianMatrix2::diag(0, 0).is_zero());
    CHECK(HermitianMatrix2::antidiag(I).det() == -1);
    CHECK(a.scaled(-2).h[0][0] == Gaussian(-4));
    CHECK((a + a.scaled(-1)).is_zero());

    CMatrix2 id = {{{Gaussian(1), Gaussian(0)}, {Gaussian(0), Gaussian(1)}}};
    CHECK(congruence(a, id) == a);
    CMatrix2 swap = {{{Gaussian(0), Gaussian(1)}, {Gaussian(1), Gaussian(0)}}};
    HermitianMatrix2 d = HermitianMatrix2::diag(5, 7);
    CHECK(congruence(d, swap) == HermitianMatrix2::diag(7, 5));
}

TEST_CASE("hermitian part extraction") {
    PolyCC z1(Zv(1)), z2(Zv(2)), zb1(Zbv(1)), zb2(Zbv(2));
    Gaussian c(Rational(1), Rational(1));
    PolyCC p = (z1 * zb1).scaled(Gaussian(2)) + (z1 * zb2).scaled(c) +
               (z2 * zb1).scaled(c.conj()) + (z2 * zb2).scaled(Gaussian(3));
    HermitianMatrix2 m = hermitian_part(p);
    CHECK(m == HermitianMatrix2::make(2, c, 3));

    CHECK_THROWS_AS(hermitian_part(z1 * zb2), IdentityFailure);
    CHECK_THROWS_AS(hermitian_part((z1 * zb1).scaled(I)), IdentityFailure);
}

TEST_CASE("jet helpers: truncation, shift, fractional powers") {
    PolyCC z1(Zv(1)), zb1(Zbv(1));
    PolyCC cube = (PolyCC(1) + z1).pow(3);
    CHECK(degree_truncate(cube, 2) ==
          PolyCC(1) + z1.scaled(Gaussian(3)) + z1.pow(2).scaled(Gaussian(3)));
    CHECK(degree_truncate(cube, 0) == PolyCC(1));

    PolyCC shifted = taylor_shift(z1 * zb1, {{Zv(1), I}});
    CHECK(shifted == PolyCC(1) + z1.scaled(-I) + zb1.scaled(I) + z1 * zb1);

    PolyCC u = z1 + zb1;
    PolyCC expect = PolyCC(1) + u.scaled(Gaussian(Rational(3, 2))) +
                    u.pow(2).scaled(Gaussian(Rational(3, 8)));
    CHECK(frac_power_trunc2(PolyCC(1) + u, Rational(3) / 2) == expect);

    CHECK_THROWS_AS(frac_power_trunc2(PolyCC(2) + u, Rational(3) / 2), InvalidParams);
    CHECK_THROWS_AS(frac_power_trunc2(u, Rational(1) / 2), InvalidParams);
}

TEST_CASE("reference surface pairs and their classes") {
    auto pe = exact_hermitian_pair(make_named(NamedSurface::E));
    CHECK(pe.H1 == HermitianMatrix2::antidiag(Gaussian(1)));
    CHECK(pe.H2.is_zero());
    CHECK(classify_pencil(pe) == PencilClass::DEPENDENT);

    auto pf = exact_hermitian_pair(make_named(NamedSurface::F));
    CHECK(pf.H1 == HermitianMatrix2::diag(1, 0));
    CHECK(pf.H2.is_zero());
    CHECK(classify_pencil(pf) == PencilClass::DEPENDENT);

    auto pp = exact_hermitian_pair(make_named(NamedSurface::Q_PLUS));
    CHECK(pencil_discriminant(pp).disc == 4);
    CHECK(classify_pencil(pp) == PencilClass::Q_PLUS);

    auto pm = exact_hermitian_pair(make_named(NamedSurface::Q_MINUS));
    CHECK(pencil_discriminant(pm).disc == -4);
    CHECK(classify_pencil(pm) == PencilClass::Q_MINUS);

    auto pz = exact_hermitian_pair(make_named(NamedSurface::Q_ZERO));
    CHECK(pencil_discriminant(pz).disc == 0);
    CHECK(!pencil_discriminant(pz).dependent);
    CHECK(classify_pencil(pz) == PencilClass::Q_ZERO);

    CHECK_THROWS_AS(exact_hermitian_pair(make_named(NamedSurface::TUBE_C)),
                    WrongCRType);
    CHECK_THROWS_AS(exact_hermitian_pair(make_named(NamedSurface::VPN_CUBIC)),
                    WrongCRType);
}

TEST_CASE("derived probe pairs match their frozen closed forms") {
    const std::vector<Rational> vals = {-2, -1, 0, Rational(1, 2), 1, 2};
    for (const auto& a : vals) {
        for (const auto& s : vals) {
            CHECK(probe_pair(Branch::POS, a, s) == pos_pair(a, s));
            CHECK(probe_pair(Branch::NEG, a, s) == neg_pair(a, s));
        }
        CHECK(probe_pair(Branch::RHO, a) == rho_pair(a));
        CHECK(probe_pair(Branch::TAU, a) == rho_pair(a));
    }
    CHECK_THROWS_AS(probe_pair(Branch::SURFACE_C, 0), InvalidParams);
    CHECK_THROWS_AS(printed_probe_pair(Branch::OPLUS, 0), InvalidParams);
}

TEST_CASE("printed pairs differ from derived pairs in one real entry") {
    const std::vector<Rational> vals = {-2, 0, 1, 3, 6, 10};
    for (const auto& a : vals) {
        for (const auto& s : vals) {
            auto dp = probe_pair(Branch::POS, a, s);
            auto pp = printed_probe_pair(Branch::POS, a, s);
            CHECK(dp.H1 == pp.H1);
            CHECK(dp.H2.h[0][0] - pp.H2.h[0][0] == Gaussian(12 - 2 * s));
            CHECK(dp.H2.h[0][1] == pp.H2.h[0][1]);
            CHECK(dp.H2.h[1][1] == pp.H2.h[1][1]);
            CHECK((dp == pp) == (s == 6));

            auto dn = probe_pair(Branch::NEG, a, s);
            auto pn = printed_probe_pair(Branch::NEG, a, s);
            CHECK(dn.H1 == pn.H1);
            CHECK(dn.H2.h[0][0] - pn.H2.h[0][0] == Gaussian(2 * s - 12));
            CHECK((dn == pn) == (s == 6));
        }
        CHECK(probe_pair(Branch::RHO, a) == printed_probe_pair(Branch::RHO, a));
        CHECK(probe_pair(Branch::TAU, a) == printed_probe_pair(Branch::TAU, a));
    }
}

TEST_CASE("pencil discriminants in closed form") {
    const std::vector<Rational> vals = {-3, -1, 0, Rational(2, 3), 1, 4};
    for (const auto& m : vals) {
        for (const auto& s : vals) {
            auto d = pencil_discriminant(probe_pair(Branch::POS, m, s));
            CHECK(d.A == -1 - 9 * m * m / 32);
            CHECK(d.B == -(9 * m / 8) * (s + 6));
            CHECK(d.C == 6 * s - s * s - 81 * m * m / 4);
            CHECK(d.disc == d.B * d.B - 4 * d.A * d.C);

            auto e = pencil_discriminant(probe_pair(Branch::NEG, m, s));
            CHECK(e.A == 9 * m * m / 32 - 1);
            CHECK(e.B == (9 * m / 8) * (s + 6));
            CHECK(e.C == s * s - 6 * s - 81 * m * m / 4);

            auto dp = pencil_discriminant(printed_probe_pair(Branch::POS, m, s));
            CHECK(dp.disc == (9 * m * m / 32) * (2 * s * s + 48 * s - 81 * m * m));
            auto en = pencil_discriminant(printed_probe_pair(Branch::NEG, m, s));
            CHECK(en.disc == (9 * m * m / 32) * (2 * s * s + 48 * s + 81 * m * m));
        }
        // Specializations with one parameter switched off.
        CHECK(pencil_discriminant(probe_pair(Branch::POS, 0, m)).disc ==
              4 * m * (6 - m));
        CHECK(pencil_discriminant(probe_pair(Branch::NEG, 0, m)).disc ==
              4 * m * (m - 6));
        CHECK(pencil_discriminant(probe_pair(Branch::NEG, m, 0)).disc ==
              81 * m * m * (9 * m * m / 32 - Rational(7, 16)));

        auto r = pencil_discriminant(probe_pair(Branch::RHO, m));
        CHECK(r.A == 0);
        CHECK(r.B == m / 9);
        CHECK(r.C == -9);
        CHECK(r.disc == m * m / 81);
        CHECK(pencil_discriminant(probe_pair(Branch::TAU, m)).disc == m * m / 81);
    }
}

TEST_CASE("classification landmarks for derived and printed pairs") {
    auto cls = [](const HermitianPencil& p) { return classify_pencil(p); };

    // Derived and printed pairs land in different classes at these points.
    CHECK(cls(probe_pair(Branch::POS, 0, 1)) == PencilClass::Q_PLUS);
    CHECK(cls(printed_probe_pair(Branch::POS, 0, 1)) == PencilClass::Q_ZERO);
    CHECK(cls(probe_pair(Branch::POS, 0, 0)) == PencilClass::Q_ZERO);
    CHECK(cls(printed_probe_pair(Branch::POS, 0, 0)) == PencilClass::DEPENDENT);
    CHECK(cls(probe_pair(Branch::NEG, 1, 0)) == PencilClass::Q_MINUS);
    CHECK(cls(printed_probe_pair(Branch::NEG, 1, 0)) == PencilClass::Q_PLUS);

    // Points where they agree.
    CHECK(cls(probe_pair(Branch::POS, 1, 0)) == PencilClass::Q_MINUS);
    CHECK(cls(printed_probe_pair(Branch::POS, 1, 0)) == PencilClass::Q_MINUS);
    CHECK(cls(probe_pair(Branch::NEG, 2, 0)) == PencilClass::Q_PLUS);
    CHECK(cls(probe_pair(Branch::NEG, 1, 10)) == PencilClass::Q_PLUS);
    CHECK(cls(printed_probe_pair(Branch::NEG, 1, 10)) == PencilClass::Q_PLUS);

    // On the vanishing stratum the class depends only on whether the
    // weight-4 parameter vanishes.
    CHECK(cls(probe_pair(Branch::RHO, 0)) == PencilClass::Q_ZERO);
    CHECK(cls(probe_pair(Branch::RHO, 1)) == PencilClass::Q_PLUS);
    CHECK(cls(probe_pair(Branch::RHO, -5)) == PencilClass::Q_PLUS);
    CHECK(cls(probe_pair(Branch::TAU, 0)) == PencilClass::Q_ZERO);
    CHECK(cls(probe_pair(Branch::TAU, Rational(1, 3))) == PencilClass::Q_PLUS);
}

TEST_CASE("congruence scales the discriminant by |det g|^4") {
    std::mt19937_64 rng(20240817);
    std::vector<HermitianPencil> pencils = {
        probe_pair(Branch::POS, 1, 2),    probe_pair(Branch::NEG, 1, 0),
        probe_pair(Branch::RHO, 1),       probe_pair(Branch::TAU, -1),
        probe_pair(Branch::POS, 0, 0),
        exact_hermitian_pair(make_named(NamedSurface::E)),
        exact_hermitian_pair(make_named(NamedSurface::Q_PLUS)),
        exact_hermitian_pair(make_named(NamedSurface::Q_MINUS)),
        exact_hermitian_pair(make_named(NamedSurface::Q_ZERO)),
    };
    for (const auto& p : pencils) {
        auto d0 = pencil_discriminant(p);
        PencilClass c0 = classify_pencil(p);
        for (int rep = 0; rep < 25; ++rep) {
            CMatrix2 g = rnd_invertible(rng);
            Rational scale = (g[0][0] * g[1][1] - g[0][1] * g[1][0]).norm();
            HermitianPencil q{congruence(p.H1, g), congruence(p.H2, g)};
            auto d1 = pencil_discriminant(q);
            CHECK(d1.A == d0.A * scale);
            CHECK(d1.B == d0.B * scale);
            CHECK(d1.C == d0.C * scale);
            CHECK(d1.disc == d0.disc * scale * scale);
            CHECK(d1.dependent == d0.dependent);
            CHECK(classify_pencil(q) == c0);
        }
    }
}

TEST_CASE("orbit graph base points carry the branch data") {
    auto g1 = orbit_graph(Branch::POS, Rational(3, 2), -2);
    CHECK(invariants_PQR(g1.base) ==
          std::array<Rational, 3>{1, Rational(3, 2), -2});
    auto d1 = orbit_descriptor(g1.base);
    CHECK(d1.branch == Branch::POS);
    CHECK(d1.primary->rational_value() == Rational(3, 2));
    CHECK(d1.sigma == Rational(-2));
    CHECK(g1.probe == std::array<Gaussian, 2>{Gaussian(0), g1.base[1]});

    auto g2 = orbit_graph(Branch::NEG, -1, 5);
    CHECK(invariants_PQR(g2.base) == std::array<Rational, 3>{-1, -1, 5});
    CHECK(orbit_descriptor(g2.base).branch == Branch::NEG);

    auto g3 = orbit_graph(Branch::RHO, 7);
    CHECK(invariants_PQR(g3.base) == std::array<Rational, 3>{0, 1, 7});
    auto d3 = orbit_descriptor(g3.base);
    CHECK(d3.branch == Branch::RHO);
    CHECK(d3.primary->rational_value() == 7);
    CHECK(!d3.sigma.has_value());
    CHECK(g3.probe == std::array<Gaussian, 2>{Gaussian(0), g3.base[2]});

    auto g4 = orbit_graph(Branch::TAU, 0);
    CHECK(invariants_PQR(g4.base) == std::array<Rational, 3>{0, -1, 0});
    CHECK(orbit_descriptor(g4.base).branch == Branch::TAU);

    // The jets at the probe recover the transverse coordinates of the base.
    CHECK(quadratic_jet(g1.phi1, g1.probe).coefficient(Monomial::one()) ==
          Gaussian(Rational(3, 2)));
    CHECK(quadratic_jet(g1.phi2, g1.probe).coefficient(Monomial::one()) ==
          Gaussian(-2));
    CHECK(quadratic_jet(g3.phi2, g3.probe).coefficient(Monomial::one()) ==
          Gaussian(7));
    CHECK(is_real(quadratic_jet(g1.phi2, g1.probe)));
    CHECK(is_real(quadratic_jet(g4.phi2, g4.probe)));
}

TEST_CASE("graphs agree with the group action along the orbit") {
    std::mt19937_64 rng(77001);
    const Rational mu(5, 2), sg(-3), rr(2), tt(-4);
    struct Setup {
        Branch b;
        Rational primary, sigma;
        int cr_w;  // index of the transverse CR coordinate in the point
        int t1, t2;  // ambient indices carried by phi1 and phi2
    };
    const std::vector<Setup> setups = {
        {Branch::POS, mu, sg, 1, 2, 3},
        {Branch::NEG, mu, sg, 1, 2, 3},
        {Branch::RHO, rr, 0, 2, 1, 3},
        {Branch::TAU, tt, 0, 2, 1, 3},
    };
    for (const auto& su : setups) {
        OrbitGraph g = orbit_graph(su.b, su.primary, su.sigma);
        for (int rep = 0; rep < 8; ++rep) {
            GroupElement el;
            el.lambda = 1;
            el.p = rnd_gauss(rng);
            el.q2 = rnd_rat(rng);
            el.q3 = rnd_rat(rng);
            el.q4 = rnd_rat(rng);
            CPoint pt = act(el, g.base);
            size_t w = static_cast<size_t>(su.cr_w);
            Rational f1 = eval_graph_at_unit_base(g.phi1, pt[0], pt[w]);
            Rational f2 = eval_graph_at_unit_base(g.phi2, pt[0], pt[w]);
            CHECK(f1 == pt[static_cast<size_t>(su.t1)].im);
            CHECK(f2 == pt[static_cast<size_t>(su.t2)].im);
        }
    }
}

TEST_CASE("reflection swaps the branches as expected") {
    GroupElement refl = reflection();
    auto desc = [&](Branch b, const Rational& a, const Rational& s) {
        return orbit_descriptor(act(refl, orbit_graph(b, a, s).base));
    };
    auto d = desc(Branch::POS, 2, 5);
    CHECK(d.branch == Branch::POS);
    CHECK(d.primary->rational_value() == -2);
    CHECK(d.sigma == Rational(5));

    d = desc(Branch::NEG, 2, 5);
    CHECK(d.branch == Branch::NEG);
    CHECK(d.primary->rational_value() == -2);

    d = desc(Branch::RHO, 3, 0);
    CHECK(d.branch == Branch::TAU);
    CHECK(d.primary->rational_value() == 3);

    d = desc(Branch::TAU, 3, 0);
    CHECK(d.branch == Branch::RHO);
    CHECK(d.primary->rational_value() == 3);
}
