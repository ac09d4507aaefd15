#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "crtool/errors.hpp"
#include "crtool/hermitian.hpp"
#include "crtool/orbitclass.hpp"

using namespace crtool;

namespace {

OrbitDescriptor quad_desc(Branch b, const Rational& num, const Rational& base,
                          const Rational& sigma = 0) {
    const bool planar = b == Branch::POS || b == Branch::NEG;
    OrbitDescriptor d;
    d.branch = b;
    d.primary = ExactParam{num, base,
                           planar ? std::pair<int, int>{3, 2}
                                  : std::pair<int, int>{4, 3}};
    if (planar) d.sigma = sigma;
    d.base_point = orbit_graph_at(b, num, base, sigma).base;
    return d;
}

ModelTag pencil_of(const OrbitDescriptor& d) {
    return classify(d, ClassifyBackend::PENCIL);
}

ModelTag table_of(const OrbitDescriptor& d) {
    return classify(d, ClassifyBackend::PAPER_TABLE);
}

const Gaussian I = Gaussian::i();

}  // namespace

TEST_CASE("tag names and parameterless branches") {
    CHECK(model_tag_name(ModelTag::E) == "E");
    CHECK(model_tag_name(ModelTag::Q_PLUS) == "Q(+1)");
    CHECK(model_tag_name(ModelTag::Q_MINUS) == "Q(-1)");
    CHECK(model_tag_name(ModelTag::Q_ZERO) == "Q(0)");
    CHECK(model_tag_name(ModelTag::F) == "F");
    CHECK(model_tag_name(ModelTag::C_SELF) == "C-SELF");
    CHECK(model_tag_name(ModelTag::MALFORMED_ROW) == "MALFORMED-ROW");

    const OrbitDescriptor oplus =
        orbit_descriptor({Gaussian(0), Gaussian(0), Gaussian(0), I});
    const OrbitDescriptor ominus =
        orbit_descriptor({Gaussian(0), Gaussian(0), Gaussian(0), -I});
    const OrbitDescriptor tube =
        orbit_descriptor({Gaussian(0), Gaussian(0), Gaussian(0), Gaussian(0)});
    REQUIRE(oplus.branch == Branch::OPLUS);
    REQUIRE(ominus.branch == Branch::OMINUS);
    REQUIRE(tube.branch == Branch::SURFACE_C);
    for (auto backend : {ClassifyBackend::PENCIL, ClassifyBackend::PAPER_TABLE}) {
        CHECK(classify(oplus, backend) == ModelTag::F);
        CHECK(classify(ominus, backend) == ModelTag::F);
        CHECK(classify(tube, backend) == ModelTag::C_SELF);
    }
}

TEST_CASE("table rows on the positive branch") {
    CHECK(table_of(quad_desc(Branch::POS, 0, 1, 0)) == ModelTag::E);
    CHECK(table_of(quad_desc(Branch::POS, 0, 1, 1)) == ModelTag::Q_ZERO);
    CHECK(table_of(quad_desc(Branch::POS, 0, 1, -1)) == ModelTag::Q_ZERO);
    CHECK(table_of(quad_desc(Branch::POS, 0, 1, 6)) == ModelTag::Q_ZERO);
    CHECK(table_of(quad_desc(Branch::POS, 1, 1, 0)) == ModelTag::Q_MINUS);
    CHECK(table_of(quad_desc(Branch::POS, -2, 1, 0)) == ModelTag::Q_MINUS);

    // mu != 0 with sigma on or above the parabola sigma = 27 mu^2 / 16.
    CHECK(table_of(quad_desc(Branch::POS, 1, 1, Rational(27) / 16)) ==
          ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::POS, 1, 1, 2)) == ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::POS, 3, 2, 2)) == ModelTag::Q_PLUS);

    // Below the parabola the published rows cannot be evaluated.
    CHECK(table_of(quad_desc(Branch::POS, 1, 1, Rational(3) / 2)) ==
          ModelTag::MALFORMED_ROW);
    CHECK(table_of(quad_desc(Branch::POS, 1, 1, -1)) == ModelTag::MALFORMED_ROW);
    CHECK(table_of(quad_desc(Branch::POS, 2, 1, 3)) == ModelTag::MALFORMED_ROW);
    CHECK(table_of(quad_desc(Branch::POS, Rational(5) / 4, 1, Rational(5) / 2)) ==
          ModelTag::MALFORMED_ROW);
}

TEST_CASE("table rows on the negative branch") {
    CHECK(table_of(quad_desc(Branch::NEG, 0, 1, 0)) == ModelTag::E);
    CHECK(table_of(quad_desc(Branch::NEG, 0, 1, 2)) == ModelTag::Q_ZERO);
    CHECK(table_of(quad_desc(Branch::NEG, 1, 1, 0)) == ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::NEG, 1, 1, Rational(27) / 16)) ==
          ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::NEG, 1, 1, -5)) == ModelTag::Q_PLUS);

    // Above the parabola the class follows the sign of sigma^2 - t with
    // t = 24 sigma - 81 nu^2 / 2.
    CHECK(table_of(quad_desc(Branch::NEG, 1, 1, 3)) == ModelTag::Q_MINUS);
    CHECK(table_of(quad_desc(Branch::NEG, 1, 1, 10)) == ModelTag::Q_MINUS);
    CHECK(table_of(quad_desc(Branch::NEG, 1, 1, 25)) == ModelTag::Q_PLUS);

    // Exact boundary sigma^2 == t: nu^2 = 160/81 via num = 400/9, base = 10,
    // sigma = 4 gives t = 96 - 80 = 16 = sigma^2.
    const OrbitDescriptor boundary =
        quad_desc(Branch::NEG, Rational(400) / 9, 10, 4);
    CHECK(table_of(boundary) == ModelTag::Q_ZERO);
}

TEST_CASE("table rows on the vanishing stratum") {
    CHECK(table_of(quad_desc(Branch::RHO, 0, 1)) == ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::RHO, 5, 1)) == ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::RHO, 5, 3)) == ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::TAU, 0, 1)) == ModelTag::Q_PLUS);
    CHECK(table_of(quad_desc(Branch::TAU, -2, 2)) == ModelTag::Q_PLUS);
}

TEST_CASE("pencil backend landmarks") {
    CHECK(pencil_of(quad_desc(Branch::POS, 0, 1, 0)) == ModelTag::Q_ZERO);
    CHECK(pencil_of(quad_desc(Branch::POS, 0, 1, 1)) == ModelTag::Q_PLUS);
    CHECK(pencil_of(quad_desc(Branch::POS, 0, 1, -1)) == ModelTag::Q_MINUS);
    CHECK(pencil_of(quad_desc(Branch::POS, 0, 1, 6)) == ModelTag::Q_ZERO);
    CHECK(pencil_of(quad_desc(Branch::POS, 1, 1, 0)) == ModelTag::Q_MINUS);
    CHECK(pencil_of(quad_desc(Branch::POS, 1, 1, 2)) == ModelTag::Q_PLUS);
    CHECK(pencil_of(quad_desc(Branch::POS, 1, 1, -1)) == ModelTag::Q_MINUS);
    CHECK(pencil_of(quad_desc(Branch::POS, Rational(5) / 4, 1, Rational(5) / 2)) ==
          ModelTag::Q_PLUS);

    CHECK(pencil_of(quad_desc(Branch::NEG, 0, 1, 0)) == ModelTag::Q_ZERO);
    CHECK(pencil_of(quad_desc(Branch::NEG, 0, 1, 2)) == ModelTag::Q_MINUS);
    CHECK(pencil_of(quad_desc(Branch::NEG, 1, 1, 0)) == ModelTag::Q_MINUS);
    CHECK(pencil_of(quad_desc(Branch::NEG, 2, 1, 0)) == ModelTag::Q_PLUS);
    CHECK(pencil_of(quad_desc(Branch::NEG, 1, 1, 3)) == ModelTag::Q_PLUS);
    CHECK(pencil_of(quad_desc(Branch::NEG, 1, 1, 10)) == ModelTag::Q_PLUS);

    // Exact sign change of the sigma = 0 discriminant at nu^2 = 14/9,
    // reached rationally by num = 196/3, base = 14.
    CHECK(pencil_of(quad_desc(Branch::NEG, Rational(196) / 3, 14, 0)) ==
          ModelTag::Q_ZERO);

    CHECK(pencil_of(quad_desc(Branch::RHO, 0, 1)) == ModelTag::Q_ZERO);
    CHECK(pencil_of(quad_desc(Branch::RHO, 5, 1)) == ModelTag::Q_PLUS);
    CHECK(pencil_of(quad_desc(Branch::RHO, 5, 3)) == ModelTag::Q_PLUS);
    CHECK(pencil_of(quad_desc(Branch::TAU, 0, 1)) == ModelTag::Q_ZERO);
    CHECK(pencil_of(quad_desc(Branch::TAU, -2, 2)) == ModelTag::Q_PLUS);
}

TEST_CASE("scaled witness pairs match their closed forms") {
    for (const Rational& m : {Rational(-2), Rational(0), Rational(1),
                              Rational(5) / 2}) {
        for (const Rational& s : {Rational(1), Rational(2), Rational(7) / 3}) {
            for (const Rational& sg : {Rational(0), Rational(-1), Rational(3)}) {
                const HermitianPencil pos = probe_pair_at(Branch::POS, m, s, sg);
                CHECK(pos.H1 ==
                      HermitianMatrix2::make(-3 * m / (2 * s), I,
                                             3 * m / (16 * s * s)));
                CHECK(pos.H2 ==
                      HermitianMatrix2::make((12 - 2 * sg) * s,
                                             I * Gaussian(9 * m / (2 * s)),
                                             sg / 2));
                const HermitianPencil neg = probe_pair_at(Branch::NEG, m, s, sg);
                CHECK(neg.H1 ==
                      HermitianMatrix2::make(3 * m / (2 * s), I,
                                             3 * m / (16 * s * s)));
                CHECK(neg.H2 ==
                      HermitianMatrix2::make((2 * sg - 12) * s,
                                             -I * Gaussian(9 * m / (2 * s)),
                                             sg / 2));
            }
            const HermitianPencil rho = probe_pair_at(Branch::RHO, m, s);
            CHECK(rho.H1 == HermitianMatrix2::diag(1, 0));
            CHECK(rho.H2 == HermitianMatrix2::make(0, I * Gaussian(3),
                                                   m / (9 * s * s)));
            const HermitianPencil tau = probe_pair_at(Branch::TAU, m, s);
            CHECK(tau.H1 == HermitianMatrix2::diag(1, 0));
            CHECK(tau.H2 == HermitianMatrix2::make(0, I * Gaussian(3),
                                                   m / (9 * s * s)));
        }
    }

    const DiscriminantResult neg21 =
        pencil_discriminant(probe_pair_at(Branch::NEG, 1, 2, 0));
    CHECK(neg21.A == Rational(-247) / 256);
    CHECK(neg21.B == Rational(27) / 8);
    CHECK(neg21.C == Rational(-81) / 16);
    CHECK(neg21.disc == Rational(-8343) / 1024);

    const DiscriminantResult pos32 =
        pencil_discriminant(probe_pair_at(Branch::POS, 3, 2, 2));
    CHECK(pos32.disc == Rational(27223) / 1024);

    CHECK(pencil_discriminant(probe_pair_at(Branch::RHO, 5, 3)).disc ==
          Rational(25) / 6561);
    CHECK(pencil_discriminant(probe_pair_at(Branch::TAU, -2, 2)).disc ==
          Rational(1) / 324);
}

TEST_CASE("witness scale drops out of the classification") {
    // Keeping the orbit fixed while moving the witness multiplies the
    // discriminant by s on the graph branches (num scales as s^(3/2)).
    for (const Rational& sg : {Rational(0), Rational(2), Rational(-3)}) {
        const Rational d1 =
            pencil_discriminant(probe_pair_at(Branch::POS, 1, 1, sg)).disc;
        const Rational d4 =
            pencil_discriminant(probe_pair_at(Branch::POS, 8, 4, sg)).disc;
        CHECK(d4 == 4 * d1);
        const Rational e1 =
            pencil_discriminant(probe_pair_at(Branch::NEG, 1, 1, sg)).disc;
        const Rational e4 =
            pencil_discriminant(probe_pair_at(Branch::NEG, 8, 4, sg)).disc;
        CHECK(e4 == 4 * e1);
    }
    // On the vanishing stratum num scales as s^(4/3) and the discriminant
    // by s^(-4/3); s = 8 makes both rational.
    const Rational r1 = pencil_discriminant(probe_pair_at(Branch::RHO, 5, 1)).disc;
    const Rational r8 =
        pencil_discriminant(probe_pair_at(Branch::RHO, 80, 8)).disc;
    CHECK(16 * r8 == r1);

    // The same orbit described at either witness classifies identically.
    const OrbitDescriptor a = quad_desc(Branch::POS, 1, 1, 2);
    const OrbitDescriptor b = quad_desc(Branch::POS, 8, 4, 2);
    for (auto backend : {ClassifyBackend::PENCIL, ClassifyBackend::PAPER_TABLE}) {
        CHECK(classify(a, backend) == classify(b, backend));
    }
}

TEST_CASE("irrational parameters classify exactly") {
    // P = -2, Q = 1, R = 0: nu = 1 / 2^(3/2) is irrational, nu^2 = 1/8 is not.
    const OrbitDescriptor neg = orbit_descriptor(
        {Gaussian(0), Gaussian(Rational(0), -2), I, Gaussian(0)});
    REQUIRE(neg.branch == Branch::NEG);
    REQUIRE(neg.primary.has_value());
    CHECK_FALSE(neg.primary->is_rational());
    CHECK(pencil_of(neg) == ModelTag::Q_MINUS);
    CHECK(table_of(neg) == ModelTag::Q_PLUS);

    // P = 2, Q = 3, R = 8: mu = 3 / 2^(3/2), sigma = 2; both backends agree.
    const OrbitDescriptor pos = orbit_descriptor(
        {Gaussian(0), Gaussian(Rational(0), 2), Gaussian(Rational(0), 3),
         Gaussian(Rational(0), 8)});
    REQUIRE(pos.branch == Branch::POS);
    CHECK_FALSE(pos.primary->is_rational());
    REQUIRE(pos.sigma.has_value());
    CHECK(*pos.sigma == 2);
    CHECK(pencil_of(pos) == ModelTag::Q_PLUS);
    CHECK(table_of(pos) == ModelTag::Q_PLUS);
}

TEST_CASE("classification is invariant under the parameter sign flip") {
    const std::vector<std::pair<Rational, Rational>> planar_cases = {
        {1, 0}, {1, 2}, {Rational(5) / 4, Rational(5) / 2}, {2, -1}, {1, 10}};
    for (const auto& [m, sg] : planar_cases) {
        for (auto backend :
             {ClassifyBackend::PENCIL, ClassifyBackend::PAPER_TABLE}) {
            CHECK(classify(quad_desc(Branch::POS, m, 1, sg), backend) ==
                  classify(quad_desc(Branch::POS, -m, 1, sg), backend));
            CHECK(classify(quad_desc(Branch::NEG, m, 1, sg), backend) ==
                  classify(quad_desc(Branch::NEG, -m, 1, sg), backend));
        }
    }
    // The coordinate flip that reverses the primary sign also exchanges the
    // two vanishing-stratum branches at equal parameter.
    for (const Rational& n : {Rational(0), Rational(5), Rational(-2)}) {
        for (auto backend :
             {ClassifyBackend::PENCIL, ClassifyBackend::PAPER_TABLE}) {
            CHECK(classify(quad_desc(Branch::RHO, n, 1), backend) ==
                  classify(quad_desc(Branch::TAU, n, 1), backend));
        }
    }
}

TEST_CASE("descriptor validation") {
    OrbitDescriptor d;
    d.branch = Branch::POS;
    CHECK_THROWS_AS(classify(d, ClassifyBackend::PENCIL), InvalidParams);

    d.primary = ExactParam{1, 1, {3, 2}};
    CHECK_THROWS_AS(classify(d, ClassifyBackend::PAPER_TABLE), InvalidParams);

    d.sigma = Rational(0);
    CHECK(classify(d, ClassifyBackend::PENCIL) == ModelTag::Q_MINUS);

    d.primary = ExactParam{1, 1, {4, 3}};
    CHECK_THROWS_AS(classify(d, ClassifyBackend::PENCIL), InvalidParams);

    d.primary = ExactParam{1, -2, {3, 2}};
    CHECK_THROWS_AS(classify(d, ClassifyBackend::PENCIL), InvalidParams);

    OrbitDescriptor r;
    r.branch = Branch::RHO;
    r.primary = ExactParam{1, 1, {3, 2}};
    CHECK_THROWS_AS(classify(r, ClassifyBackend::PAPER_TABLE), InvalidParams);

    CHECK_THROWS_AS(sweep(Branch::OPLUS, 0, 1, 1), InvalidParams);
    CHECK_THROWS_AS(sweep(Branch::SURFACE_C, 0, 1, 1), InvalidParams);
    CHECK_THROWS_AS(sweep(Branch::POS, 0, 1, 0), InvalidParams);
    CHECK_THROWS_AS(sweep(Branch::POS, 1, 0, 1), InvalidParams);
}

TEST_CASE("degeneracy flags") {
    const DegeneracyFlags tube = degeneracy_flags(
        orbit_descriptor({Gaussian(0), Gaussian(0), Gaussian(0), Gaussian(0)}));
    CHECK(tube.cr_dim == 1);
    CHECK(tube.codim == 3);
    CHECK(tube.dimension == 5);
    CHECK_FALSE(tube.holomorphically_degenerate);
    CHECK(tube.degeneracy_witness.empty());

    for (Branch b : {Branch::POS, Branch::NEG, Branch::RHO, Branch::TAU}) {
        const DegeneracyFlags f = degeneracy_flags(quad_desc(b, 1, 1, 0));
        CHECK(f.cr_dim == 2);
        CHECK(f.codim == 2);
        CHECK(f.dimension == 6);
        CHECK_FALSE(f.holomorphically_degenerate);
    }

    for (const Gaussian& w4 : {I, -I}) {
        const DegeneracyFlags f = degeneracy_flags(
            orbit_descriptor({Gaussian(0), Gaussian(0), Gaussian(0), w4}));
        CHECK(f.cr_dim == 2);
        CHECK(f.dimension == 6);
        CHECK(f.holomorphically_degenerate);
        CHECK(f.degeneracy_witness == "d/dw4");
    }
}

TEST_CASE("quarter-step sweeps have the recorded counts") {
    const Rational q = Rational(1) / 4;

    const SweepReport pos = sweep(Branch::POS, -3, 3, q);
    CHECK(pos.points.size() == 625);
    CHECK(pos.agreements == 104);
    CHECK(pos.disagreements == 25);
    CHECK(pos.malformed == 496);
    REQUIRE(pos.summary.size() == 5);
    CHECK(pos.summary[0] ==
          "pencil Q(+1) vs table Q(0): 12 points, primary in [0, 0], "
          "sigma in [1/4, 3]");
    CHECK(pos.summary[1] ==
          "pencil Q(+1) vs table MALFORMED-ROW: 6 points, "
          "primary in [-5/4, 5/4], sigma in [3/2, 5/2]");
    CHECK(pos.summary[2] ==
          "pencil Q(-1) vs table Q(0): 12 points, primary in [0, 0], "
          "sigma in [-3, -1/4]");
    CHECK(pos.summary[3] ==
          "pencil Q(-1) vs table MALFORMED-ROW: 490 points, "
          "primary in [-3, 3], sigma in [-3, 3]");
    CHECK(pos.summary[4] ==
          "pencil Q(0) vs table E: 1 point, primary in [0, 0], "
          "sigma in [0, 0]");

    const SweepReport neg = sweep(Branch::NEG, -3, 3, q);
    CHECK(neg.points.size() == 625);
    CHECK(neg.agreements == 518);
    CHECK(neg.disagreements == 107);
    CHECK(neg.malformed == 0);
    REQUIRE(neg.summary.size() == 5);
    CHECK(neg.summary[0] ==
          "pencil Q(+1) vs table Q(-1): 8 points, primary in [-1, 1], "
          "sigma in [9/4, 3]");
    CHECK(neg.summary[2] ==
          "pencil Q(-1) vs table Q(+1): 74 points, primary in [-3/2, 3/2], "
          "sigma in [-3, 7/4]");

    for (Branch b : {Branch::RHO, Branch::TAU}) {
        const SweepReport r = sweep(b, -3, 3, q);
        CHECK(r.points.size() == 25);
        CHECK(r.agreements == 24);
        CHECK(r.disagreements == 1);
        CHECK(r.malformed == 0);
        REQUIRE(r.summary.size() == 1);
        CHECK(r.summary[0] ==
              "pencil Q(0) vs table Q(+1): 1 point, primary in [0, 0]");
    }

    CHECK(pos.agreements + pos.disagreements + pos.malformed ==
          pos.points.size());
    CHECK(neg.agreements + neg.disagreements + neg.malformed ==
          neg.points.size());
}

TEST_CASE("sweep lines match the point-by-point classifications") {
    const SweepReport pos = sweep(Branch::POS, -3, 3, Rational(1) / 4);
    for (const SweepPoint& p : pos.points) {
        if (p.sigma == 0 && p.primary != 0) {
            CHECK(p.pencil == ModelTag::Q_MINUS);
            CHECK(p.table == ModelTag::Q_MINUS);
            CHECK(p.agree);
        }
        if (p.primary == 0 && p.sigma > 0) {
            CHECK(p.pencil == ModelTag::Q_PLUS);
            CHECK(p.table == ModelTag::Q_ZERO);
            CHECK_FALSE(p.agree);
        }
    }
}

TEST_CASE("sweep serialization") {
    const SweepReport one = sweep(Branch::NEG, 1, 1, 1);
    REQUIRE(one.points.size() == 1);
    CHECK(one.disagreements == 1);
    CHECK(sweep_to_csv(one) ==
          "primary,sigma,pencil,table,agree\n1,1,Q(-1),Q(+1),0\n");

    const nlohmann::json j = nlohmann::json::parse(sweep_to_json(one));
    CHECK(j["branch"] == "NEG");
    CHECK(j["range"]["step"] == "1");
    CHECK(j["counts"]["total"] == 1);
    CHECK(j["counts"]["disagree"] == 1);
    CHECK(j["points"][0]["primary"] == "1");
    CHECK(j["points"][0]["sigma"] == "1");
    CHECK(j["points"][0]["pencil"] == "Q(-1)");
    CHECK(j["points"][0]["table"] == "Q(+1)");
    CHECK(j["points"][0]["agree"] == false);

    const SweepReport zero = sweep(Branch::RHO, 0, 0, 1);
    CHECK(sweep_to_csv(zero) ==
          "primary,sigma,pencil,table,agree\n0,,Q(0),Q(+1),0\n");
    const nlohmann::json jr = nlohmann::json::parse(sweep_to_json(zero));
    CHECK(jr["points"][0]["sigma"].is_null());

    const SweepReport a = sweep(Branch::NEG, -1, 1, Rational(1) / 2);
    const SweepReport b = sweep(Branch::NEG, -1, 1, Rational(1) / 2);
    CHECK(sweep_to_json(a) == sweep_to_json(b));
    CHECK(sweep_to_csv(a) == sweep_to_csv(b));
    const nlohmann::json ja = nlohmann::json::parse(sweep_to_json(a));
    CHECK(ja["counts"]["total"] == a.points.size());
    CHECK(ja["points"].size() == a.points.size());
    CHECK(ja["counts"]["agree"].get<size_t>() +
              ja["counts"]["disagree"].get<size_t>() +
              ja["counts"]["malformed"].get<size_t>() ==
          a.points.size());
}
