#include "crtool/verify.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <complex>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "crtool/analytic.hpp"
#include "crtool/autalg.hpp"
#include "crtool/bloomgraham.hpp"
#include "crtool/errors.hpp"
#include "crtool/group.hpp"
#include "crtool/hermitian.hpp"
#include "crtool/linalg.hpp"
#include "crtool/orbitclass.hpp"
#include "crtool/vfield.hpp"

namespace crtool {

namespace {

using nlohmann::json;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string dir_str(const ModelParams& p) {
    return "(" + rat_str(p.a) + ":" + rat_str(p.b) + ":" + rat_str(p.c) + ")";
}

Rational small_rational(std::mt19937_64& rng) {
    const int num = static_cast<int>(rng() % 19) - 9;
    const int den = 1 + static_cast<int>(rng() % 3);
    return Rational(num, den);
}

Gaussian small_gaussian(std::mt19937_64& rng) {
    const Rational re = small_rational(rng);
    return Gaussian(re, small_rational(rng));
}

SurfacePoint origin_of(const ModelSurface& s) {
    return point_over(s, std::vector<Gaussian>(static_cast<size_t>(s.n)));
}

// Scale-1 discriminants of the probe pairs as closed forms in the branch
// parameters, re-verified against the pencil computation on every grid
// point before the boundary notes quote them.
Rational disc_pos_closed(const Rational& m, const Rational& s) {
    const Rational m2 = m * m, m4 = m2 * m2, s2 = s * s;
    return Rational(9, 64) * m2 * s2 - 4 * s2 + Rational(351, 16) * m2 * s +
           24 * s - Rational(567, 16) * m2 - Rational(729, 32) * m4;
}

Rational disc_neg_closed(const Rational& n, const Rational& s) {
    const Rational n2 = n * n, n4 = n2 * n2, s2 = s * s;
    return Rational(9, 64) * n2 * s2 + 4 * s2 + Rational(351, 16) * n2 * s -
           24 * s - Rational(567, 16) * n2 + Rational(729, 32) * n4;
}

ModelTag tag_of_sign(const Rational& disc) {
    if (disc > 0) return ModelTag::Q_PLUS;
    if (disc < 0) return ModelTag::Q_MINUS;
    return ModelTag::Q_ZERO;
}

const Rational kLo = -3, kHi = 3, kStep = Rational(1, 4);

std::complex<double> to_cd(const Gaussian& g) {
    return {rational_to_double(g.re), rational_to_double(g.im)};
}

double entry_error(const NumericHermitian2& got, const HermitianMatrix2& m) {
    double worst = 0.0;
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            worst = std::max(worst, std::abs(got.h[a][b] - to_cd(m.h[a][b])));
    return worst;
}

}  // namespace

SuiteCheck check_types() {
    Timer t;
    SuiteCheck c;
    c.name = "surface types";
    c.passed = true;

    const std::vector<ModelParams> params = {
        {3, 2, 0},  {1, 0, 0},   {0, 1, 0},
        {0, 0, 1},  {1, 1, 1},   {2, 1, 0},
        {-3, 2, 0}, {5, -7, 2},  {Rational(1, 2), Rational(1, 3), 0},
        {-1, -1, -1}};
    size_t good = 0;
    for (const ModelParams& p : params) {
        const ModelSurface s = make_q(p);
        const BGType ty = bg_type(s, origin_of(s));
        if (ty.finite && ty.str() == "((2,1),(3,1),(4,1))") {
            ++good;
        } else {
            c.passed = false;
            c.details.push_back("MISMATCH at " + dir_str(p) + ": " + ty.str());
        }
    }
    c.details.push_back("quartic family: " + std::to_string(good) +
                        "/10 parameter samples have type ((2,1),(3,1),(4,1)) "
                        "at the origin");

    const std::vector<std::pair<ModelSurface, std::string>> named = {
        {make_named(NamedSurface::VPN_CUBIC), "((2,1),(3,2))"},
        {make_named(NamedSurface::E), "((2,1),(3,1))"},
        {make_hyperquadric(), "((2,1))"},
    };
    for (const auto& [s, expect] : named) {
        const BGType ty = bg_type(s, origin_of(s));
        if (ty.finite && ty.str() == expect) {
            c.details.push_back(s.label + ": " + ty.str());
        } else {
            c.passed = false;
            c.details.push_back("MISMATCH at " + s.label + ": got " + ty.str() +
                                ", expected " + expect);
        }
    }
    c.seconds = t.elapsed();
    return c;
}

std::vector<HomogeneityRow> homogeneity_scan() {
    const std::vector<ModelParams> dirs = {
        {3, 2, 0},  {1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {1, 1, 0},
        {1, 0, 1},  {0, 1, 1},  {1, 1, 1},  {2, 1, 0},  {1, 2, 0},
        {3, 1, 0},  {1, 3, 0},  {2, 3, 0},  {3, 2, 1},  {3, 2, -1},
        {-3, 2, 0}, {3, -2, 0}, {1, 1, -1}, {2, -1, 1}, {5, 4, 0},
        {4, 3, 0}};
    const std::vector<Gaussian> probes = {
        Gaussian(0), Gaussian(1), Gaussian::i(),
        Gaussian(Rational(1), Rational(1)), Gaussian(Rational(2), Rational(-1))};

    std::vector<HomogeneityRow> rows;
    for (const ModelParams& d : dirs) {
        HomogeneityRow row;
        row.dir = d;
        const ModelSurface s = make_q(d);
        for (const Gaussian& z0 : probes)
            row.types.push_back(bg_type(s, point_over(s, {z0})).str());
        row.constant_type = true;
        for (const std::string& ty : row.types)
            if (ty != row.types.front()) row.constant_type = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

SuiteCheck check_homogeneity() {
    Timer t;
    SuiteCheck c;
    c.name = "homogeneous directions";
    c.passed = true;

    const std::vector<HomogeneityRow> rows = homogeneity_scan();
    std::vector<std::string> constant_dirs;
    for (const HomogeneityRow& r : rows)
        if (r.constant_type) constant_dirs.push_back(dir_str(r.dir));

    if (constant_dirs != std::vector<std::string>{"(3:2:0)"}) {
        c.passed = false;
        std::string got = "constant-type directions:";
        for (const std::string& d : constant_dirs) got += " " + d;
        c.details.push_back("MISMATCH: " + got);
    } else {
        c.details.push_back(
            std::to_string(rows.size()) +
            " directions, 5 probes each: only (3:2:0) keeps one type "
            "sequence");
        c.details.push_back("constant sequence at (3:2:0): " +
                            rows.front().types.front());
    }
    c.seconds = t.elapsed();
    return c;
}

SuiteCheck check_group_identities() {
    Timer t;
    SuiteCheck c;
    c.name = "group identities";

    const ActionReport ra = verify_action(make_named(NamedSurface::TUBE_C));
    const InvarianceReport rv = verify_relative_invariance();
    c.passed = ra.ok && rv.ok;
    c.details.push_back(
        "surface preservation: polynomial identity in the 6 group parameters "
        "and 5 chart coordinates");
    for (const std::string& line : rv.checks) c.details.push_back(line);
    for (const std::string& line : ra.corrections)
        c.notes.push_back("published action display corrected: " + line);
    c.seconds = t.elapsed();
    return c;
}

SuiteCheck check_orbit_dimensions(uint64_t seed) {
    Timer t;
    SuiteCheck c;
    c.name = "orbit dimensions";
    c.passed = true;

    size_t on_good = 0;
    for (int k = 0; k < 20; ++k) {
        Rational x = 0, y = 0, u2 = 0, u3 = 0, u4 = 0;
        if (k > 0) {
            x = Rational(k % 5) - 2;
            y = Rational((3 * k) % 7 - 3, 2);
            u2 = Rational(k % 3) - 1;
            u3 = Rational((5 * k) % 11 - 5, 3);
            u4 = Rational(k % 4) - 2;
        }
        const Gaussian z(x, y);
        const Rational n2 = z.norm();
        const Rational phi2 = n2;
        const Rational phi3 = 2 * (z * z * z.conj()).re;
        const Rational phi4 = 3 * n2 * n2 + 4 * (z * z * z * z.conj()).re;
        const std::array<Rational, 8> pt = {x, y, u2, phi2, u3, phi3, u4, phi4};
        if (generator_rank(pt) == 5) {
            ++on_good;
        } else {
            c.passed = false;
        }
    }
    c.details.push_back("generator rank 5 at " + std::to_string(on_good) +
                        "/20 surface points including the origin");

    std::mt19937_64 rng(seed);
    size_t off_good = 0, off_total = 0;
    int guard = 0;
    while (off_total < 1000 && ++guard < 100000) {
        std::array<Rational, 8> pt;
        for (Rational& v : pt) v = small_rational(rng);
        const CPoint cp = {Gaussian(pt[0], pt[1]), Gaussian(pt[2], pt[3]),
                           Gaussian(pt[4], pt[5]), Gaussian(pt[6], pt[7])};
        const std::array<Rational, 3> pqr = invariants_PQR(cp);
        if (pqr[0] == 0 && pqr[1] == 0 && pqr[2] == 0) continue;
        ++off_total;
        if (generator_rank(pt) == 6) {
            ++off_good;
        } else {
            c.passed = false;
        }
    }
    c.details.push_back("generator rank 6 at " + std::to_string(off_good) +
                        "/1000 seeded points off the surface");

    const ModelSurface tube = make_named(NamedSurface::TUBE_C);
    const GradedAutBasis basis = aut_basis(tube, 4);
    std::vector<PolyVectorField> realized;
    for (const WeightComponent& comp : basis.by_weight)
        for (const AutField& X : comp.fields)
            realized.push_back(realify(X, tube));
    const std::vector<VarId> coords = {
        chart::x(1), chart::y(1), Uv(2), chart::v(2),
        Uv(3),       chart::v(3), Uv(4), chart::v(4)};
    size_t span_good = 0;
    for (int k = 0; k < 20; ++k) {
        std::array<Rational, 8> pt;
        for (Rational& v : pt) v = small_rational(rng);
        std::map<VarId, Rational> at;
        for (size_t i = 0; i < coords.size(); ++i) at[coords[i]] = pt[i];
        QMatrix from_group, joint;
        for (const PolyVectorField& g : generator_fields())
            from_group.push_back(evaluate(g, coords, at));
        joint = from_group;
        QMatrix from_aut;
        for (const PolyVectorField& r : realized) {
            from_aut.push_back(evaluate(r, coords, at));
            joint.push_back(from_aut.back());
        }
        const size_t rg = rank(from_group);
        if (rg == rank(from_aut) && rg == rank(joint)) {
            ++span_good;
        } else {
            c.passed = false;
        }
    }
    c.details.push_back(
        "graded basis spans the generator distribution at " +
        std::to_string(span_good) + "/20 random points");
    c.seconds = t.elapsed();
    return c;
}

SuiteCheck check_pencil_invariance(uint64_t seed) {
    Timer t;
    SuiteCheck c;
    c.name = "pencil invariance";
    c.passed = true;

    const std::vector<std::pair<std::string, HermitianPencil>> corpus = {
        {"Q(+1) normal form",
         exact_hermitian_pair(make_named(NamedSurface::Q_PLUS))},
        {"Q(-1) normal form",
         exact_hermitian_pair(make_named(NamedSurface::Q_MINUS))},
        {"Q(0) normal form",
         exact_hermitian_pair(make_named(NamedSurface::Q_ZERO))},
        {"P>0 pair mu=1 sigma=0", probe_pair(Branch::POS, 1, 0)},
        {"P>0 pair mu=0 sigma=2", probe_pair(Branch::POS, 0, 2)},
        {"P<0 pair nu=1 sigma=10", probe_pair(Branch::NEG, 1, 10)},
        {"P=0 pair rho=5", probe_pair(Branch::RHO, 5)},
        {"P=0 pair tau=-2", probe_pair(Branch::TAU, -2)},
        {"published pair mu=1 sigma=1", printed_probe_pair(Branch::POS, 1, 1)},
        {"dependent pair",
         {HermitianMatrix2::diag(1, 2), HermitianMatrix2::diag(2, 4)}},
    };

    const std::array<PencilClass, 3> expect_normal = {
        PencilClass::Q_PLUS, PencilClass::Q_MINUS, PencilClass::Q_ZERO};
    for (size_t i = 0; i < 3; ++i) {
        if (classify_pencil(corpus[i].second) != expect_normal[i]) {
            c.passed = false;
            c.details.push_back("MISMATCH: " + corpus[i].first +
                                " does not classify to itself");
        }
    }
    if (c.passed)
        c.details.push_back(
            "normal forms classify to themselves: Q(+1), Q(-1), Q(0)");

    std::mt19937_64 rng(seed);
    size_t trials_good = 0;
    for (const auto& [label, pencil] : corpus) {
        const PencilClass base = classify_pencil(pencil);
        for (int trial = 0; trial < 100; ++trial) {
            std::array<std::array<Gaussian, 2>, 2> g;
            do {
                for (auto& grow : g)
                    for (Gaussian& entry : grow) entry = small_gaussian(rng);
            } while (g[0][0] * g[1][1] - g[0][1] * g[1][0] == Gaussian(0));
            const HermitianPencil moved = {congruence(pencil.H1, g),
                                           congruence(pencil.H2, g)};
            if (classify_pencil(moved) == base) {
                ++trials_good;
            } else {
                c.passed = false;
                c.details.push_back("MISMATCH: " + label +
                                    " class changed under congruence");
            }
        }
    }
    c.details.push_back("10 pencils x 100 congruences: " +
                        std::to_string(trials_good) +
                        "/1000 classifications invariant");
    c.seconds = t.elapsed();
    return c;
}

std::vector<RowAudit> audit_published_rows() {
    const SweepReport sp = sweep(Branch::POS, kLo, kHi, kStep);
    const SweepReport sn = sweep(Branch::NEG, kLo, kHi, kStep);
    const SweepReport sr = sweep(Branch::RHO, kLo, kHi, kStep);
    const SweepReport st = sweep(Branch::TAU, kLo, kHi, kStep);

    std::vector<RowAudit> out;
    auto audit_grid = [&out](const SweepReport& rep, const std::string& row,
                             auto applies, ModelTag expect,
                             const std::string& boundary) {
        RowAudit a;
        a.row = row;
        a.boundary = boundary;
        for (const SweepPoint& p : rep.points) {
            if (!applies(p)) continue;
            ++a.applicable;
            if (p.pencil == expect) ++a.held;
        }
        out.push_back(std::move(a));
    };

    audit_grid(
        sp, "P>0: mu=0, sigma!=0 -> Q(0)",
        [](const SweepPoint& p) { return p.primary == 0 && p.sigma != 0; },
        ModelTag::Q_ZERO,
        "exact classes: Q(+1) for 0 < sigma < 6, Q(0) at sigma in {0, 6}, "
        "Q(-1) otherwise; disc = 4 sigma (6 - sigma)");
    audit_grid(
        sp, "P>0: mu!=0, sigma=0 -> Q(-1)",
        [](const SweepPoint& p) { return p.primary != 0 && p.sigma == 0; },
        ModelTag::Q_MINUS,
        "exact classes: Q(-1) on the whole line; disc = -81 mu^2 (7/16 + 9 "
        "mu^2/32) < 0");
    audit_grid(
        sp, "P>0: mu=0, sigma=0 -> E",
        [](const SweepPoint& p) { return p.primary == 0 && p.sigma == 0; },
        ModelTag::E,
        "exact class: Q(0); the probe pair is independent with disc = 0");
    audit_grid(
        sn, "P<0: nu=0, sigma!=0 -> Q(0)",
        [](const SweepPoint& p) { return p.primary == 0 && p.sigma != 0; },
        ModelTag::Q_ZERO,
        "exact classes: Q(+1) for sigma < 0, Q(-1) for 0 < sigma < 6; disc = "
        "4 sigma (sigma - 6)");
    audit_grid(
        sn, "P<0: nu!=0, sigma=0 -> Q(1)",
        [](const SweepPoint& p) { return p.primary != 0 && p.sigma == 0; },
        ModelTag::Q_PLUS,
        "exact classes: Q(-1) for 0 < nu^2 < 14/9, Q(+1) beyond; disc = 81 "
        "nu^2 (9 nu^2/32 - 7/16)");
    audit_grid(
        sn, "P<0: nu=0, sigma=0 -> E",
        [](const SweepPoint& p) { return p.primary == 0 && p.sigma == 0; },
        ModelTag::E,
        "exact class: Q(0); the probe pair is independent with disc = 0");
    audit_grid(
        sr, "P=0, Q>0: any rho -> Q(1)",
        [](const SweepPoint&) { return true; }, ModelTag::Q_PLUS,
        "exact classes: Q(0) at rho = 0, Q(+1) elsewhere; disc = rho^2/81");
    audit_grid(
        st, "P=0, Q<0: any tau -> Q(1)",
        [](const SweepPoint&) { return true; }, ModelTag::Q_PLUS,
        "exact classes: Q(0) at tau = 0, Q(+1) elsewhere; disc = tau^2/81");

    RowAudit oplus;
    oplus.row = "P=Q=0, R>0 -> F";
    oplus.applicable = 1;
    const OrbitDescriptor dp =
        orbit_descriptor({Gaussian(0), Gaussian(0), Gaussian(0), Gaussian::i()});
    if (classify(dp, ClassifyBackend::PENCIL) == ModelTag::F &&
        classify(dp, ClassifyBackend::PAPER_TABLE) == ModelTag::F)
        oplus.held = 1;
    oplus.boundary =
        "exact class: F; holomorphically degenerate (free direction d/dw4)";
    out.push_back(oplus);

    RowAudit ominus = oplus;
    ominus.row = "P=Q=0, R<0 -> F";
    ominus.held = 0;
    const OrbitDescriptor dm = orbit_descriptor(
        {Gaussian(0), Gaussian(0), Gaussian(0), -Gaussian::i()});
    if (classify(dm, ClassifyBackend::PENCIL) == ModelTag::F &&
        classify(dm, ClassifyBackend::PAPER_TABLE) == ModelTag::F)
        ominus.held = 1;
    out.push_back(ominus);

    RowAudit self;
    self.row = "P=Q=R=0 -> the surface itself";
    self.applicable = 1;
    const OrbitDescriptor dc = orbit_descriptor(CPoint{});
    if (classify(dc, ClassifyBackend::PENCIL) == ModelTag::C_SELF &&
        classify(dc, ClassifyBackend::PAPER_TABLE) == ModelTag::C_SELF)
        self.held = 1;
    self.boundary = "exact class: the surface itself";
    out.push_back(self);

    return out;
}

SuiteCheck check_table_comparison() {
    Timer t;
    SuiteCheck c;
    c.name = "classification tables";
    c.passed = true;

    const SweepReport sp = sweep(Branch::POS, kLo, kHi, kStep);
    const SweepReport sn = sweep(Branch::NEG, kLo, kHi, kStep);
    const SweepReport sr = sweep(Branch::RHO, kLo, kHi, kStep);
    const SweepReport st = sweep(Branch::TAU, kLo, kHi, kStep);

    for (const SweepReport* rep : {&sp, &sn, &sr, &st}) {
        if (rep->agreements + rep->disagreements + rep->malformed !=
            rep->points.size())
            c.passed = false;
    }
    c.details.push_back(
        "grids classified: " + std::to_string(sp.points.size()) + " + " +
        std::to_string(sn.points.size()) + " + " +
        std::to_string(sr.points.size()) + " + " +
        std::to_string(st.points.size()) + " points");

    // The scale-1 discriminant of every grid pencil must equal the closed
    // form, and the class must be its sign.
    bool closed_ok = true;
    for (const SweepPoint& p : sp.points) {
        const DiscriminantResult d = pencil_discriminant(
            probe_pair_at(Branch::POS, p.primary, 1, p.sigma));
        if (d.dependent || d.disc != disc_pos_closed(p.primary, p.sigma) ||
            tag_of_sign(d.disc) != p.pencil)
            closed_ok = false;
    }
    for (const SweepPoint& p : sn.points) {
        const DiscriminantResult d = pencil_discriminant(
            probe_pair_at(Branch::NEG, p.primary, 1, p.sigma));
        if (d.dependent || d.disc != disc_neg_closed(p.primary, p.sigma) ||
            tag_of_sign(d.disc) != p.pencil)
            closed_ok = false;
    }
    for (const SweepReport* rep : {&sr, &st}) {
        for (const SweepPoint& p : rep->points) {
            const DiscriminantResult d =
                pencil_discriminant(probe_pair_at(rep->branch, p.primary, 1));
            if (d.dependent ||
                d.disc != p.primary * p.primary / Rational(81) ||
                tag_of_sign(d.disc) != p.pencil)
                closed_ok = false;
        }
    }
    if (closed_ok) {
        c.details.push_back(
            "scale-1 discriminants match the closed forms at every grid "
            "point");
    } else {
        c.passed = false;
        c.details.push_back("MISMATCH: closed-form discriminant disagrees");
    }

    for (const RowAudit& a : audit_published_rows()) {
        const std::string tally = a.row + ": holds " +
                                  std::to_string(a.held) + "/" +
                                  std::to_string(a.applicable);
        if (a.held == a.applicable) {
            c.details.push_back(tally);
        } else {
            c.notes.push_back("published row disagrees; " + tally + "; " +
                              a.boundary);
        }
    }

    // The corrupted published rows cover the region below the parabola.
    c.notes.push_back(
        "published rows for P>0, sigma < 27 mu^2/16 with mu != 0 are "
        "textually corrupted (" +
        std::to_string(sp.malformed) +
        " grid points); recomputed boundary: 64 disc = 9 mu^2 sigma^2 - 1458 "
        "mu^4 + 1404 mu^2 sigma - 2268 mu^2 - 256 sigma^2 + 1536 sigma");
    for (const std::string& line : sp.summary)
        c.notes.push_back("P>0 grid: " + line);
    for (const std::string& line : sn.summary)
        c.notes.push_back("P<0 grid: " + line);
    for (const std::string& line : sr.summary)
        c.notes.push_back("P=0, Q>0 grid: " + line);
    for (const std::string& line : st.summary)
        c.notes.push_back("P=0, Q<0 grid: " + line);

    c.seconds = t.elapsed();
    return c;
}

SuiteCheck check_numeric_jets() {
    Timer t;
    SuiteCheck c;
    c.name = "numeric jets";
    c.passed = true;

    const std::vector<Rational> vals = {-1, 0, 1};
    double worst = 0.0;
    size_t graphs = 0;
    auto compare = [&](Branch b, const Rational& a, const Rational& s) {
        const OrbitGraph g = b == Branch::POS || b == Branch::NEG
                                 ? orbit_graph(b, a, s)
                                 : orbit_graph(b, a);
        const HermitianPencil expect =
            b == Branch::POS || b == Branch::NEG ? probe_pair(b, a, s)
                                                 : probe_pair(b, a);
        const std::array<std::complex<double>, 2> base = {to_cd(g.probe[0]),
                                                          to_cd(g.probe[1])};
        const NumericHermitian2 j1 =
            numeric_hermitian_jet(to_analytic(g.phi1, 2), base);
        const NumericHermitian2 j2 =
            numeric_hermitian_jet(to_analytic(g.phi2, 2), base);
        const double err =
            std::max(entry_error(j1, expect.H1), entry_error(j2, expect.H2));
        worst = std::max(worst, err);
        ++graphs;
        if (err >= 1e-5) c.passed = false;
    };
    for (const Rational& a : vals) {
        for (const Rational& s : vals) {
            compare(Branch::POS, a, s);
            compare(Branch::NEG, a, s);
        }
        compare(Branch::RHO, a, 0);
        compare(Branch::TAU, a, 0);
    }

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    c.details.push_back(std::to_string(graphs) +
                        " orbit graphs: finite-difference jets match the "
                        "exact pairs within 1e-5 (worst entry error " +
                        buf + ")");
    c.seconds = t.elapsed();
    return c;
}

SuiteCheck check_aut_dimensions() {
    Timer t;
    SuiteCheck c;
    c.name = "automorphism dimensions";

    const ModelSurface tube = make_named(NamedSurface::TUBE_C);
    const GradedAutBasis b = aut_basis(tube, 4);
    std::vector<size_t> dims;
    for (const WeightComponent& comp : b.by_weight)
        dims.push_back(comp.fields.size());

    const std::vector<size_t> expect = {1, 1, 1, 2, 1, 0, 0, 0, 0};
    size_t rechecked = 0, failures = 0;
    for (const WeightComponent& comp : b.by_weight)
        for (const AutField& X : comp.fields) {
            ++rechecked;
            if (!tangency_recheck(tube, X)) ++failures;
        }
    c.passed = dims == expect && b.total_dim() == 6 && failures == 0;

    std::string dims_str = "(";
    for (size_t i = 0; i < dims.size(); ++i)
        dims_str += (i ? "," : "") + std::to_string(dims[i]);
    dims_str += ")";
    c.details.push_back("per-weight dimensions " + dims_str +
                        " for weights -4..4, total " +
                        std::to_string(b.total_dim()));
    c.details.push_back("independent tangency recheck: " +
                        std::to_string(rechecked - failures) + "/" +
                        std::to_string(rechecked) + " fields pass");
    c.seconds = t.elapsed();
    return c;
}

SuiteCheck check_moduli(uint64_t seed) {
    Timer t;
    SuiteCheck c;
    c.name = "moduli equivalence";
    c.passed = true;

    std::mt19937_64 rng(seed);
    auto rnd_params = [&rng] {
        ModelParams p{small_rational(rng), small_rational(rng),
                      small_rational(rng)};
        while (p.a == 0 && p.b == 0 && p.c == 0) p.a = small_rational(rng);
        return p;
    };
    auto proportional = [](const ModelParams& p, const ModelParams& q) {
        return p.a * q.b - p.b * q.a == 0 && p.a * q.c - p.c * q.a == 0 &&
               p.b * q.c - p.c * q.b == 0;
    };

    size_t witnessed = 0;
    for (int k = 0; k < 25; ++k) {
        const ModelParams p = rnd_params();
        Rational scale = small_rational(rng);
        while (scale == 0) scale = small_rational(rng);
        const ModelParams q{p.a * scale, p.b * scale, p.c * scale};
        const auto w = model_equivalence(p, q);
        if (!w) {
            c.passed = false;
            c.details.push_back("MISMATCH: no witness for " + dir_str(p) +
                                " ~ " + dir_str(q));
            continue;
        }
        const std::map<VarId, PolyCC> change = {
            {Zv(), PolyCC(Zv()).scaled(Gaussian(w->beta))},
            {Wv(2), PolyCC(Wv(2)).scaled(Gaussian(w->beta * w->beta))},
            {Wv(3),
             PolyCC(Wv(3)).scaled(Gaussian(w->beta * w->beta * w->beta))},
            {Wv(4), PolyCC(Wv(4)).scaled(Gaussian(w->beta4))}};
        if (carries_onto(make_q(p), make_q(q), change)) {
            ++witnessed;
        } else {
            c.passed = false;
            c.details.push_back("MISMATCH: witness for " + dir_str(p) + " ~ " +
                                dir_str(q) + " fails substitution");
        }
    }
    c.details.push_back(std::to_string(witnessed) +
                        "/25 proportional pairs: witness found and verified "
                        "by substitution");

    size_t rejected = 0;
    for (int k = 0; k < 25; ++k) {
        const ModelParams p = rnd_params();
        ModelParams q = rnd_params();
        while (proportional(p, q)) q.b += 1;
        if (!model_equivalence(p, q).has_value()) {
            ++rejected;
        } else {
            c.passed = false;
            c.details.push_back("MISMATCH: unexpected witness for " +
                                dir_str(p) + " vs " + dir_str(q));
        }
    }
    c.details.push_back(std::to_string(rejected) +
                        "/25 non-proportional pairs: correctly rejected");
    c.seconds = t.elapsed();
    return c;
}

SuiteReport verify_paper_suite(uint64_t seed) {
    SuiteReport rep;
    rep.checks.push_back(check_types());
    rep.checks.push_back(check_homogeneity());
    rep.checks.push_back(check_group_identities());
    rep.checks.push_back(check_orbit_dimensions(seed));
    rep.checks.push_back(check_pencil_invariance(seed));
    rep.checks.push_back(check_table_comparison());
    rep.checks.push_back(check_numeric_jets());
    rep.checks.push_back(check_aut_dimensions());
    rep.checks.push_back(check_moduli(seed));
    return rep;
}

bool SuiteReport::all_passed() const {
    for (const SuiteCheck& c : checks)
        if (!c.passed) return false;
    return true;
}

double SuiteReport::total_seconds() const {
    double s = 0.0;
    for (const SuiteCheck& c : checks) s += c.seconds;
    return s;
}

std::string SuiteReport::text() const {
    std::ostringstream os;
    for (size_t i = 0; i < checks.size(); ++i) {
        const SuiteCheck& c = checks[i];
        os << "check " << i + 1 << ": " << c.name << ": "
           << (c.passed ? "pass" : "FAIL") << "\n";
        for (const std::string& d : c.details) os << "  - " << d << "\n";
        for (const std::string& n : c.notes) os << "  note: " << n << "\n";
    }
    size_t passed = 0;
    for (const SuiteCheck& c : checks) passed += c.passed ? 1 : 0;
    os << "checks passed: " << passed << "/" << checks.size() << "\n";
    return os.str();
}

std::string SuiteReport::json() const {
    nlohmann::json out;
    out["checks"] = nlohmann::json::array();
    for (size_t i = 0; i < checks.size(); ++i) {
        const SuiteCheck& c = checks[i];
        nlohmann::json jc;
        jc["index"] = i + 1;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        jc["details"] = c.details;
        jc["notes"] = c.notes;
        out["checks"].push_back(jc);
    }
    out["all_passed"] = all_passed();
    return out.dump(2) + "\n";
}

}  // namespace crtool
