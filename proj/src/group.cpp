#include "crtool/group.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "crtool/errors.hpp"

namespace crtool {

namespace {

const PolyCC& imag_unit() {
    static const PolyCC i(Gaussian::i());
    return i;
}

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

struct ActionVars {
    PolyCC lam, p, pb, Z;
    std::array<PolyCC, 3> W;  // W2, W3, W4
    std::array<PolyCC, 3> q;  // q2, q3, q4
};

const ActionVars& avars() {
    static const ActionVars v = [] {
        ActionVars a;
        a.lam = PolyCC(param::lambda);
        PolyCC px{PolyCC(param::px)}, py{PolyCC(param::py)};
        a.p = px + py * imag_unit();
        a.pb = px - py * imag_unit();
        a.Z = PolyCC(Zv(1));
        for (int j = 2; j <= 4; ++j) {
            a.W[j - 2] = PolyCC(Wv(j));
            a.q[j - 2] = PolyCC(param::q(j));
        }
        return a;
    }();
    return v;
}

PolyCC i_times(const PolyCC& p) { return p.scaled(Gaussian::i()); }

}  // namespace

GroupElement reflection() {
    GroupElement g;
    g.lambda = -1;
    return g;
}

const std::array<PolyCC, 4>& symbolic_action() {
    static const std::array<PolyCC, 4> act = [] {
        const ActionVars& a = avars();
        const PolyCC &lam = a.lam, &p = a.p, &pb = a.pb, &Z = a.Z;
        const PolyCC &W2 = a.W[0], &W3 = a.W[1], &W4 = a.W[2];
        PolyCC pp = p * pb;

        PolyCC z1 = lam * Z + p;

        PolyCC w2 = lam.pow(2) * W2 + i_times(lam * Z * pb).scaled(2) +
                    i_times(pp) + a.q[0];

        PolyCC w3 = lam.pow(3) * W3 + (lam.pow(2) * W2 * (p + pb)).scaled(2) +
                    i_times(lam.pow(2) * Z.pow(2) * pb).scaled(2) +
                    i_times(lam * Z * (pb.pow(2) + pp.scaled(2))).scaled(2) +
                    i_times(p.pow(2) * pb).scaled(2) + a.q[1];

        PolyCC w4 = lam.pow(4) * W4 + (lam.pow(3) * W3 * (p + pb)).scaled(6) +
                    (lam.pow(2) * W2 * (p.pow(2) + pb.pow(2))).scaled(6) +
                    (lam.pow(2) * W2 * pp).scaled(12) +
                    i_times(lam.pow(3) * Z.pow(3) * pb).scaled(4) +
                    i_times(lam.pow(2) * Z.pow(2) * (pb.pow(2) + pp.scaled(2))).scaled(6) +
                    i_times(lam * Z * ((p * pp + pb * pp).scaled(3) + pb.pow(3))).scaled(4) +
                    i_times(pp.pow(2)).scaled(3) +
                    i_times(p.pow(3) * pb + p * pb.pow(3)).scaled(2) + a.q[2];

        return std::array<PolyCC, 4>{z1, w2, w3, w4};
    }();
    return act;
}

CPoint act(const GroupElement& g, const CPoint& pt) {
    std::map<VarId, Gaussian> vals{{Zv(1), pt[0]},
                                   {Wv(2), pt[1]},
                                   {Wv(3), pt[2]},
                                   {Wv(4), pt[3]},
                                   {param::lambda, Gaussian(g.lambda)},
                                   {param::px, Gaussian(g.p.re)},
                                   {param::py, Gaussian(g.p.im)},
                                   {param::q(2), Gaussian(g.q2)},
                                   {param::q(3), Gaussian(g.q3)},
                                   {param::q(4), Gaussian(g.q4)}};
    const auto& act = symbolic_action();
    CPoint out;
    for (int c = 0; c < 4; ++c) out[c] = evaluate(act[c], vals);
    return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    if (g.lambda == 0 || h.lambda == 0)
        throw InvalidParams("group element with lambda = 0");
    GroupElement c;
    c.lambda = g.lambda * h.lambda;
    c.p = Gaussian(g.lambda) * h.p + g.p;

    CPoint zero{};
    CPoint gh = act(g, act(h, zero));
    GroupElement c0 = c;
    c0.q2 = c0.q3 = c0.q4 = 0;
    CPoint base = act(c0, zero);
    Rational* qs[3] = {&c.q2, &c.q3, &c.q4};
    for (int j = 0; j < 3; ++j) {
        Gaussian diff = gh[j + 1] - base[j + 1];
        if (diff.im != 0)
            throw IdentityFailure("composition produced a non-real q-shift");
        *qs[j] = diff.re;
    }
    return c;
}

GroupElement inverse(const GroupElement& g) {
    if (g.lambda == 0) throw InvalidParams("group element with lambda = 0");
    GroupElement gi;
    gi.lambda = 1 / g.lambda;
    gi.p = -g.p / Gaussian(g.lambda);
    Rational* qs[3] = {&gi.q2, &gi.q3, &gi.q4};
    Rational lam_pow = g.lambda;
    for (int j = 0; j < 3; ++j) {
        lam_pow *= g.lambda;  // lambda^(j+2)
        GroupElement c = compose(g, gi);
        Rational residual = j == 0 ? c.q2 : j == 1 ? c.q3 : c.q4;
        *qs[j] -= residual / lam_pow;
    }
    if (compose(g, gi) != GroupElement::identity() ||
        compose(gi, g) != GroupElement::identity())
        throw IdentityFailure("inverse failed its self-check");
    return gi;
}

namespace {

PolyCC build_invariant_P() {
    PolyCC Z{PolyCC(Zv(1))}, Zb{PolyCC(Zbv(1))};
    return PolyCC(chart::v(2)) - Z * Zb;
}

PolyCC build_invariant_Q() {
    PolyCC Z{PolyCC(Zv(1))}, Zb{PolyCC(Zbv(1))};
    PolyCC V2{PolyCC(chart::v(2))}, V3{PolyCC(chart::v(3))};
    return V3 - ((Z + Zb) * V2).scaled(2) + Z.pow(2) * Zb + Z * Zb.pow(2);
}

PolyCC build_invariant_R() {
    PolyCC Z{PolyCC(Zv(1))}, Zb{PolyCC(Zbv(1))};
    PolyCC V2{PolyCC(chart::v(2))}, V3{PolyCC(chart::v(3))};
    PolyCC V4{PolyCC(chart::v(4))};
    PolyCC re_z2 = (Z + Zb).pow(2);
    return V4 - (Z.pow(2) * Zb.pow(2)).scaled(3) - (Z.pow(3) * Zb).scaled(2) -
           (Z * Zb.pow(3)).scaled(2) + (V2 * re_z2).scaled(6) -
           (V3 * (Z + Zb)).scaled(6);
}

}  // namespace

const RelativeInvariant& invariant_P() {
    static const RelativeInvariant r{build_invariant_P(), 2};
    return r;
}

const RelativeInvariant& invariant_Q() {
    static const RelativeInvariant r{build_invariant_Q(), 3};
    return r;
}

const RelativeInvariant& invariant_R() {
    static const RelativeInvariant r{build_invariant_R(), 4};
    return r;
}

std::array<Rational, 3> invariants_PQR(const CPoint& pt) {
    std::map<VarId, Gaussian> vals{{Zv(1), pt[0]},
                                   {Zbv(1), pt[0].conj()},
                                   {chart::v(2), Gaussian(pt[1].im)},
                                   {chart::v(3), Gaussian(pt[2].im)},
                                   {chart::v(4), Gaussian(pt[3].im)}};
    std::array<Rational, 3> out;
    const RelativeInvariant* inv[3] = {&invariant_P(), &invariant_Q(), &invariant_R()};
    for (int k = 0; k < 3; ++k) {
        Gaussian v = evaluate(inv[k]->poly, vals);
        if (v.im != 0)
            throw IdentityFailure("relative invariant evaluated to a non-real value");
        out[k] = v.re;
    }
    return out;
}

namespace {

// One ansatz summand c * lam^lam_pow * Z^z_pow * W2^w2_pow * W3^w3_pow
// * p^p_pow * pb^pb_pow with an unknown complex coefficient c.
struct AnsatzTerm {
    int z_pow, w2_pow, w3_pow, p_pow, pb_pow;
    int lam_pow() const { return z_pow + 2 * w2_pow + 3 * w3_pow; }
    bool constant() const { return z_pow == 0 && w2_pow == 0 && w3_pow == 0; }
};

std::vector<AnsatzTerm> ansatz_terms(int weight) {
    std::vector<AnsatzTerm> out;
    for (int w3e = 0; 3 * w3e <= weight; ++w3e)
        for (int w2e = 0; 3 * w3e + 2 * w2e <= weight; ++w2e)
            for (int zd = 0; zd + 2 * w2e + 3 * w3e <= weight; ++zd) {
                int rest = weight - zd - 2 * w2e - 3 * w3e;
                if (rest < 1) continue;  // p-free terms are fixed by the dilation
                for (int pp = 0; pp <= rest; ++pp)
                    out.push_back({zd, w2e, w3e, pp, rest - pp});
            }
    return out;
}

// Hermitian parts of the candidate display's z- and w-free summands, keyed
// by (p_pow, pb_pow); they fix the q-shift gauge of the solve.
std::map<std::pair<int, int>, Gaussian> candidate_constants(int weight) {
    std::map<std::pair<int, int>, Gaussian> c;
    Gaussian two_i(Rational(0), Rational(2));
    if (weight == 2) c[{1, 1}] = Gaussian::i();
    if (weight == 3) c[{2, 1}] = two_i;
    if (weight == 4) {
        c[{3, 1}] = two_i;
        c[{2, 2}] = Gaussian(Rational(0), Rational(3));
        c[{1, 3}] = two_i;
    }
    return c;
}

PolyCC term_body(const AnsatzTerm& t) {
    const ActionVars& a = avars();
    return a.lam.pow(static_cast<unsigned>(t.lam_pow())) *
           a.Z.pow(static_cast<unsigned>(t.z_pow)) *
           a.W[0].pow(static_cast<unsigned>(t.w2_pow)) *
           a.W[1].pow(static_cast<unsigned>(t.w3_pow)) *
           a.p.pow(static_cast<unsigned>(t.p_pow)) *
           a.pb.pow(static_cast<unsigned>(t.pb_pow));
}

VarId unknown_re(size_t k) { return Uv(100 + 2 * static_cast<int>(k)); }
VarId unknown_im(size_t k) { return Uv(101 + 2 * static_cast<int>(k)); }

// Collects poly == 0 as exact linear equations in the unknown variables
// Uv(100+), which must occur affinely.
struct LinearCollector {
    size_t cols;
    QMatrix rows;
    QVector rhs;

    explicit LinearCollector(size_t unknowns) : cols(2 * unknowns) {}

    void add_identity(const PolyCC& poly) {
        std::map<Monomial, std::pair<std::map<size_t, Gaussian>, Gaussian>,
                 MonomialDegLex>
            eqs;
        for (const auto& [m, coeff] : poly.terms()) {
            std::optional<size_t> col;
            Monomial key = m;
            for (const auto& [v, e] : m.exponents()) {
                if (v.kind != VarKind::U || v.index < 100) continue;
                if (col || e != 1)
                    throw IdentityFailure("ansatz system is not affine");
                col = static_cast<size_t>(v.index - 100);
                Monomial reduced;
                if (!key.divide_by(v, reduced))
                    throw IdentityFailure("ansatz system is not affine");
                key = reduced;
            }
            auto& eq = eqs[key];
            if (col)
                eq.first[*col] += coeff;
            else
                eq.second += coeff;
        }
        for (const auto& [key, eq] : eqs) {
            QVector re_row(cols, Rational(0)), im_row(cols, Rational(0));
            for (const auto& [col, coeff] : eq.first) {
                re_row[col] = coeff.re;
                im_row[col] = coeff.im;
            }
            rows.push_back(re_row);
            rhs.push_back(-eq.second.re);
            rows.push_back(im_row);
            rhs.push_back(-eq.second.im);
        }
    }

    void pin(size_t col, const Rational& value) {
        QVector row(cols, Rational(0));
        row[col] = 1;
        rows.push_back(row);
        rhs.push_back(value);
    }

    void pin_sum(size_t col_a, size_t col_b, const Rational& sign_b,
                 const Rational& value) {
        QVector row(cols, Rational(0));
        row[col_a] += 1;
        row[col_b] += sign_b;
        rows.push_back(row);
        rhs.push_back(value);
    }
};

std::map<VarId, PolyCC> on_surface_subs(const ModelSurface& q) {
    std::map<VarId, PolyCC> subs;
    for (const auto& e : q.eqs)
        subs[Wv(e.w_index)] = PolyCC(Uv(e.w_index)) + i_times(e.phi);
    return subs;
}

PolyCC phi_at_image(const PolyCC& phi, const PolyCC& z_img) {
    return substitute(phi, {{Zv(1), z_img}, {Zbv(1), conjugate(z_img)}});
}

// Independent re-derivation of the w_weight image by undetermined
// coefficients; returns the unique solution within the printed gauge.
PolyCC derive_image(const ModelSurface& q, int weight) {
    const ActionVars& a = avars();
    std::vector<AnsatzTerm> terms = ansatz_terms(weight);
    LinearCollector sys(terms.size());

    PolyCC image = a.lam.pow(static_cast<unsigned>(weight)) * a.W[weight - 2] +
                   a.q[weight - 2];
    for (size_t k = 0; k < terms.size(); ++k) {
        PolyCC coeff = PolyCC(unknown_re(k)) + i_times(PolyCC(unknown_im(k)));
        image += coeff * term_body(terms[k]);
    }

    std::map<VarId, PolyCC> onto = on_surface_subs(q);
    PolyCC z_img = a.lam * a.Z + a.p;
    PolyCC residual = im_part(substitute(image, onto)) -
                      phi_at_image(q.eq_by_windex(weight).phi, z_img);
    sys.add_identity(residual);

    std::map<std::pair<int, int>, size_t> const_col;
    for (size_t k = 0; k < terms.size(); ++k)
        if (terms[k].constant()) const_col[{terms[k].p_pow, terms[k].pb_pow}] = k;
    auto cand = candidate_constants(weight);
    for (const auto& [pows, k] : const_col) {
        auto [b, c] = pows;
        if (b < c) continue;
        Gaussian tb = cand.count({b, c}) ? cand[{b, c}] : Gaussian(0);
        Gaussian tc = cand.count({c, b}) ? cand[{c, b}] : Gaussian(0);
        Gaussian herm = tb + tc.conj();
        if (b == c) {
            sys.pin(2 * k, herm.re / 2);
        } else {
            size_t k2 = const_col.at({c, b});
            sys.pin_sum(2 * k, 2 * k2, Rational(1), herm.re);
            sys.pin_sum(2 * k + 1, 2 * k2 + 1, Rational(-1), herm.im);
        }
    }

    auto sol = solve(sys.rows, sys.rhs);
    if (!sol)
        throw NoSolution("no coefficient assignment preserves the surface at weight " +
                         std::to_string(weight));
    if (!nullspace(sys.rows).empty())
        throw IdentityFailure("coefficient solve is underdetermined at weight " +
                              std::to_string(weight));

    std::map<VarId, PolyCC> back;
    for (size_t k = 0; k < terms.size(); ++k) {
        back[unknown_re(k)] = PolyCC(Gaussian((*sol)[2 * k]));
        back[unknown_im(k)] = PolyCC(Gaussian((*sol)[2 * k + 1]));
    }
    return substitute(image, back);
}

// The action display taken literally: it differs from the verified action
// only in the z-linear summand of the w4 image.
PolyCC candidate_image(int weight) {
    const ActionVars& a = avars();
    PolyCC img = symbolic_action()[weight - 1];
    if (weight == 4) {
        PolyCC pp = a.p * a.pb;
        img -= i_times(a.lam * a.Z * ((a.p * pp + a.pb * pp).scaled(3) + a.pb.pow(3)))
                   .scaled(4);
        img += i_times(a.lam * a.Z *
                       (a.p * pp + a.pb * pp + a.p.pow(3) + a.pb.pow(3)))
                   .scaled(12);
    }
    return img;
}

}  // namespace

ActionReport verify_action(const ModelSurface& tube_model) {
    ModelSurface reference = make_q({3, 2, 0});
    if (tube_model.n != reference.n || tube_model.eqs != reference.eqs)
        throw InvalidParams("verify_action expects the quartic model Q(3,2,0)");

    ActionReport report;
    const auto& act = symbolic_action();
    report.action[1] = act[0];

    std::map<VarId, PolyCC> onto = on_surface_subs(reference);
    for (int j = 2; j <= 4; ++j) {
        PolyCC residual = im_part(substitute(act[j - 1], onto)) -
                          phi_at_image(reference.eq_by_windex(j).phi, act[0]);
        if (!residual.is_zero())
            throw IdentityFailure("the shipped w" + std::to_string(j) +
                                  " image does not preserve the surface: " +
                                  residual.str());
        report.action[j] = act[j - 1];

        PolyCC derived = derive_image(reference, j);
        if (derived != act[j - 1])
            throw IdentityFailure("re-derived w" + std::to_string(j) +
                                  " image disagrees with the shipped action");

        PolyCC diff = derived - candidate_image(j);
        if (!diff.is_zero())
            report.corrections.push_back("w" + std::to_string(j) +
                                         ": derived minus candidate = " + diff.str());
    }
    report.ok = true;
    return report;
}

InvarianceReport verify_relative_invariance() {
    const auto& act = symbolic_action();
    const ActionVars& a = avars();

    auto value_subs = [](const std::array<PolyCC, 4>& images) {
        std::map<VarId, PolyCC> subs{{Zv(1), images[0]},
                                     {Zbv(1), conjugate(images[0])}};
        for (int j = 2; j <= 4; ++j) subs[chart::v(j)] = im_part(images[j - 1]);
        return subs;
    };

    std::array<PolyCC, 4> id_images{PolyCC(Zv(1)), PolyCC(Wv(2)), PolyCC(Wv(3)),
                                    PolyCC(Wv(4))};
    std::map<VarId, PolyCC> base = value_subs(id_images);
    std::map<VarId, PolyCC> moved = value_subs(act);

    std::map<VarId, PolyCC> refl_params{{param::lambda, PolyCC(-1)},
                                        {param::px, PolyCC(0)},
                                        {param::py, PolyCC(0)},
                                        {param::q(2), PolyCC(0)},
                                        {param::q(3), PolyCC(0)},
                                        {param::q(4), PolyCC(0)}};
    std::array<PolyCC, 4> refl_images;
    for (int c = 0; c < 4; ++c) refl_images[c] = substitute(act[c], refl_params);
    std::map<VarId, PolyCC> reflected = value_subs(refl_images);

    InvarianceReport report;
    const RelativeInvariant* inv[3] = {&invariant_P(), &invariant_Q(), &invariant_R()};
    const char* names[3] = {"P", "Q", "R"};
    for (int k = 0; k < 3; ++k) {
        PolyCC scaled_base = substitute(inv[k]->poly, base) *
                             a.lam.pow(static_cast<unsigned>(inv[k]->weight));
        PolyCC residual = substitute(inv[k]->poly, moved) - scaled_base;
        if (!residual.is_zero())
            throw IdentityFailure(std::string(names[k]) + " is not relative of weight " +
                                  std::to_string(inv[k]->weight) + ": " + residual.str());
        report.checks.push_back(std::string(names[k]) + " scales by lam^" +
                                std::to_string(inv[k]->weight) + " identically");

        Gaussian sign = k == 1 ? Gaussian(-1) : Gaussian(1);
        PolyCC refl_residual = substitute(inv[k]->poly, reflected) -
                               substitute(inv[k]->poly, base).scaled(sign);
        if (!refl_residual.is_zero())
            throw IdentityFailure(std::string(names[k]) +
                                  " transforms incorrectly under the reflection: " +
                                  refl_residual.str());
    }
    report.checks.push_back("reflection maps (P, Q, R) to (P, -Q, R)");
    report.ok = true;
    return report;
}

const std::vector<PolyVectorField>& generator_fields() {
    static const std::vector<PolyVectorField> fields = [] {
        const auto& act = symbolic_action();
        std::map<VarId, PolyCC> at_identity{{param::lambda, PolyCC(1)},
                                            {param::px, PolyCC(0)},
                                            {param::py, PolyCC(0)},
                                            {param::q(2), PolyCC(0)},
                                            {param::q(3), PolyCC(0)},
                                            {param::q(4), PolyCC(0)}};
        std::map<VarId, PolyCC> realify{
            {Zv(1), PolyCC(chart::x(1)) + i_times(PolyCC(chart::y(1)))}};
        for (int j = 2; j <= 4; ++j)
            realify[Wv(j)] = PolyCC(Uv(j)) + i_times(PolyCC(chart::v(j)));

        std::vector<VarId> params = {param::lambda, param::q(2), param::q(3),
                                     param::q(4),   param::px,   param::py};
        std::vector<PolyVectorField> out;
        for (const VarId& s : params) {
            PolyVectorField f;
            for (int c = 0; c < 4; ++c) {
                PolyCC hol = substitute(
                    substitute(wirtinger_derivative(act[c], s), at_identity), realify);
                if (c == 0) {
                    f.add(chart::x(1), re_part(hol));
                    f.add(chart::y(1), im_part(hol));
                } else {
                    f.add(Uv(c + 1), re_part(hol));
                    f.add(chart::v(c + 1), im_part(hol));
                }
            }
            out.push_back(std::move(f));
        }
        return out;
    }();
    return fields;
}

namespace {

std::vector<VarId> ambient_coords() {
    return {chart::x(1), chart::y(1), Uv(2), chart::v(2),
            Uv(3),       chart::v(3), Uv(4), chart::v(4)};
}

}  // namespace

QMatrix generator_matrix(const std::array<Rational, 8>& pt) {
    std::vector<VarId> coords = ambient_coords();
    std::map<VarId, Rational> vals;
    for (size_t c = 0; c < coords.size(); ++c) vals[coords[c]] = pt[c];
    QMatrix m;
    for (const auto& f : generator_fields()) m.push_back(evaluate(f, coords, vals));
    return m;
}

size_t generator_rank(const std::array<Rational, 8>& pt) {
    return rank(generator_matrix(pt));
}

namespace {

std::optional<Rational> rational_root(const Rational& r, int k) {
    if (r < 0 && k % 2 == 0) return std::nullopt;
    BigInt num;
    if (!integer_nth_root(r < 0 ? BigInt(-numerator(r)) : numerator(r),
                          static_cast<unsigned>(k), num))
        return std::nullopt;
    BigInt den;
    if (!integer_nth_root(denominator(r), static_cast<unsigned>(k), den))
        return std::nullopt;
    Rational root = Rational(num) / Rational(den);
    return r < 0 ? -root : root;
}

Rational pow_rat(const Rational& r, int k) {
    Rational out = 1;
    for (int i = 0; i < k; ++i) out *= r;
    return out;
}

int sgn(const Rational& r) { return r > 0 ? 1 : r < 0 ? -1 : 0; }

}  // namespace

bool ExactParam::is_rational() const {
    if (num == 0) return true;
    return rational_root(base, pow.second).has_value();
}

Rational ExactParam::rational_value() const {
    if (num == 0) return 0;
    auto root = rational_root(base, pow.second);
    if (!root)
        throw DomainError("parameter " + str() + " is irrational");
    return num / pow_rat(*root, pow.first);
}

double ExactParam::approx() const {
    if (num == 0) return 0.0;
    return num.convert_to<double>() /
           std::pow(base.convert_to<double>(),
                    static_cast<double>(pow.first) / pow.second);
}

std::string ExactParam::str() const {
    if (is_rational()) return rat_str(rational_value());
    return "(" + rat_str(num) + ")/(" + rat_str(base) + ")^(" +
           std::to_string(pow.first) + "/" + std::to_string(pow.second) + ")";
}

bool operator==(const ExactParam& a, const ExactParam& b) {
    if (a.num == 0 || b.num == 0) return a.num == b.num;
    if (a.pow != b.pow) return false;
    if (a.pow.second % 2 == 0 && sgn(a.num) != sgn(b.num)) return false;
    return pow_rat(a.num, a.pow.second) * pow_rat(b.base, a.pow.first) ==
           pow_rat(b.num, a.pow.second) * pow_rat(a.base, a.pow.first);
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::POS: return "POS";
        case Branch::NEG: return "NEG";
        case Branch::RHO: return "RHO";
        case Branch::TAU: return "TAU";
        case Branch::OPLUS: return "OPLUS";
        case Branch::OMINUS: return "OMINUS";
        case Branch::SURFACE_C: return "SURFACE_C";
    }
    return "";
}

std::string OrbitDescriptor::str() const {
    std::string out = branch_name(branch);
    switch (branch) {
        case Branch::POS:
            return out + "(mu=" + primary->str() + ", sigma=" + rat_str(*sigma) + ")";
        case Branch::NEG:
            return out + "(nu=" + primary->str() + ", sigma=" + rat_str(*sigma) + ")";
        case Branch::RHO: return out + "(rho=" + primary->str() + ")";
        case Branch::TAU: return out + "(tau=" + primary->str() + ")";
        default: return out;
    }
}

bool operator==(const OrbitDescriptor& a, const OrbitDescriptor& b) {
    if (a.branch != b.branch) return false;
    if (a.primary.has_value() != b.primary.has_value()) return false;
    if (a.primary && *a.primary != *b.primary) return false;
    if (a.sigma.has_value() != b.sigma.has_value()) return false;
    if (a.sigma && *a.sigma != *b.sigma) return false;
    return true;
}

OrbitDescriptor orbit_descriptor(const CPoint& base) {
    auto [P, Q, R] = invariants_PQR(base);
    OrbitDescriptor d;
    d.base_point = base;
    if (P != 0) {
        d.branch = P > 0 ? Branch::POS : Branch::NEG;
        d.primary = ExactParam{Q, P > 0 ? P : -P, {3, 2}};
        d.sigma = R / (P * P);
    } else if (Q != 0) {
        d.branch = Q > 0 ? Branch::RHO : Branch::TAU;
        d.primary = ExactParam{R, Q > 0 ? Q : -Q, {4, 3}};
    } else if (R != 0) {
        d.branch = R > 0 ? Branch::OPLUS : Branch::OMINUS;
    } else {
        d.branch = Branch::SURFACE_C;
    }
    return d;
}

}  // namespace crtool
