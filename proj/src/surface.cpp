#include "crtool/surface.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "crtool/errors.hpp"
#include "crtool/parser.hpp"

namespace crtool {

namespace {

PolyCC zp(int a = 1) { return PolyCC(Zv(a)); }
PolyCC zbp(int a = 1) { return PolyCC(Zbv(a)); }
PolyCC up(int j) { return PolyCC(Uv(j)); }

PolyCC two_re(const PolyCC& p) { return p + conjugate(p); }

Monomial mono(std::initializer_list<std::pair<VarId, unsigned>> factors) {
    Monomial m;
    for (const auto& [v, e] : factors) m = m * Monomial(v, e);
    return m;
}

}  // namespace

const SurfaceEquation& ModelSurface::eq_by_windex(int w_index) const {
    for (const auto& e : eqs)
        if (e.w_index == w_index) return e;
    throw InvalidParams("no equation with w-index " + std::to_string(w_index));
}

bool ModelSurface::has_windex(int w_index) const {
    return std::any_of(eqs.begin(), eqs.end(),
                       [&](const SurfaceEquation& e) { return e.w_index == w_index; });
}

Grading ModelSurface::grading() const {
    Grading g;
    for (const auto& e : eqs) {
        g.set_weight(Wv(e.w_index), e.weight);
        g.set_weight(Wbv(e.w_index), e.weight);
        g.set_weight(Uv(e.w_index), e.weight);
        g.set_weight(chart::v(e.w_index), e.weight);
    }
    return g;
}

int ModelSurface::max_weight() const {
    int m = 0;
    for (const auto& e : eqs) m = std::max(m, e.weight);
    return m;
}

void ModelSurface::validate() const {
    if (n < 1) throw InvalidParams("cr dimension must be positive");
    std::set<int> windices;
    for (const auto& e : eqs) {
        if (e.w_index < 1 || e.w_index > 9)
            throw InvalidParams("w-index out of range: " + std::to_string(e.w_index));
        if (!windices.insert(e.w_index).second)
            throw InvalidParams("duplicate w-index " + std::to_string(e.w_index));
        if (e.weight < 1) throw InvalidParams("equation weight must be positive");
        if (!is_real(e.phi))
            throw InvalidParams("right side of Im w" + std::to_string(e.w_index) +
                                " is not real");
        if (!e.phi.constant_term().is_zero())
            throw InvalidParams("right side has a constant term");
        for (const auto& [m, c] : e.phi.terms())
            if (m.total_degree() < 2) throw InvalidParams("right side has a linear part");
    }
    for (const auto& e : eqs) {
        for (const VarId& v : e.phi.variables()) {
            switch (v.kind) {
                case VarKind::Z:
                case VarKind::Zbar:
                    if (v.index > n)
                        throw InvalidParams("CR variable index exceeds cr dimension");
                    break;
                case VarKind::U:
                    if (v.index > 9 || windices.count(v.index) == 0)
                        throw InvalidParams("u-variable without a matching equation: " +
                                            var_name(v));
                    break;
                default:
                    throw InvalidParams("w-variables may not appear in a right side");
            }
        }
    }
}

ModelSurface make_q(const ModelParams& params) {
    if (params.a == 0 && params.b == 0 && params.c == 0)
        throw InvalidParams("Q parameters must not all vanish");
    Gaussian bc_pos(params.b, params.c);   // coefficient of z^3 zbar
    Gaussian bc_neg(params.b, -params.c);  // coefficient of zbar^3 z
    PolyCC phi4 = PolyCC::term(mono({{Zv(), 2}, {Zbv(), 2}}), Gaussian(params.a)) +
                  PolyCC::term(mono({{Zv(), 3}, {Zbv(), 1}}), bc_pos) +
                  PolyCC::term(mono({{Zbv(), 3}, {Zv(), 1}}), bc_neg);
    ModelSurface s;
    s.n = 1;
    s.eqs = {{2, 2, zp() * zbp()},
             {3, 3, two_re(zp().pow(2) * zbp())},
             {4, 4, phi4}};
    s.label = "Q(" + rational_to_string(params.a) + "," + rational_to_string(params.b) + "," +
              rational_to_string(params.c) + ")";
    s.validate();
    return s;
}

ModelSurface make_general_germ(const GeneralGermCoeffs& g) {
    if (g.a == 0 || g.alpha.is_zero())
        throw InvalidParams("germ requires a != 0 and alpha != 0");
    PolyCC z = zp(), zb = zbp(), u2 = up(2), u3 = up(3);
    PolyCC phi4 = (z * zb).pow(2).scaled(Gaussian(g.b)) +
                  two_re((z.pow(3) * zb).scaled(g.beta)) + two_re(z.pow(4).scaled(g.gamma)) +
                  two_re((z.pow(2) * u2).scaled(g.delta)) + (z * zb * u2).scaled(Gaussian(g.c)) +
                  two_re((z * u3).scaled(g.chi)) + (u2 * u2).scaled(Gaussian(g.d));
    ModelSurface s;
    s.n = 1;
    s.eqs = {{2, 2, (z * zb).scaled(Gaussian(g.a))},
             {3, 3, two_re((z.pow(2) * zb).scaled(g.alpha))},
             {4, 4, phi4}};
    s.label = "general germ";
    s.validate();
    return s;
}

ModelSurface make_hyperquadric() {
    ModelSurface s;
    s.n = 1;
    s.eqs = {{1, 2, zp() * zbp()}};
    s.label = "hyperquadric";
    s.validate();
    return s;
}

ModelSurface make_named(NamedSurface which) {
    ModelSurface s;
    switch (which) {
        case NamedSurface::TUBE_C: {
            s = make_q({3, 2, 0});
            s.label = "tube C";
            return s;
        }
        case NamedSurface::VPN_CUBIC: {
            PolyCC z = zp(), zb = zbp();
            // 2 Im z^2 zbar = -i z^2 zbar + i zbar^2 z
            PolyCC phi4 = (z.pow(2) * zb).scaled(Gaussian(Rational(0), Rational(-1))) +
                          (zb.pow(2) * z).scaled(Gaussian(Rational(0), Rational(1)));
            s.n = 1;
            s.eqs = {{2, 2, z * zb}, {3, 3, two_re(z.pow(2) * zb)}, {4, 3, phi4}};
            s.label = "cubic";
            break;
        }
        case NamedSurface::E: {
            PolyCC z1 = zp(1), z2 = zp(2), zb1 = zbp(1), zb2 = zbp(2);
            s.n = 2;
            s.eqs = {{1, 2, z1 * zb2 + z2 * zb1},
                     {2, 3, two_re(z1.pow(2) * zb2 + (z1 * z2 * zb1).scaled(Gaussian(2)))}};
            s.label = "E";
            break;
        }
        case NamedSurface::F: {
            PolyCC z1 = zp(1), zb1 = zbp(1);
            s.n = 2;
            s.eqs = {{2, 2, z1 * zb1}, {3, 3, two_re(z1.pow(2) * zb1)}};
            s.label = "F";
            break;
        }
        case NamedSurface::Q_PLUS:
        case NamedSurface::Q_MINUS:
        case NamedSurface::Q_ZERO: {
            PolyCC z1 = zp(1), z2 = zp(2), zb1 = zbp(1), zb2 = zbp(2);
            PolyCC phi1 = z1 * zb1;
            if (which == NamedSurface::Q_PLUS) phi1 += z2 * zb2;
            if (which == NamedSurface::Q_MINUS) phi1 -= z2 * zb2;
            s.n = 2;
            s.eqs = {{1, 2, phi1}, {2, 2, z1 * zb2 + z2 * zb1}};
            s.label = which == NamedSurface::Q_PLUS  ? "Q(+1)"
                      : which == NamedSurface::Q_MINUS ? "Q(-1)"
                                                       : "Q(0)";
            break;
        }
    }
    s.validate();
    return s;
}

TubeChange tube_change() {
    PolyCC z = zp();
    Gaussian i = Gaussian::i();
    TubeChange t;
    t.z_img = z;
    t.w2_img = PolyCC(Wv(2)).scaled(i * Gaussian(2)) - z.pow(2).scaled(i);
    t.w3_img = PolyCC(Wv(3)).scaled(i * Gaussian(Rational(8, 3))) -
               z.pow(3).scaled(i * Gaussian(Rational(2, 3)));
    t.w4_img = PolyCC(Wv(4)).scaled(i * Gaussian(8)) - z.pow(4).scaled(i);
    return t;
}

bool on_surface(const ModelSurface& s, const SurfacePoint& p) {
    if (static_cast<int>(p.z.size()) != s.n)
        throw DomainError("point has wrong number of CR coordinates");
    std::map<VarId, Gaussian> values;
    for (int a = 1; a <= s.n; ++a) values[Zv(a)] = p.z[a - 1];
    for (const auto& e : s.eqs) {
        auto it = p.w.find(e.w_index);
        if (it == p.w.end())
            throw DomainError("point lacks w" + std::to_string(e.w_index));
        values[Uv(e.w_index)] = Gaussian(it->second.re);
    }
    for (const auto& e : s.eqs) {
        Gaussian phi = evaluate(e.phi, values);
        const Gaussian& w = p.w.at(e.w_index);
        if (!(phi.im == 0 && phi.re == w.im)) return false;
    }
    return true;
}

SurfacePoint point_over(const ModelSurface& s, const std::vector<Gaussian>& z) {
    if (static_cast<int>(z.size()) != s.n)
        throw DomainError("point has wrong number of CR coordinates");
    std::map<VarId, Gaussian> values;
    for (int a = 1; a <= s.n; ++a) values[Zv(a)] = z[a - 1];
    for (const auto& e : s.eqs) values[Uv(e.w_index)] = Gaussian(0);
    SurfacePoint p;
    p.z = z;
    for (const auto& e : s.eqs) p.w[e.w_index] = Gaussian::i() * evaluate(e.phi, values);
    return p;
}

bool carries_onto(const ModelSurface& target, const ModelSurface& source,
                  const std::map<VarId, PolyCC>& change) {
    // Parametrize the source: w_m = u_m + i Phi_m with the u_m free.
    std::map<VarId, PolyCC> source_param;
    for (const auto& e : source.eqs)
        source_param[Wv(e.w_index)] = up(e.w_index) + e.phi.scaled(Gaussian::i());
    for (const auto& e : target.eqs) {
        // Defect of the target equation in ambient coordinates.
        std::map<VarId, PolyCC> u_to_w;
        for (const VarId& v : e.phi.variables())
            if (v.kind == VarKind::U) u_to_w[v] = re_part(PolyCC(Wv(v.index)));
        PolyCC defect = im_part(PolyCC(Wv(e.w_index))) - substitute(e.phi, u_to_w);
        PolyCC pulled = substitute(substitute(defect, change), source_param);
        if (!pulled.is_zero()) return false;
    }
    return true;
}

namespace {

// Extract (a,b,c) from a surface that must be exactly make_q-shaped.
ModelParams q_params_of(const ModelSurface& s) {
    if (s.n != 1 || s.codim() != 3 || !s.has_windex(2) || !s.has_windex(3) || !s.has_windex(4))
        throw InvalidParams("expected a Q-family surface");
    const PolyCC& phi4 = s.eq_by_windex(4).phi;
    Gaussian a = phi4.coefficient(mono({{Zv(), 2}, {Zbv(), 2}}));
    Gaussian bc = phi4.coefficient(mono({{Zv(), 3}, {Zbv(), 1}}));
    if (a.im != 0) throw InvalidParams("expected a Q-family surface");
    ModelParams params{a.re, bc.re, bc.im};
    if (s != make_q(params) && s.eqs != make_q(params).eqs)
        throw InvalidParams("expected a Q-family surface");
    return params;
}

// Remove the degree-1 part of a real polynomial in (z, zbar) by the
// substitution w -> w - 2i c z; returns the polynomial without its linear
// terms.
PolyCC strip_linear(const PolyCC& p) {
    Gaussian lin = p.coefficient(Monomial(Zv()));
    return p - zp().scaled(lin) - zbp().scaled(lin.conj());
}

}  // namespace

RecenterResult recenter(const ModelSurface& s, const Gaussian& z0) {
    ModelParams params = q_params_of(s);
    (void)params;
    if (z0.is_zero()) {
        Gaussian K = s.eq_by_windex(4).phi.coefficient(mono({{Zv(), 2}, {Zbv(), 1}}));
        return {s, K};
    }
    std::map<VarId, PolyCC> shift{{Zv(), zp() + PolyCC(z0)}};

    auto translated = [&](int j) {
        PolyCC t = substitute(s.eq_by_windex(j).phi, shift);
        return t - PolyCC(t.constant_term());
    };

    PolyCC r2 = strip_linear(translated(2));
    if (r2 != zp() * zbp())
        throw IdentityFailure("second equation did not renormalize to |z|^2");

    PolyCC r3 = strip_linear(translated(3));
    // Harmonic quadratic and cubic parts, then the |z|^2 shear against the
    // renormalized second equation.
    Gaussian h2 = r3.coefficient(mono({{Zv(), 2}}));
    r3 -= zp().pow(2).scaled(h2) + zbp().pow(2).scaled(h2.conj());
    Gaussian shear = r3.coefficient(mono({{Zv(), 1}, {Zbv(), 1}}));
    r3 -= (zp() * zbp()).scaled(shear);
    Gaussian h3 = r3.coefficient(mono({{Zv(), 3}}));
    r3 -= zp().pow(3).scaled(h3) + zbp().pow(3).scaled(h3.conj());
    if (r3 != two_re(zp().pow(2) * zbp()))
        throw IdentityFailure("third equation did not renormalize to 2 Re z^2 zbar");

    PolyCC psi4 = translated(4);
    Gaussian K = psi4.coefficient(mono({{Zv(), 2}, {Zbv(), 1}}));
    PolyCC r4 = strip_linear(psi4);

    RecenterResult out;
    out.germ.n = 1;
    out.germ.eqs = {{2, 2, r2}, {3, 3, r3}, {4, 4, r4}};
    out.germ.label = s.label + " germ at " + z0.str();
    out.germ.validate();
    out.K = K;
    return out;
}

GermReduction reduce_general_germ(const GeneralGermCoeffs& g) {
    if (g.a == 0 || g.alpha.is_zero())
        throw InvalidParams("germ requires a != 0 and alpha != 0");
    if (g.b == 0 && g.c == 0 && g.d == 0 && g.beta.is_zero() && g.gamma.is_zero() &&
        g.delta.is_zero() && g.chi.is_zero())
        throw InvalidParams("fourth equation of the germ vanishes");

    Rational m;
    if (!rational_nth_root(g.alpha.norm(), 3, m))
        throw UnsupportedAlgebraic("normalizing rotation for alpha = " + g.alpha.str() +
                                   " is not Gaussian-rational");
    Gaussian s = g.alpha.conj() / Gaussian(m * m);
    Rational t2 = m / g.a;  // Im w2 rescale

    ModelSurface germ = make_general_germ(g);
    std::map<VarId, PolyCC> step1{{Zv(), zp().scaled(s)},
                                  {Uv(2), up(2).scaled(Gaussian(g.a / m))}};
    PolyCC rhs2 = substitute(germ.eq_by_windex(2).phi, step1).scaled(Gaussian(t2));
    PolyCC rhs3 = substitute(germ.eq_by_windex(3).phi, step1);
    PolyCC rhs4 = substitute(germ.eq_by_windex(4).phi, step1);
    if (rhs2 != zp() * zbp() || rhs3 != two_re(zp().pow(2) * zbp()))
        throw IdentityFailure("alpha normalization did not reach the expected leading form");

    // Completion w4 -> w4 + e1 z^4 + e2 z^2 w2 + e3 z w3 + e4 w2^2, with the
    // coefficients chosen to cancel every monomial outside the Q-form.
    Gaussian minus_2i(Rational(0), Rational(-2));
    Gaussian e1 = minus_2i * rhs4.coefficient(mono({{Zv(), 4}}));
    Gaussian e2 = minus_2i * rhs4.coefficient(mono({{Zv(), 2}, {Uv(2), 1}}));
    Gaussian e3 = minus_2i * rhs4.coefficient(mono({{Zv(), 1}, {Uv(3), 1}}));
    Gaussian du = rhs4.coefficient(mono({{Uv(2), 2}}));
    Gaussian cu = rhs4.coefficient(mono({{Zv(), 1}, {Zbv(), 1}, {Uv(2), 1}}));
    if (du.im != 0 || cu.im != 0)
        throw IdentityFailure("real monomial acquired a complex coefficient");
    Gaussian e4(-cu.re / 2, -du.re);

    PolyCC completion = zp().pow(4).scaled(e1) + (zp().pow(2) * PolyCC(Wv(2))).scaled(e2) +
                        (zp() * PolyCC(Wv(3))).scaled(e3) + PolyCC(Wv(2)).pow(2).scaled(e4);
    std::map<VarId, PolyCC> on_surf{
        {Wv(2), up(2) + (zp() * zbp()).scaled(Gaussian::i())},
        {Wv(3), up(3) + two_re(zp().pow(2) * zbp()).scaled(Gaussian::i())}};
    PolyCC rhs4_final = rhs4 + im_part(substitute(completion, on_surf));

    Gaussian A = rhs4_final.coefficient(mono({{Zv(), 2}, {Zbv(), 2}}));
    Gaussian bc = rhs4_final.coefficient(mono({{Zv(), 3}, {Zbv(), 1}}));
    if (A.im != 0) throw IdentityFailure("|z|^4 coefficient is not real");
    PolyCC expected = PolyCC::term(mono({{Zv(), 2}, {Zbv(), 2}}), A) +
                      PolyCC::term(mono({{Zv(), 3}, {Zbv(), 1}}), bc) +
                      PolyCC::term(mono({{Zbv(), 3}, {Zv(), 1}}), bc.conj());
    if (rhs4_final != expected)
        throw IdentityFailure("completion left terms outside the Q-form");

    GermReduction out;
    out.params = {A.re, bc.re, bc.im};
    if (out.params.a == 0 && out.params.b == 0 && out.params.c == 0)
        throw InvalidParams("reduced fourth equation vanishes; germ is degenerate");
    out.change = {{Zv(), zp().scaled(s)},
                  {Wv(2), PolyCC(Wv(2)).scaled(Gaussian(g.a / m))},
                  {Wv(3), PolyCC(Wv(3))},
                  {Wv(4), PolyCC(Wv(4)) - completion}};
    out.im_scale = {{2, t2}, {3, Rational(1)}, {4, Rational(1)}};

    if (!carries_onto(germ, make_q(out.params), out.change))
        throw IdentityFailure("reduction change failed the substitution check");
    return out;
}

std::optional<EquivalenceWitness> model_equivalence(const ModelParams& p, const ModelParams& q) {
    ModelSurface qp = make_q(p), qq = make_q(q);
    Rational m1 = p.a * q.b - p.b * q.a;
    Rational m2 = p.a * q.c - p.c * q.a;
    Rational m3 = p.b * q.c - p.c * q.b;
    if (m1 != 0 || m2 != 0 || m3 != 0) return std::nullopt;
    Rational lambda;
    if (p.a != 0)
        lambda = q.a / p.a;
    else if (p.b != 0)
        lambda = q.b / p.b;
    else
        lambda = q.c / p.c;
    EquivalenceWitness w{Rational(1), Rational(1) / lambda};
    std::map<VarId, PolyCC> change{
        {Zv(), zp().scaled(Gaussian(w.beta))},
        {Wv(2), PolyCC(Wv(2)).scaled(Gaussian(w.beta * w.beta))},
        {Wv(3), PolyCC(Wv(3)).scaled(Gaussian(w.beta * w.beta * w.beta))},
        {Wv(4), PolyCC(Wv(4)).scaled(Gaussian(w.beta4))}};
    if (!carries_onto(qp, qq, change))
        throw IdentityFailure("equivalence witness failed the substitution check");
    return w;
}

std::string surface_to_text(const ModelSurface& s) {
    std::ostringstream os;
    if (!s.label.empty()) os << "# name: " << s.label << "\n";
    int seen = 1;
    for (const auto& e : s.eqs)
        for (const VarId& v : e.phi.variables())
            if (v.kind == VarKind::Z || v.kind == VarKind::Zbar)
                seen = std::max(seen, static_cast<int>(v.index));
    if (s.n > seen) os << "# crdim: " << s.n << "\n";
    for (const auto& e : s.eqs) os << "Im w" << e.w_index << " = " << e.phi.str() << "\n";
    return os.str();
}

ModelSurface surface_from_text(const std::string& text) {
    ModelSurface s;
    s.n = 1;
    std::map<int, int> weight_of;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        if (body[0] == '#') {
            const std::string name_tag = "# name:";
            const std::string dim_tag = "# crdim:";
            if (body.rfind(name_tag, 0) == 0) {
                auto start = body.find_first_not_of(" \t", name_tag.size());
                if (start != std::string::npos) s.label = body.substr(start);
            } else if (body.rfind(dim_tag, 0) == 0) {
                s.n = std::max(s.n, std::stoi(body.substr(dim_tag.size())));
            }
            continue;
        }
        int w_index = 0;
        size_t eq_pos = 0;
        {
            std::istringstream ls(body);
            std::string im, wtok;
            ls >> im >> wtok;
            if (im != "Im" || wtok.size() < 2 || wtok[0] != 'w' || !isdigit(wtok[1]))
                throw ParseError("expected 'Im w<j> = ...', got: " + body);
            w_index = wtok[1] - '0';
            eq_pos = body.find('=');
            if (eq_pos == std::string::npos) throw ParseError("missing '=' in: " + body);
        }
        PolyCC phi = parse_poly(body.substr(eq_pos + 1));
        if (weight_of.count(w_index)) throw ParseError("duplicate equation for w" +
                                                       std::to_string(w_index));
        int weight = 0;
        for (const auto& [mn, c] : phi.terms()) {
            (void)c;
            int wsum = 0;
            for (const auto& [v, e] : mn.exponents()) {
                switch (v.kind) {
                    case VarKind::Z:
                    case VarKind::Zbar:
                        s.n = std::max(s.n, static_cast<int>(v.index));
                        wsum += static_cast<int>(e);
                        break;
                    case VarKind::U: {
                        auto it = weight_of.find(v.index);
                        if (v.index > 9 || it == weight_of.end())
                            throw ParseError("use of " + var_name(v) +
                                             " before its defining equation");
                        wsum += it->second * static_cast<int>(e);
                        break;
                    }
                    default:
                        throw ParseError("w-variables may not appear in a right side");
                }
            }
            weight = std::max(weight, wsum);
        }
        weight_of[w_index] = weight;
        s.eqs.push_back({w_index, weight, phi});
    }
    if (s.eqs.empty()) throw ParseError("no equations found");
    s.validate();
    return s;
}

}  // namespace crtool
