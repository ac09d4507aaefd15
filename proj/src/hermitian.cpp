#include "crtool/hermitian.hpp"

#include <utility>

#include "crtool/errors.hpp"

namespace crtool {

namespace {

void check_hermitian(const std::array<std::array<Gaussian, 2>, 2>& h) {
    if (h[0][0].im != 0 || h[1][1].im != 0 || h[1][0] != h[0][1].conj())
        throw IdentityFailure("matrix is not Hermitian");
}

}  // namespace

HermitianMatrix2 HermitianMatrix2::make(const Rational& h11, const Gaussian& h12,
                                        const Rational& h22) {
    HermitianMatrix2 m;
    m.h[0][0] = Gaussian(h11);
    m.h[0][1] = h12;
    m.h[1][0] = h12.conj();
    m.h[1][1] = Gaussian(h22);
    return m;
}

HermitianMatrix2 HermitianMatrix2::diag(const Rational& h11, const Rational& h22) {
    return make(h11, Gaussian(0), h22);
}

HermitianMatrix2 HermitianMatrix2::antidiag(const Gaussian& h12) {
    return make(0, h12, 0);
}

bool HermitianMatrix2::is_zero() const {
    return h[0][0] == Gaussian(0) && h[0][1] == Gaussian(0) && h[1][1] == Gaussian(0) &&
           h[1][0] == Gaussian(0);
}

Rational HermitianMatrix2::det() const {
    Gaussian d = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    return d.re;
}

HermitianMatrix2 HermitianMatrix2::scaled(const Rational& c) const {
    HermitianMatrix2 m = *this;
    for (auto& row : m.h)
        for (auto& e : row) e = e * Gaussian(c);
    return m;
}

std::string HermitianMatrix2::str() const {
    return "[[" + h[0][0].str() + ", " + h[0][1].str() + "], [" + h[1][0].str() +
           ", " + h[1][1].str() + "]]";
}

HermitianMatrix2 operator+(const HermitianMatrix2& a, const HermitianMatrix2& b) {
    HermitianMatrix2 m;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) m.h[j][k] = a.h[j][k] + b.h[j][k];
    return m;
}

HermitianMatrix2 congruence(const HermitianMatrix2& m,
                            const std::array<std::array<Gaussian, 2>, 2>& g) {
    HermitianMatrix2 out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Gaussian s(0);
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) s = s + g[j][a].conj() * m.h[j][k] * g[k][b];
            out.h[a][b] = s;
        }
    check_hermitian(out.h);
    return out;
}

HermitianMatrix2 hermitian_part(const PolyCC& quadratic) {
    HermitianMatrix2 m;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            m.h[a][b] = quadratic.coefficient(Monomial(Zv(a + 1)) * Monomial(Zbv(b + 1)));
    check_hermitian(m.h);
    return m;
}

DiscriminantResult pencil_discriminant(const HermitianPencil& p) {
    DiscriminantResult r;
    r.A = p.H1.det();
    r.C = p.H2.det();
    Gaussian mixed = p.H1.h[0][0] * p.H2.h[1][1] + p.H2.h[0][0] * p.H1.h[1][1] -
                     p.H1.h[0][1] * p.H2.h[1][0] - p.H2.h[0][1] * p.H1.h[1][0];
    r.B = mixed.re;
    r.disc = r.B * r.B - 4 * r.A * r.C;

    // Real-linear dependence of the coordinate vectors
    // (h11, h22, Re h12, Im h12).
    auto coords = [](const HermitianMatrix2& m) {
        return std::array<Rational, 4>{m.h[0][0].re, m.h[1][1].re, m.h[0][1].re,
                                       m.h[0][1].im};
    };
    std::array<Rational, 4> u = coords(p.H1), v = coords(p.H2);
    r.dependent = true;
    for (int i = 0; i < 4 && r.dependent; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (u[i] * v[j] != u[j] * v[i]) {
                r.dependent = false;
                break;
            }
    return r;
}

std::string pencil_class_name(PencilClass c) {
    switch (c) {
        case PencilClass::Q_PLUS: return "Q(+1)";
        case PencilClass::Q_MINUS: return "Q(-1)";
        case PencilClass::Q_ZERO: return "Q(0)";
        case PencilClass::DEPENDENT: return "DEPENDENT";
    }
    return "?";
}

PencilClass classify_pencil(const HermitianPencil& p) {
    DiscriminantResult d = pencil_discriminant(p);
    if (d.dependent) return PencilClass::DEPENDENT;
    if (d.disc > 0) return PencilClass::Q_PLUS;
    if (d.disc < 0) return PencilClass::Q_MINUS;
    return PencilClass::Q_ZERO;
}

namespace {

PolyCC im_of(const VarId& v) {
    return (PolyCC(v) - PolyCC(v.conj())).scaled(Gaussian(Rational(0), Rational(-1, 2)));
}

void check_real_graph(const GraphFunction& f) {
    bool ok = is_real(f.poly);
    for (const auto& t : f.frac) ok = ok && is_real(t.prefactor) && is_real(t.base);
    if (!ok) throw IdentityFailure("orbit graph function is not real");
}

}  // namespace

OrbitGraph orbit_graph(Branch b, const Rational& primary, const Rational& sigma) {
    return orbit_graph_at(b, primary, 1, sigma);
}

OrbitGraph orbit_graph_at(Branch b, const Rational& num, const Rational& scale,
                          const Rational& sigma) {
    if (scale <= 0) throw InvalidParams("witness scale must be positive");
    const VarId v2 = chart::v(2), v3 = chart::v(3), v4 = chart::v(4);
    // Solving the defining relations of the branch for Im w_3 and Im w_4
    // only needs the parts of the weight-3 and weight-4 invariants away from
    // those variables; both are monic in them.
    PolyCC rest3 = PolyCC(v3) - invariant_Q().poly;
    PolyCC rest4 = PolyCC(v4) - invariant_R().poly;
    PolyCC rest4_v3 = wirtinger_derivative(rest4, v3);
    PolyCC rest4_0 = rest4 - rest4_v3 * PolyCC(v3);

    OrbitGraph g;
    Gaussian i = Gaussian::i();
    switch (b) {
        case Branch::POS:
        case Branch::NEG: {
            // CR coordinates (z, w_2); the branch relations express Im w_3
            // and Im w_4 through P = Im w_2 - |z|^2.
            std::map<VarId, PolyCC> sub{{v2, im_of(Zv(2))}};
            PolyCC P = substitute(invariant_P().poly, sub);
            PolyCC base = (b == Branch::POS ? P : -P).scaled(Gaussian(1 / scale));
            g.phi1.poly = substitute(rest3, sub);
            g.phi1.frac = {{PolyCC(Gaussian(num)), base, Rational(3) / 2}};
            g.phi2.poly = substitute(rest4_0, sub) + rest4_v3 * g.phi1.poly +
                          P.pow(2).scaled(Gaussian(sigma));
            g.phi2.frac = {{rest4_v3.scaled(Gaussian(num)), base, Rational(3) / 2}};
            Gaussian w2 = (b == Branch::POS ? i : -i) * Gaussian(scale);
            g.probe = {Gaussian(0), w2};
            g.base = {Gaussian(0), w2, Gaussian(Rational(0), num),
                      Gaussian(Rational(0), sigma * scale * scale)};
            break;
        }
        case Branch::RHO:
        case Branch::TAU: {
            // CR coordinates (z, w_3); P = 0 pins Im w_2 = |z|^2 and the
            // branch relation expresses Im w_4 through Q.
            std::map<VarId, PolyCC> sub{{v2, PolyCC(Zv(1)) * PolyCC(Zbv(1))},
                                        {v3, im_of(Zv(2))}};
            PolyCC Q = substitute(invariant_Q().poly, sub);
            PolyCC base = (b == Branch::RHO ? Q : -Q).scaled(Gaussian(1 / scale));
            g.phi1.poly = PolyCC(Zv(1)) * PolyCC(Zbv(1));
            g.phi2.poly = substitute(rest4, sub);
            g.phi2.frac = {{PolyCC(Gaussian(num)), base, Rational(4) / 3}};
            Gaussian w3 = (b == Branch::RHO ? i : -i) * Gaussian(scale);
            g.probe = {Gaussian(0), w3};
            g.base = {Gaussian(0), Gaussian(0), w3, Gaussian(Rational(0), num)};
            break;
        }
        default:
            throw InvalidParams("branch has no quadric-model probe pair");
    }
    check_real_graph(g.phi1);
    check_real_graph(g.phi2);
    return g;
}

HermitianPencil probe_pair(Branch b, const Rational& primary, const Rational& sigma) {
    return probe_pair_at(b, primary, 1, sigma);
}

HermitianPencil probe_pair_at(Branch b, const Rational& num, const Rational& scale,
                              const Rational& sigma) {
    OrbitGraph g = orbit_graph_at(b, num, scale, sigma);
    return {hermitian_part(quadratic_jet(g.phi1, g.probe)),
            hermitian_part(quadratic_jet(g.phi2, g.probe))};
}

HermitianPencil printed_probe_pair(Branch b, const Rational& primary,
                                   const Rational& sigma) {
    Gaussian i = Gaussian::i();
    switch (b) {
        case Branch::POS:
            return {HermitianMatrix2::make(Rational(-3) * primary / 2, i,
                                           Rational(3) * primary / 16),
                    HermitianMatrix2::make(0, i * Gaussian(Rational(9) * primary / 2),
                                           sigma / 2)};
        case Branch::NEG:
            return {HermitianMatrix2::make(Rational(3) * primary / 2, i,
                                           Rational(3) * primary / 16),
                    HermitianMatrix2::make(0, -i * Gaussian(Rational(9) * primary / 2),
                                           sigma / 2)};
        case Branch::RHO:
        case Branch::TAU:
            return {HermitianMatrix2::make(1, Gaussian(0), 0),
                    HermitianMatrix2::make(0, i * Gaussian(3), primary / 9)};
        default:
            throw InvalidParams("branch has no quadric-model probe pair");
    }
}

HermitianPencil exact_hermitian_pair(const ModelSurface& s) {
    if (s.n != 2 || s.codim() != 2)
        throw WrongCRType("Hermitian pair extraction needs 2 CR variables and 2 equations");
    return {hermitian_part(degree_truncate(s.eqs[0].phi, 2)),
            hermitian_part(degree_truncate(s.eqs[1].phi, 2))};
}

}  // namespace crtool
