#include "crtool/vfield.hpp"

#include "crtool/errors.hpp"

namespace crtool {

PolyCC PolyVectorField::component(const VarId& v) const {
    auto it = comps.find(v);
    return it == comps.end() ? PolyCC() : it->second;
}

bool PolyVectorField::is_zero() const {
    for (const auto& [v, c] : comps)
        if (!c.is_zero()) return false;
    return true;
}

void PolyVectorField::add(const VarId& v, const PolyCC& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = comps.emplace(v, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) comps.erase(it);
    }
}

std::vector<VarId> intrinsic_chart(const ModelSurface& s) {
    std::vector<VarId> coords;
    for (int a = 1; a <= s.n; ++a) {
        coords.push_back(chart::x(a));
        coords.push_back(chart::y(a));
    }
    for (const auto& e : s.eqs) coords.push_back(Uv(e.w_index));
    return coords;
}

std::vector<VarId> ambient_chart(const ModelSurface& s) {
    std::vector<VarId> coords = intrinsic_chart(s);
    for (const auto& e : s.eqs) coords.push_back(chart::v(e.w_index));
    return coords;
}

std::map<VarId, Rational> chart_point(const ModelSurface& s, const SurfacePoint& p) {
    if (static_cast<int>(p.z.size()) != s.n)
        throw DomainError("point has wrong number of CR coordinates");
    std::map<VarId, Rational> values;
    for (int a = 1; a <= s.n; ++a) {
        values[chart::x(a)] = p.z[a - 1].re;
        values[chart::y(a)] = p.z[a - 1].im;
    }
    for (const auto& e : s.eqs) {
        auto it = p.w.find(e.w_index);
        if (it == p.w.end()) throw DomainError("point lacks w" + std::to_string(e.w_index));
        values[Uv(e.w_index)] = it->second.re;
        values[chart::v(e.w_index)] = it->second.im;
    }
    return values;
}

std::vector<CROperator> cr_operators(const ModelSurface& s) {
    Grading g = s.grading();
    int trunc = 2 * s.max_weight();
    std::vector<CROperator> ops;
    for (int alpha = 1; alpha <= s.n; ++alpha) {
        CROperator op;
        op.alpha = alpha;
        std::map<int, PolyCC> A;
        Gaussian two_i(Rational(0), Rational(2));
        for (const auto& e : s.eqs)
            A[e.w_index] = wirtinger_derivative(e.phi, Zv(alpha)).scaled(two_i);
        // Neumann iteration for u-dependent right sides; each pass raises
        // the minimal degree of any new term, so it stabilizes within the
        // truncation weight.
        for (int pass = 0;; ++pass) {
            if (pass > trunc + 2)
                throw NonPolynomialInverse("tangency system did not stabilize at weight " +
                                           std::to_string(trunc));
            std::map<int, PolyCC> next;
            for (const auto& e : s.eqs) {
                PolyCC acc = wirtinger_derivative(e.phi, Zv(alpha)).scaled(two_i);
                for (const auto& e2 : s.eqs) {
                    PolyCC du = wirtinger_derivative(e.phi, Uv(e2.w_index));
                    if (!du.is_zero())
                        acc += (A.at(e2.w_index) * du).scaled(Gaussian::i());
                }
                next[e.w_index] = weight_truncate(acc, g, trunc);
            }
            if (next == A) break;
            A = std::move(next);
        }
        op.A = std::move(A);
        ops.push_back(std::move(op));
    }
    return ops;
}

std::vector<PolyVectorField> cr_fields(const ModelSurface& s) {
    std::map<VarId, PolyCC> to_chart;
    for (int a = 1; a <= s.n; ++a)
        to_chart[Zv(a)] =
            PolyCC(chart::x(a)) + PolyCC(chart::y(a)).scaled(Gaussian::i());
    std::vector<PolyVectorField> fields;
    for (const CROperator& op : cr_operators(s)) {
        PolyVectorField X, Y;
        X.add(chart::x(op.alpha), PolyCC(1));
        Y.add(chart::y(op.alpha), PolyCC(1));
        for (const auto& [j, Aj] : op.A) {
            PolyCC Ac = substitute(Aj, to_chart);
            X.add(Uv(j), re_part(Ac));
            Y.add(Uv(j), -im_part(Ac));
        }
        fields.push_back(std::move(X));
        fields.push_back(std::move(Y));
    }
    return fields;
}

PolyVectorField bracket(const PolyVectorField& X, const PolyVectorField& Y) {
    PolyVectorField out;
    for (const auto& [i, Yi] : Y.comps)
        for (const auto& [v, Xv] : X.comps) out.add(i, Xv * wirtinger_derivative(Yi, v));
    for (const auto& [i, Xi] : X.comps)
        for (const auto& [v, Yv] : Y.comps) out.add(i, -(Yv * wirtinger_derivative(Xi, v)));
    return out;
}

std::vector<Rational> evaluate(const PolyVectorField& X, const std::vector<VarId>& coords,
                               const std::map<VarId, Rational>& pt) {
    std::map<VarId, Gaussian> values;
    for (const auto& [v, r] : pt) values[v] = Gaussian(r);
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (const VarId& v : coords) {
        Gaussian c = evaluate(X.component(v), values);
        if (c.im != 0) throw DomainError("field component evaluated to a non-real value");
        out.push_back(c.re);
    }
    return out;
}

}  // namespace crtool
