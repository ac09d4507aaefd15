#include "crtool/autalg.hpp"

#include <algorithm>
#include <utility>

#include "crtool/errors.hpp"
#include "crtool/linalg.hpp"

namespace crtool {

namespace {

PolyCC two_re(const PolyCC& p) { return p + conjugate(p); }

PolyCC i_times(const PolyCC& p) { return p.scaled(Gaussian::i()); }

// Holomorphic ambient variables of the surface with their weights.
std::vector<std::pair<VarId, int>> hol_vars(const ModelSurface& s) {
    std::vector<std::pair<VarId, int>> vars;
    for (int a = 1; a <= s.n; ++a) vars.emplace_back(Zv(a), 1);
    for (const SurfaceEquation& eq : s.eqs)
        vars.emplace_back(Wv(eq.w_index), eq.weight);
    return vars;
}

void enumerate_rec(const std::vector<std::pair<VarId, int>>& vars, size_t idx,
                   int remaining, const Monomial& cur,
                   std::vector<Monomial>& out) {
    if (remaining == 0 && idx == vars.size()) {
        out.push_back(cur);
        return;
    }
    if (idx == vars.size()) return;
    const auto& [v, w] = vars[idx];
    for (int e = 0; e * w <= remaining; ++e) {
        enumerate_rec(vars, idx + 1, remaining - e * w,
                      e == 0 ? cur : cur * Monomial(v, static_cast<unsigned>(e)),
                      out);
        if (w == 0) break;
    }
}

// All monomials in vars of exact weighted degree `target`, in a fixed
// deterministic order.
std::vector<Monomial> weighted_monomials(
    const std::vector<std::pair<VarId, int>>& vars, int target) {
    std::vector<Monomial> out;
    if (target >= 0) enumerate_rec(vars, 0, target, Monomial::one(), out);
    return out;
}

struct TangencyData {
    std::map<VarId, PolyCC> on_surface;            // Wv(j) -> u_j + i Phi_j
    std::vector<std::vector<PolyCC>> dphi_dz;      // [eq][cr]
    std::vector<std::vector<PolyCC>> dphi_du;      // [eq][eq index of u]
};

TangencyData tangency_data(const ModelSurface& s) {
    TangencyData t;
    for (const SurfaceEquation& eq : s.eqs)
        t.on_surface[Wv(eq.w_index)] =
            PolyCC(Uv(eq.w_index)) + i_times(eq.phi);
    for (const SurfaceEquation& eq : s.eqs) {
        std::vector<PolyCC> dz, du;
        for (int a = 1; a <= s.n; ++a)
            dz.push_back(wirtinger_derivative(eq.phi, Zv(a)));
        for (const SurfaceEquation& other : s.eqs)
            du.push_back(wirtinger_derivative(eq.phi, Uv(other.w_index)));
        t.dphi_dz.push_back(std::move(dz));
        t.dphi_du.push_back(std::move(du));
    }
    return t;
}

// X applied to the defining function of each equation, restricted to the
// surface: Im g_j - sum_m Re(g_m) dPhi_j/du_m - 2 Re(sum_a f_a dPhi_j/dz_a),
// all in (z, zbar, u).
std::vector<PolyCC> tangency_residuals(const ModelSurface& s,
                                       const TangencyData& t,
                                       const AutField& X) {
    std::vector<PolyCC> f_on, g_on;
    for (int a = 0; a < s.n; ++a) {
        PolyCC fa = a < static_cast<int>(X.f.size()) ? X.f[a] : PolyCC();
        f_on.push_back(substitute(fa, t.on_surface));
    }
    for (const SurfaceEquation& eq : s.eqs) {
        auto it = X.g.find(eq.w_index);
        g_on.push_back(it == X.g.end() ? PolyCC()
                                       : substitute(it->second, t.on_surface));
    }
    std::vector<PolyCC> res;
    for (size_t j = 0; j < s.eqs.size(); ++j) {
        PolyCC e = im_part(g_on[j]);
        for (size_t m = 0; m < s.eqs.size(); ++m)
            e -= re_part(g_on[m]) * t.dphi_du[j][m];
        for (int a = 0; a < s.n; ++a)
            e -= two_re(f_on[a] * t.dphi_dz[j][a]);
        res.push_back(std::move(e));
    }
    return res;
}

// Candidate monomial slots of one weight: CR slots first, then equations.
struct Candidate {
    int slot = 0;  // 0..n-1: f slot; n+k: g slot of eqs[k]
    Monomial m;
};

AutField unit_field(const ModelSurface& s, const Candidate& c,
                    const Gaussian& coeff, int weight) {
    AutField X;
    X.weight = weight;
    X.f.assign(s.n, PolyCC());
    if (c.slot < s.n) {
        X.f[c.slot] = PolyCC::term(c.m, coeff);
    } else {
        X.g[s.eqs[c.slot - s.n].w_index] = PolyCC::term(c.m, coeff);
    }
    return X;
}

WeightComponent solve_weight(const ModelSurface& s, const TangencyData& t,
                             int d) {
    const auto vars = hol_vars(s);
    std::vector<Candidate> cands;
    for (int a = 0; a < s.n; ++a)
        for (const Monomial& m : weighted_monomials(vars, d + 1))
            cands.push_back({a, m});
    for (size_t k = 0; k < s.eqs.size(); ++k)
        for (const Monomial& m :
             weighted_monomials(vars, d + s.eqs[k].weight))
            cands.push_back({s.n + static_cast<int>(k), m});

    WeightComponent comp;
    comp.weight = d;
    if (cands.empty()) return comp;

    // Columns: residuals of the unit fields with coefficients 1 and i.
    std::vector<std::vector<PolyCC>> columns;
    for (const Candidate& c : cands) {
        columns.push_back(tangency_residuals(s, t, unit_field(s, c, Gaussian(1), d)));
        columns.push_back(
            tangency_residuals(s, t, unit_field(s, c, Gaussian::i(), d)));
    }

    // Rows: one per (equation, monomial, real/imaginary part).
    std::map<std::pair<size_t, Monomial>,
             size_t,
             decltype([](const std::pair<size_t, Monomial>& a,
                         const std::pair<size_t, Monomial>& b) {
                 if (a.first != b.first) return a.first < b.first;
                 return MonomialDegLex{}(a.second, b.second);
             })>
        row_of;
    for (const auto& col : columns)
        for (size_t j = 0; j < col.size(); ++j)
            for (const auto& [m, coeff] : col[j].terms())
                row_of.try_emplace({j, m}, 0);
    size_t next = 0;
    for (auto& [key, idx] : row_of) idx = next++;

    // At least one row so an empty constraint set yields the full space.
    QMatrix mat(std::max<size_t>(1, 2 * row_of.size()),
                QVector(columns.size(), Rational(0)));
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t j = 0; j < columns[c].size(); ++j)
            for (const auto& [m, coeff] : columns[c][j].terms()) {
                const size_t r = row_of.at({j, m});
                mat[2 * r][c] = coeff.re;
                mat[2 * r + 1][c] = coeff.im;
            }

    for (const QVector& x : nullspace(mat)) {
        AutField X;
        X.weight = d;
        X.f.assign(s.n, PolyCC());
        for (size_t c = 0; c < cands.size(); ++c) {
            const Gaussian coeff(x[2 * c], x[2 * c + 1]);
            if (coeff == Gaussian(0)) continue;
            const PolyCC term = PolyCC::term(cands[c].m, coeff);
            if (cands[c].slot < s.n) {
                X.f[cands[c].slot] += term;
            } else {
                X.g[s.eqs[cands[c].slot - s.n].w_index] += term;
            }
        }
        for (auto it = X.g.begin(); it != X.g.end();) {
            it = it->second.is_zero() ? X.g.erase(it) : std::next(it);
        }
        comp.fields.push_back(std::move(X));
    }
    return comp;
}

std::map<VarId, PolyCC> realify_map(const ModelSurface& s) {
    std::map<VarId, PolyCC> sub;
    for (int a = 1; a <= s.n; ++a)
        sub[Zv(a)] = PolyCC(chart::x(a)) + i_times(PolyCC(chart::y(a)));
    for (const SurfaceEquation& eq : s.eqs)
        sub[Wv(eq.w_index)] =
            PolyCC(Uv(eq.w_index)) + i_times(PolyCC(chart::v(eq.w_index)));
    return sub;
}

}  // namespace

bool AutField::is_zero() const {
    for (const PolyCC& p : f)
        if (!p.is_zero()) return false;
    for (const auto& [j, p] : g)
        if (!p.is_zero()) return false;
    return true;
}

std::string AutField::str() const {
    std::string out;
    auto append = [&out](const PolyCC& p, const std::string& dir) {
        if (p.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += "(" + p.str() + ") " + dir;
    };
    for (size_t a = 0; a < f.size(); ++a)
        append(f[a], "d/dz" + std::to_string(a + 1));
    for (const auto& [j, p] : g) append(p, "d/dw" + std::to_string(j));
    if (out.empty()) return "0";
    return "2 Re[" + out + "]";
}

size_t GradedAutBasis::dim_at(int weight) const {
    for (const WeightComponent& c : by_weight)
        if (c.weight == weight) return c.fields.size();
    return 0;
}

size_t GradedAutBasis::total_dim() const {
    size_t n = 0;
    for (const WeightComponent& c : by_weight) n += c.fields.size();
    return n;
}

GradedAutBasis aut_basis(const ModelSurface& s, int weight_cap) {
    if (weight_cap < 0) throw InvalidParams("weight cap must be nonnegative");
    if (weight_cap > 6)
        throw CapExceeded("aut solver weight cap is 6, requested " +
                          std::to_string(weight_cap));
    s.validate();

    GradedAutBasis out;
    out.min_weight = -s.max_weight();
    out.weight_cap = weight_cap;
    const TangencyData t = tangency_data(s);
    for (int d = out.min_weight; d <= weight_cap; ++d)
        out.by_weight.push_back(solve_weight(s, t, d));

    for (int a = 1; a <= s.n; ++a) {
        bool free_slot = true;
        for (const SurfaceEquation& eq : s.eqs) {
            if (!wirtinger_derivative(eq.phi, Zv(a)).is_zero() ||
                !wirtinger_derivative(eq.phi, Zbv(a)).is_zero()) {
                free_slot = false;
                break;
            }
        }
        if (free_slot) out.free_cr_slots.push_back(a);
    }
    return out;
}

bool tangency_recheck(const ModelSurface& s, const AutField& X) {
    const PolyVectorField rf = realify(X, s);
    const std::map<VarId, PolyCC> real_sub = realify_map(s);

    std::map<VarId, PolyCC> restrict;
    std::vector<std::pair<int, PolyCC>> phis;
    for (const SurfaceEquation& eq : s.eqs) {
        PolyCC phi_real = substitute(eq.phi, real_sub);
        restrict[chart::v(eq.w_index)] = phi_real;
        phis.emplace_back(eq.w_index, std::move(phi_real));
    }

    std::vector<VarId> directions;
    for (int a = 1; a <= s.n; ++a) {
        directions.push_back(chart::x(a));
        directions.push_back(chart::y(a));
    }
    for (const SurfaceEquation& eq : s.eqs) directions.push_back(Uv(eq.w_index));

    for (const auto& [w_index, phi_real] : phis) {
        PolyCC applied = rf.component(chart::v(w_index));
        for (const VarId& dir : directions)
            applied -= rf.component(dir) * wirtinger_derivative(phi_real, dir);
        if (!substitute(applied, restrict).is_zero()) return false;
    }
    return true;
}

AutField hol_bracket(const AutField& X, const AutField& Y) {
    const size_t n = std::max(X.f.size(), Y.f.size());
    auto f_of = [n](const AutField& A, size_t a) {
        return a < A.f.size() ? A.f[a] : PolyCC();
    };
    auto g_of = [](const AutField& A, int j) {
        auto it = A.g.find(j);
        return it == A.g.end() ? PolyCC() : it->second;
    };
    std::vector<int> g_keys;
    for (const auto& [j, p] : X.g) g_keys.push_back(j);
    for (const auto& [j, p] : Y.g)
        if (!std::count(g_keys.begin(), g_keys.end(), j)) g_keys.push_back(j);
    std::sort(g_keys.begin(), g_keys.end());

    auto apply = [&](const AutField& A, const PolyCC& h) {
        PolyCC r;
        for (size_t a = 0; a < n; ++a)
            r += f_of(A, a) * wirtinger_derivative(h, Zv(static_cast<int>(a) + 1));
        for (int j : g_keys) r += g_of(A, j) * wirtinger_derivative(h, Wv(j));
        return r;
    };

    AutField B;
    B.weight = X.weight + Y.weight;
    for (size_t a = 0; a < n; ++a)
        B.f.push_back(apply(X, f_of(Y, a)) - apply(Y, f_of(X, a)));
    for (int j : g_keys) {
        PolyCC comp = apply(X, g_of(Y, j)) - apply(Y, g_of(X, j));
        if (!comp.is_zero()) B.g[j] = std::move(comp);
    }
    return B;
}

bool in_span(const std::vector<AutField>& fields, const AutField& X) {
    // Coefficient vectors over the union of (slot, monomial) keys; two real
    // entries per Gaussian coefficient.
    using Key = std::pair<int, Monomial>;
    auto key_less = [](const Key& a, const Key& b) {
        if (a.first != b.first) return a.first < b.first;
        return MonomialDegLex{}(a.second, b.second);
    };
    std::map<Key, size_t, decltype(key_less)> index(key_less);
    auto visit = [&index](const AutField& A) {
        for (size_t a = 0; a < A.f.size(); ++a)
            for (const auto& [m, c] : A.f[a].terms())
                index.try_emplace({static_cast<int>(a), m}, 0);
        for (const auto& [j, p] : A.g)
            for (const auto& [m, c] : p.terms())
                index.try_emplace({-j, m}, 0);
    };
    for (const AutField& A : fields) visit(A);
    visit(X);
    size_t next = 0;
    for (auto& [key, idx] : index) idx = next++;

    auto vectorize = [&index](const AutField& A) {
        QVector v(2 * index.size(), Rational(0));
        auto put = [&](int slot, const PolyCC& p) {
            for (const auto& [m, c] : p.terms()) {
                const size_t i = index.at({slot, m});
                v[2 * i] = c.re;
                v[2 * i + 1] = c.im;
            }
        };
        for (size_t a = 0; a < A.f.size(); ++a) put(static_cast<int>(a), A.f[a]);
        for (const auto& [j, p] : A.g) put(-j, p);
        return v;
    };

    QMatrix base;
    for (const AutField& A : fields) base.push_back(vectorize(A));
    const size_t r = rank(base);
    base.push_back(vectorize(X));
    return rank(base) == r;
}

PolyVectorField realify(const AutField& X, const ModelSurface& s) {
    const std::map<VarId, PolyCC> sub = realify_map(s);
    PolyVectorField out;
    for (int a = 1; a <= s.n; ++a) {
        PolyCC fa = a <= static_cast<int>(X.f.size()) ? X.f[a - 1] : PolyCC();
        PolyCC img = substitute(fa, sub);
        out.add(chart::x(a), re_part(img));
        out.add(chart::y(a), im_part(img));
    }
    for (const SurfaceEquation& eq : s.eqs) {
        auto it = X.g.find(eq.w_index);
        PolyCC img =
            it == X.g.end() ? PolyCC() : substitute(it->second, sub);
        out.add(Uv(eq.w_index), re_part(img));
        out.add(chart::v(eq.w_index), im_part(img));
    }
    return out;
}

}  // namespace crtool
