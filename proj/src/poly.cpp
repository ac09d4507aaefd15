#include "crtool/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace crtool {

std::string var_name(const VarId& v) {
    int idx = v.index;
    switch (v.kind) {
        case VarKind::Z: return idx == 1 ? "z" : "z" + std::to_string(idx);
        case VarKind::Zbar: return idx == 1 ? "zb" : "zb" + std::to_string(idx);
        case VarKind::W: return "w" + std::to_string(idx);
        case VarKind::Wbar: return "wb" + std::to_string(idx);
        case VarKind::U: break;
    }
    if (idx >= 1 && idx <= 9) return "u" + std::to_string(idx);
    if (idx >= 11 && idx <= 19) return idx == 11 ? "x" : "x" + std::to_string(idx - 10);
    if (idx >= 21 && idx <= 29) return idx == 21 ? "y" : "y" + std::to_string(idx - 20);
    if (idx >= 31 && idx <= 39) return "v" + std::to_string(idx - 30);
    switch (idx) {
        case 40: return "lam";
        case 41: return "px";
        case 42: return "py";
        case 43: return "q2";
        case 44: return "q3";
        case 45: return "q4";
        case 46: return "eps";
        case 47: return "mu";
        case 48: return "sigma";
        case 49: return "nu";
        case 50: return "rho";
        case 51: return "tau";
        default: break;
    }
    return "u" + std::to_string(idx);
}

std::optional<VarId> var_from_name(const std::string& name) {
    auto tail_index = [](const std::string& s, size_t prefix) -> std::optional<int> {
        if (s.size() == prefix) return 1;
        if (s.size() != prefix + 1) return std::nullopt;
        char c = s[prefix];
        if (c < '1' || c > '9') return std::nullopt;
        return c - '0';
    };
    if (name.empty()) return std::nullopt;
    if (name.rfind("zb", 0) == 0) {
        if (auto i = tail_index(name, 2)) return Zbv(*i);
        return std::nullopt;
    }
    if (name.rfind("wb", 0) == 0) {
        if (auto i = tail_index(name, 2)) return Wbv(*i);
        return std::nullopt;
    }
    if (name[0] == 'z') {
        if (auto i = tail_index(name, 1)) return Zv(*i);
        return std::nullopt;
    }
    if (name[0] == 'w') {
        if (auto i = tail_index(name, 1)) return Wv(*i);
        return std::nullopt;
    }
    if (name[0] == 'u') {
        if (auto i = tail_index(name, 1)) return Uv(*i);
        return std::nullopt;
    }
    if (name[0] == 'x') {
        if (auto i = tail_index(name, 1)) return chart::x(*i);
        return std::nullopt;
    }
    if (name[0] == 'y') {
        if (auto i = tail_index(name, 1)) return chart::y(*i);
        return std::nullopt;
    }
    if (name[0] == 'v') {
        if (auto i = tail_index(name, 1)) return chart::v(*i);
        return std::nullopt;
    }
    if (name == "lam") return param::lambda;
    if (name == "px") return param::px;
    if (name == "py") return param::py;
    if (name == "eps") return param::eps;
    if (name == "mu") return param::mu;
    if (name == "sigma") return param::sigma;
    if (name == "nu") return param::nu;
    if (name == "rho") return param::rho;
    if (name == "tau") return param::tau;
    return std::nullopt;
}

Monomial::Monomial(VarId v, unsigned e) {
    if (e > 0) exps_.push_back({v, e});
}

unsigned Monomial::exponent(const VarId& v) const {
    for (const auto& [var, e] : exps_)
        if (var == v) return e;
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [var, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
        if (exps_[i].first == o.exps_[j].first) {
            r.exps_.push_back({exps_[i].first, exps_[i].second + o.exps_[j].second});
            ++i;
            ++j;
        } else if (exps_[i].first < o.exps_[j].first) {
            r.exps_.push_back(exps_[i++]);
        } else {
            r.exps_.push_back(o.exps_[j++]);
        }
    }
    while (i < exps_.size()) r.exps_.push_back(exps_[i++]);
    while (j < o.exps_.size()) r.exps_.push_back(o.exps_[j++]);
    return r;
}

Monomial Monomial::conj() const {
    Monomial r;
    r.exps_.reserve(exps_.size());
    for (const auto& [var, e] : exps_) r.exps_.push_back({var.conj(), e});
    std::sort(r.exps_.begin(), r.exps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

bool Monomial::divide_by(const VarId& v, Monomial& out) const {
    out.exps_.clear();
    bool found = false;
    for (const auto& [var, e] : exps_) {
        if (var == v) {
            found = true;
            if (e > 1) out.exps_.push_back({var, e - 1});
        } else {
            out.exps_.push_back({var, e});
        }
    }
    return found;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << var_name(var);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

bool MonomialDegLex::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Lexicographic tie-break on the sorted exponent vectors: the first
    // variable position where they differ decides; a higher exponent on an
    // earlier variable makes the monomial larger (so "less" means smaller).
    size_t i = 0, j = 0;
    while (i < a.exps_.size() && j < b.exps_.size()) {
        const auto& [va, ea] = a.exps_[i];
        const auto& [vb, eb] = b.exps_[j];
        if (va == vb) {
            if (ea != eb) return ea < eb ? true : false;
            ++i;
            ++j;
        } else if (va < vb) {
            // a has a positive exponent on an earlier variable; b has 0 there.
            return false;
        } else {
            return true;
        }
    }
    if (i < a.exps_.size()) return false;
    if (j < b.exps_.size()) return true;
    return false;
}

PolyCC::PolyCC(Gaussian c) {
    if (!c.is_zero()) terms_.emplace(Monomial::one(), std::move(c));
}

PolyCC::PolyCC(const VarId& v) { terms_.emplace(Monomial(v), Gaussian(1)); }

PolyCC PolyCC::term(const Monomial& m, const Gaussian& c) {
    PolyCC p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool PolyCC::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Gaussian PolyCC::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Gaussian(0) : it->second;
}

unsigned PolyCC::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Gaussian PolyCC::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Gaussian(0) : it->second;
}

void PolyCC::add_term(const Monomial& m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyCC PolyCC::operator-() const {
    PolyCC r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolyCC& PolyCC::operator+=(const PolyCC& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolyCC& PolyCC::operator-=(const PolyCC& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PolyCC PolyCC::operator*(const PolyCC& o) const {
    PolyCC r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

PolyCC PolyCC::scaled(const Gaussian& c) const {
    PolyCC r;
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

PolyCC PolyCC::pow(unsigned n) const {
    PolyCC r(Gaussian(1));
    PolyCC base = *this;
    while (n > 0) {
        if (n & 1u) r *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return r;
}

std::vector<VarId> PolyCC::variables() const {
    std::vector<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

std::string PolyCC::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest-order terms first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (c.im == 0 && c.re < 0) {
            negated = true;
            cs = (-c).str();
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool coeff_is_one = (!negated && c == Gaussian(1)) || (negated && (-c) == Gaussian(1));
        bool needs_parens = cs.find('+') != std::string::npos ||
                            (cs.find('-') != std::string::npos && cs.rfind('-') > 0);
        if (m.is_one()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else if (coeff_is_one) {
            os << m.str();
        } else {
            os << (needs_parens ? "(" + cs + ")" : cs) << "*" << m.str();
        }
    }
    return os.str();
}

PolyCC conjugate(const PolyCC& p) {
    PolyCC r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m.conj(), c.conj());
    return r;
}

bool is_real(const PolyCC& p) { return conjugate(p) == p; }

PolyCC wirtinger_derivative(const PolyCC& p, const VarId& v) {
    PolyCC r;
    Monomial quotient;
    for (const auto& [m, c] : p.terms_) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        m.divide_by(v, quotient);
        r.add_term(quotient, c * Gaussian(static_cast<long>(e)));
    }
    return r;
}

namespace {

// Completes bindings with implied conjugates and validates the involution.
std::map<VarId, PolyCC> close_bindings(const std::map<VarId, PolyCC>& bindings) {
    std::map<VarId, PolyCC> full = bindings;
    for (const auto& [v, img] : bindings) {
        if (v.is_real()) {
            if (!is_real(img))
                throw ConjugationMismatch("binding of real variable " + var_name(v) +
                                          " to non-real polynomial " + img.str());
            continue;
        }
        VarId vc = v.conj();
        PolyCC imgc = conjugate(img);
        auto it = full.find(vc);
        if (it == full.end()) {
            full.emplace(vc, std::move(imgc));
        } else if (it->second != imgc) {
            throw ConjugationMismatch("bindings of " + var_name(v) + " and " + var_name(vc) +
                                      " are not conjugate");
        }
    }
    return full;
}

}  // namespace

PolyCC substitute(const PolyCC& p, const std::map<VarId, PolyCC>& bindings) {
    std::map<VarId, PolyCC> full = close_bindings(bindings);
    PolyCC result;
    for (const auto& [m, c] : p.terms_) {
        PolyCC t(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = full.find(v);
            if (it == full.end()) {
                t *= PolyCC(v).pow(e);
            } else {
                t *= it->second.pow(e);
            }
        }
        result += t;
    }
    return result;
}

Gaussian evaluate(const PolyCC& p, const std::map<VarId, Gaussian>& values) {
    std::map<VarId, PolyCC> bindings;
    for (const auto& [v, g] : values) bindings.emplace(v, PolyCC(g));
    PolyCC r = substitute(p, bindings);
    if (!r.is_constant())
        throw DomainError("evaluation left free variables: " + r.str());
    return r.constant_term();
}

void Grading::set_weight(const VarId& v, int w) { overrides_[v] = w; }

int Grading::weight(const VarId& v) const {
    auto it = overrides_.find(v);
    if (it != overrides_.end()) return it->second;
    switch (v.kind) {
        case VarKind::Z:
        case VarKind::Zbar:
            return 1;
        case VarKind::W:
        case VarKind::Wbar:
            return v.index;
        case VarKind::U:
            break;
    }
    int idx = v.index;
    if (idx >= 1 && idx <= 9) return idx;          // u_j
    if (idx >= 11 && idx <= 29) return 1;          // x_a, y_a
    if (idx >= 31 && idx <= 39) return idx - 30;   // v_j
    return 0;                                      // parameters are weightless
}

int Grading::monomial_weight(const Monomial& m) const {
    int w = 0;
    for (const auto& [v, e] : m.exponents()) w += weight(v) * static_cast<int>(e);
    return w;
}

Grading Grading::dilation() { return Grading(); }

std::vector<std::pair<int, PolyCC>> weight_components(const PolyCC& p, const Grading& g) {
    std::map<int, PolyCC> by_weight;
    for (const auto& [m, c] : p.terms()) by_weight[g.monomial_weight(m)] += PolyCC::term(m, c);
    std::vector<std::pair<int, PolyCC>> out;
    out.reserve(by_weight.size());
    for (auto& [w, poly] : by_weight) out.emplace_back(w, std::move(poly));
    return out;
}

PolyCC weight_truncate(const PolyCC& p, const Grading& g, int cap) {
    PolyCC r;
    for (const auto& [m, c] : p.terms())
        if (g.monomial_weight(m) <= cap) r += PolyCC::term(m, c);
    return r;
}

}  // namespace crtool
