#include "crtool/linalg.hpp"

namespace crtool {

namespace {

template <class F>
bool field_is_zero(const F& v) {
    if constexpr (std::is_same_v<F, Rational>) return v == 0;
    else return v.is_zero();
}

template <class F>
std::vector<size_t> rref_impl(std::vector<std::vector<F>>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && field_is_zero(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        F inv_pivot = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / inv_pivot;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || field_is_zero(m[i][c])) continue;
            F factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::vector<std::vector<F>> nullspace_impl(std::vector<std::vector<F>> m) {
    std::vector<std::vector<F>> basis;
    if (m.empty()) return basis;
    size_t cols = m[0].size();
    std::vector<size_t> pivots = rref_impl(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(cols, F(0));
        v[fc] = F(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr) {
            // Row pr reads x_{pivot[pr]} + sum(coeffs * free vars) = 0.
            v[pivots[pr]] = F(0) - m[pr][fc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::optional<std::vector<F>> solve_impl(const std::vector<std::vector<F>>& m,
                                         const std::vector<F>& b) {
    if (m.empty()) {
        for (const auto& v : b)
            if (!field_is_zero(v)) return std::nullopt;
        return std::vector<F>{};
    }
    size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<F>> aug(rows, std::vector<F>(cols + 1, F(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<size_t> pivots = rref_impl(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    std::vector<F> x(cols, F(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug[pr][cols];
    return x;
}

}  // namespace

std::vector<size_t> rref(QMatrix& m) { return rref_impl(m); }
std::vector<size_t> rref(CMatrix& m) { return rref_impl(m); }

size_t rank(QMatrix m) { return rref_impl(m).size(); }
size_t rank(CMatrix m) { return rref_impl(m).size(); }

std::vector<QVector> nullspace(const QMatrix& m) { return nullspace_impl(m); }
std::vector<CVector> nullspace(const CMatrix& m) { return nullspace_impl(m); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) { return solve_impl(m, b); }
std::optional<CVector> solve(const CMatrix& m, const CVector& b) { return solve_impl(m, b); }

}  // namespace crtool
