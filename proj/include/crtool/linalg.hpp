// Exact dense linear algebra over Q and Q(i): reduced row echelon form,
// rank, nullspace, and linear solves.  Matrices are plain nested vectors;
// sizes in this project stay small (tens of rows/columns).
#pragma once

#include <optional>
#include <vector>

#include "crtool/gaussian.hpp"

namespace crtool {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using CVector = std::vector<Gaussian>;
using CMatrix = std::vector<CVector>;

// In-place reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(QMatrix& m);
std::vector<size_t> rref(CMatrix& m);

size_t rank(QMatrix m);
size_t rank(CMatrix m);

// Basis of the right nullspace {x : m x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);
std::vector<CVector> nullspace(const CMatrix& m);

// Solves m x = b; nullopt when inconsistent.  When the system is
// underdetermined, free variables are set to zero.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
std::optional<CVector> solve(const CMatrix& m, const CVector& b);

}  // namespace crtool
