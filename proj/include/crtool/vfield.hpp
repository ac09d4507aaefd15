#pragma once

#include <map>
#include <vector>

#include "crtool/poly.hpp"
#include "crtool/surface.hpp"

namespace crtool {

// Real polynomial vector field: one coefficient per real coordinate
// direction, keyed by the coordinate's VarId (chart x/y, u_j, v_j).  Missing
// keys mean a zero coefficient, so the same type serves intrinsic charts
// (x, y, u) and ambient charts (x, y, u, v).
struct PolyVectorField {
    std::map<VarId, PolyCC> comps;

    PolyCC component(const VarId& v) const;
    bool is_zero() const;
    void add(const VarId& v, const PolyCC& coeff);

    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
        return a.comps == b.comps;
    }
};

// Coordinate lists: x_1, y_1, .., x_n, y_n, then u_j per equation; the
// ambient chart appends v_j per equation.
std::vector<VarId> intrinsic_chart(const ModelSurface& s);
std::vector<VarId> ambient_chart(const ModelSurface& s);

// Chart values of a surface point: x_a = Re z_a, y_a = Im z_a, u_j = Re w_j
// (and v_j = Im w_j for the ambient chart).
std::map<VarId, Rational> chart_point(const ModelSurface& s, const SurfacePoint& p);

// The tangent CR operator L_alpha = d/dz_alpha + sum_j A_j d/dw_j; A keyed
// by w-index, in the variables (z, zbar, u).
struct CROperator {
    int alpha = 1;
    std::map<int, PolyCC> A;
};

// Solves the tangency condition for each alpha.  For u-dependent right
// sides the linear system is inverted by a weight-truncated Neumann
// iteration, truncated at twice the maximal equation weight; throws
// NonPolynomialInverse if the iteration fails to stabilize.
std::vector<CROperator> cr_operators(const ModelSurface& s);

// Realified tangent fields X_1, Y_1, .., X_n, Y_n in the intrinsic chart:
// X = d/dx + sum Re(A_j) d/du_j, Y = d/dy - sum Im(A_j) d/du_j.
std::vector<PolyVectorField> cr_fields(const ModelSurface& s);

PolyVectorField bracket(const PolyVectorField& X, const PolyVectorField& Y);

// Exact evaluation; every variable in the coefficients must be covered by
// pt.  Returns the components in the order of coords.
std::vector<Rational> evaluate(const PolyVectorField& X, const std::vector<VarId>& coords,
                               const std::map<VarId, Rational>& pt);

}  // namespace crtool
