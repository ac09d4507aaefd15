#pragma once

// Graded infinitesimal automorphisms of model surfaces: the weighted
// components of the algebra of real vector fields
//   X = 2 Re(sum_a f_a d/dz_a + sum_j g_j d/dw_j)
// with holomorphic polynomial coefficients tangent to the surface, computed
// exactly over the rationals up to a weight cap.

#include <map>
#include <string>
#include <vector>

#include "crtool/poly.hpp"
#include "crtool/surface.hpp"
#include "crtool/vfield.hpp"

namespace crtool {

// Holomorphic coefficient data of one field: f[a-1] multiplies d/dz_a and
// g[j] multiplies d/dw_j.  Missing g keys mean zero.
struct AutField {
    std::vector<PolyCC> f;
    std::map<int, PolyCC> g;
    int weight = 0;

    bool is_zero() const;
    std::string str() const;

    friend bool operator==(const AutField& a, const AutField& b) {
        return a.f == b.f && a.g == b.g && a.weight == b.weight;
    }
};

struct WeightComponent {
    int weight = 0;
    std::vector<AutField> fields;
};

// Basis of the graded tangent algebra, one component per weight in
// [min_weight, weight_cap].  free_cr_slots lists CR variables that appear
// in no defining equation; every holomorphic multiple of d/dz_a is then
// tangent, an infinite-dimensional family, so the per-weight counts include
// those fields while the algebra as a whole is infinite-dimensional.
// Weights above weight_cap are not examined.
struct GradedAutBasis {
    int min_weight = 0;
    int weight_cap = 0;
    std::vector<WeightComponent> by_weight;
    std::vector<int> free_cr_slots;

    size_t dim_at(int weight) const;
    size_t total_dim() const;
    bool infinite_dimensional() const { return !free_cr_slots.empty(); }
};

// Solves the tangency equations weight by weight: the weighted-homogeneous
// ansatz (f_a of weight d+1, g_j of weight d plus the equation weight) is
// reduced by coefficient matching in (z, zbar, u) to a linear system over
// the rationals whose nullspace is the weight-d component.  Caps above 6
// throw CapExceeded; negative caps throw InvalidParams.
GradedAutBasis aut_basis(const ModelSurface& s, int weight_cap = 4);

// Substitution-based tangency check through the real chart (x, y, u, v):
// realifies the field, applies it to v_j - Phi_j, restricts to the surface,
// and tests for the zero polynomial.  Shares no code with the solver's
// equation assembly.
bool tangency_recheck(const ModelSurface& s, const AutField& X);

// Holomorphic representative of [X, Y].  Real fields 2 Re A with
// holomorphic A bracket through their holomorphic parts because the mixed
// terms annihilate each other's coefficients.
AutField hol_bracket(const AutField& X, const AutField& Y);

// Membership of X in the real span of the given fields, decided by exact
// rank comparison of coefficient vectors.
bool in_span(const std::vector<AutField>& fields, const AutField& X);

// Realification on the ambient chart: components Re f_a, Im f_a, Re g_j,
// Im g_j on x_a, y_a, u_j, v_j after substituting z = x + iy, w = u + iv.
PolyVectorField realify(const AutField& X, const ModelSurface& s);

}  // namespace crtool
