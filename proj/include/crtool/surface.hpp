#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crtool/poly.hpp"

namespace crtool {

// One defining equation Im w_{w_index} = phi of a model surface.  phi is a
// real polynomial in the CR variables z_1..z_n, their conjugates, and the
// real parts u_m of other w-variables (VarId kind U, index m).
struct SurfaceEquation {
    int w_index = 0;
    int weight = 0;
    PolyCC phi;

    friend bool operator==(const SurfaceEquation& a, const SurfaceEquation& b) {
        return a.w_index == b.w_index && a.weight == b.weight && a.phi == b.phi;
    }
};

// A model CR submanifold given as a graph Im w_j = Phi_j(z, zbar, u).
struct ModelSurface {
    int n = 1;  // number of CR variables z_1..z_n
    std::vector<SurfaceEquation> eqs;
    std::string label;

    int codim() const { return static_cast<int>(eqs.size()); }
    const SurfaceEquation& eq_by_windex(int w_index) const;
    bool has_windex(int w_index) const;

    // Grading with [z_a] = 1 and [w_j] = [u_j] = weight of the equation at
    // index j; variables not tied to an equation keep the default grading.
    Grading grading() const;
    int max_weight() const;

    // Throws InvalidParams unless every phi is real with no constant or
    // linear part and every u-variable it mentions has an equation.
    void validate() const;

    friend bool operator==(const ModelSurface& a, const ModelSurface& b) {
        return a.n == b.n && a.eqs == b.eqs && a.label == b.label;
    }
};

struct ModelParams {
    Rational a, b, c;
    bool operator==(const ModelParams& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Q_{a,b,c}: Im w2 = |z|^2, Im w3 = 2 Re z^2 zbar,
// Im w4 = a |z|^4 + 2b Re z^3 zbar - 2c Im z^3 zbar.
// Throws InvalidParams when (a,b,c) = (0,0,0).
ModelSurface make_q(const ModelParams& params);

enum class NamedSurface { TUBE_C, VPN_CUBIC, E, F, Q_PLUS, Q_MINUS, Q_ZERO };

ModelSurface make_named(NamedSurface which);

// Im w1 = |z|^2 in C^2.
ModelSurface make_hyperquadric();

// Polynomial change of coordinates carrying the tube presentation
// x_j = x_1^j (j = 2,3,4) onto Q_{3,2,0}.  Images are polynomials in
// z, w2, w3, w4.
struct TubeChange {
    PolyCC z_img, w2_img, w3_img, w4_img;
};
TubeChange tube_change();

// A point of the ambient space adapted to a surface: CR coordinates and the
// w-value of each equation, keyed by w_index.
struct SurfacePoint {
    std::vector<Gaussian> z;
    std::map<int, Gaussian> w;
};

bool on_surface(const ModelSurface& s, const SurfacePoint& p);

// The point of s over CR coordinates z with all u_j = 0.
SurfacePoint point_over(const ModelSurface& s, const std::vector<Gaussian>& z);

// Germ of a Q-family surface at its point over z0, translated to the origin
// and renormalized: equations 2 and 3 become Im w2 = |z|^2 and
// Im w3 = 2 Re z^2 zbar exactly; equation 4 keeps its translated right side
// with constant and linear parts removed.  K is the coefficient of z^2 zbar
// in the translated fourth equation.
struct RecenterResult {
    ModelSurface germ;
    Gaussian K;
};
RecenterResult recenter(const ModelSurface& s, const Gaussian& z0);

// Coefficients of a general rigid germ
//   Im w2 = a |z|^2
//   Im w3 = 2 Re(alpha z^2 zbar)
//   Im w4 = b |z|^4 + 2 Re(beta z^3 zbar) + 2 Re(gamma z^4)
//           + 2 Re(delta z^2 u2) + c |z|^2 u2 + 2 Re(chi z u3) + d u2^2
// with a, alpha nonzero.
struct GeneralGermCoeffs {
    Rational a, b, c, d;
    Gaussian alpha, beta, gamma, delta, chi;
};

// The germ as a surface:
//   Im w2 = a |z|^2,  Im w3 = 2 Re(alpha z^2 zbar),
//   Im w4 = b |z|^4 + 2 Re(beta z^3 zbar) + 2 Re(gamma z^4)
//           + 2 Re(delta z^2 u2) + c |z|^2 u2 + 2 Re(chi z u3) + d u2^2.
ModelSurface make_general_germ(const GeneralGermCoeffs& g);

// True when the map that sends a point of `source` to the point whose
// `target`-coordinates are the change-images (each target variable bound to
// its expression in the source coordinates) lands on `target`; checked as
// exact polynomial identities in the source CR variables and free real parts.
bool carries_onto(const ModelSurface& target, const ModelSurface& source,
                  const std::map<VarId, PolyCC>& change);

// Normalization of a general germ to Q-form.  change maps each original
// variable to its expression in the new variables; applying it to the
// original equations reproduces make_q(params) up to the real rescaling of
// each Im w_j recorded in im_scale (keyed by w_index).
struct GermReduction {
    ModelParams params;
    std::map<VarId, PolyCC> change;
    std::map<int, Rational> im_scale;
};
GermReduction reduce_general_germ(const GeneralGermCoeffs& g);

// Linear equivalence Q_q -> Q_p of the shape z -> beta z, w2 -> beta^2 w2,
// w3 -> beta^3 w3, w4 -> beta4 w4; exists iff the parameter triples are
// proportional over the nonzero rationals.
struct EquivalenceWitness {
    Rational beta, beta4;
};
std::optional<EquivalenceWitness> model_equivalence(const ModelParams& p, const ModelParams& q);

std::string surface_to_text(const ModelSurface& s);
ModelSurface surface_from_text(const std::string& text);

}  // namespace crtool
