// The 6-parameter symmetry group of the quartic model Q(3,2,0): exact action
// on C^4, composition and inversion, the relative invariants P, Q, R, the
// Lie-algebra generators, and orbit descriptors.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crtool/linalg.hpp"
#include "crtool/poly.hpp"
#include "crtool/surface.hpp"
#include "crtool/vfield.hpp"

namespace crtool {

// A point of C^4 in the coordinates (z, w2, w3, w4).
using CPoint = std::array<Gaussian, 4>;

struct GroupElement {
    Rational lambda = 1;  // nonzero; lambda > 0 is the connected component
    Gaussian p;
    Rational q2, q3, q4;

    static GroupElement identity() { return {}; }
    bool in_connected_component() const { return lambda > 0; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.lambda == b.lambda && a.p == b.p && a.q2 == b.q2 &&
               a.q3 == b.q3 && a.q4 == b.q4;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) {
        return !(a == b);
    }
};

// The discrete symmetry z -> -z, w3 -> -w3 fixing w2 and w4.
GroupElement reflection();

// Images of (z, w2, w3, w4) under the general element, as polynomials in
// Z1, W2..W4 and the parameter variables lam, px, py, q2..q4 (p = px + i py).
// Index 0 holds the z image.
const std::array<PolyCC, 4>& symbolic_action();

CPoint act(const GroupElement& g, const CPoint& pt);

// compose(g, h) acts as g after h; inverse solves the q-shifts sequentially
// and checks itself against the identity.
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// A polynomial in (z, zb, v2, v3, v4) that scales by lambda^weight under the
// group action.
struct RelativeInvariant {
    PolyCC poly;
    int weight = 0;
};

const RelativeInvariant& invariant_P();  // Im w2 - |z|^2, weight 2
const RelativeInvariant& invariant_Q();  // weight 3
const RelativeInvariant& invariant_R();  // weight 4

std::array<Rational, 3> invariants_PQR(const CPoint& pt);

struct ActionReport {
    bool ok = false;
    // Forced coefficient changes relative to the candidate display, one line
    // per monomial.
    std::vector<std::string> corrections;
    // Final verified images keyed by w index, plus the z image under key 1.
    std::map<int, PolyCC> action;
};

// Substitutes the action into the defining equations of Q(3,2,0) and checks
// the preservation identity symbolically; re-derives every non-leading
// coefficient by an undetermined-coefficients solve within the same
// weighted-triangular shape and reports where the candidate display had to
// be corrected.  Throws InvalidParams unless the argument is Q(3,2,0) and
// NoSolution if the ansatz admits no surface-preserving assignment.
ActionReport verify_action(const ModelSurface& tube_model);

struct InvarianceReport {
    bool ok = false;
    std::vector<std::string> checks;  // one line per verified identity
};

// Proves P(g.zeta) = lambda^2 P(zeta), Q -> lambda^3 Q, R -> lambda^4 R as
// polynomial identities in the point and parameter variables, and that the
// reflection sends (P, Q, R) to (P, -Q, R).  Throws IdentityFailure with the
// residual on any mismatch.
InvarianceReport verify_relative_invariance();

// The six generators of the group's Lie algebra as real vector fields on R^8
// with coordinates (x, y, u2, v2, u3, v3, u4, v4), obtained by
// differentiating the action at the identity.  Order: dilation, the three
// q-shifts, then the two p-translations.
const std::vector<PolyVectorField>& generator_fields();

QMatrix generator_matrix(const std::array<Rational, 8>& pt);
size_t generator_rank(const std::array<Rational, 8>& pt);

// Exact value num / base^(a/b) with base > 0 and a/b in {3/2, 4/3}.
struct ExactParam {
    Rational num;
    Rational base;
    std::pair<int, int> pow{3, 2};

    bool is_rational() const;
    Rational rational_value() const;  // throws DomainError when irrational
    double approx() const;
    std::string str() const;

    friend bool operator==(const ExactParam& a, const ExactParam& b);
    friend bool operator!=(const ExactParam& a, const ExactParam& b) {
        return !(a == b);
    }
};

enum class Branch { POS, NEG, RHO, TAU, OPLUS, OMINUS, SURFACE_C };

std::string branch_name(Branch b);

struct OrbitDescriptor {
    Branch branch = Branch::SURFACE_C;
    std::optional<ExactParam> primary;  // mu, nu, rho, or tau
    std::optional<Rational> sigma;      // POS and NEG branches only
    CPoint base_point{};

    std::string str() const;

    // Orbit identity: branch and parameters; base points are witnesses.
    friend bool operator==(const OrbitDescriptor& a, const OrbitDescriptor& b);
    friend bool operator!=(const OrbitDescriptor& a, const OrbitDescriptor& b) {
        return !(a == b);
    }
};

// Branch by the sign of P, then Q, then R; parameters mu = Q/P^(3/2) and
// sigma = R/P^2 (nu, rho, tau analogously on the other branches).
OrbitDescriptor orbit_descriptor(const CPoint& base);

}  // namespace crtool
