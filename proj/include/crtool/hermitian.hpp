// Hermitian 2x2 forms, pencil classification by the discriminant of
// det(lambda H1 + tau H2), and the Hermitian form pairs of the quadric-model
// orbit branches, extracted exactly from the orbit graph functions.
#pragma once

#include <array>
#include <string>

#include "crtool/group.hpp"
#include "crtool/jet.hpp"
#include "crtool/surface.hpp"

namespace crtool {

// The form v* H v in the row-conjugate convention: the coefficient of
// z_j conj(z_k) is h[j-1][k-1], so h[k][j] == conj(h[j][k]) and the diagonal
// is real.  Construction validates that.
struct HermitianMatrix2 {
    std::array<std::array<Gaussian, 2>, 2> h{};

    static HermitianMatrix2 make(const Rational& h11, const Gaussian& h12,
                                 const Rational& h22);
    static HermitianMatrix2 diag(const Rational& h11, const Rational& h22);
    static HermitianMatrix2 antidiag(const Gaussian& h12);

    bool is_zero() const;
    Rational det() const;
    HermitianMatrix2 scaled(const Rational& c) const;

    friend bool operator==(const HermitianMatrix2& a, const HermitianMatrix2& b) {
        return a.h == b.h;
    }
    friend bool operator!=(const HermitianMatrix2& a, const HermitianMatrix2& b) {
        return !(a == b);
    }

    std::string str() const;
};

HermitianMatrix2 operator+(const HermitianMatrix2& a, const HermitianMatrix2& b);

// g* m g for an arbitrary complex 2x2 matrix g acting on the variables.
HermitianMatrix2 congruence(const HermitianMatrix2& m,
                            const std::array<std::array<Gaussian, 2>, 2>& g);

// The four coefficients of z_a conj(z_b) in a quadratic polynomial, validated
// to form a Hermitian matrix.  Throws IdentityFailure when they do not.
HermitianMatrix2 hermitian_part(const PolyCC& quadratic);

struct HermitianPencil {
    HermitianMatrix2 H1, H2;

    friend bool operator==(const HermitianPencil& a, const HermitianPencil& b) {
        return a.H1 == b.H1 && a.H2 == b.H2;
    }
};

// det(lambda H1 + tau H2) = A lambda^2 + B lambda tau + C tau^2 and its
// discriminant B^2 - 4AC; dependent flags real-linear dependence of the two
// matrices.
struct DiscriminantResult {
    Rational A, B, C;
    Rational disc;
    bool dependent = false;
};
DiscriminantResult pencil_discriminant(const HermitianPencil& p);

enum class PencilClass { Q_PLUS, Q_MINUS, Q_ZERO, DEPENDENT };
std::string pencil_class_name(PencilClass c);

// DEPENDENT when the matrices are linearly dependent over the reals; else
// Q_PLUS / Q_MINUS / Q_ZERO by the sign of the discriminant.
PencilClass classify_pencil(const HermitianPencil& p);

// The orbit through `base` as a graph over two CR coordinates (z_1, z_2):
// phi1 and phi2 give the imaginary parts of the two transverse ambient
// coordinates, and `probe` is the CR coordinate value lying over `base`.
// For POS / NEG the CR coordinates are the ambient (z, w_2); on the P = 0
// stratum (RHO / TAU) they are (z, w_3).
struct OrbitGraph {
    GraphFunction phi1, phi2;
    std::array<Gaussian, 2> probe;
    CPoint base;
};

// Branches POS(primary = mu, sigma), NEG(primary = nu, sigma),
// RHO(primary = rho), TAU(primary = tau); sigma is ignored on the P = 0
// branches.  Throws InvalidParams for any other branch.
OrbitGraph orbit_graph(Branch b, const Rational& primary, const Rational& sigma = 0);

// Same orbit graph, expanded at the witness point of the orbit where
// |P| = scale (POS / NEG; num is the value of Q there) respectively
// |Q| = scale (RHO / TAU; num is the value of R there).  Choosing scale to
// be the stored base of an exact branch parameter keeps every coefficient
// rational even when the normalized parameter num / scale^(3/2) or
// num / scale^(4/3) is irrational.  scale must be positive.
OrbitGraph orbit_graph_at(Branch b, const Rational& num, const Rational& scale,
                          const Rational& sigma = 0);

// Hermitian form pair of the branch orbit at its probe point, extracted from
// the exact degree-2 jet of the graph functions.
HermitianPencil probe_pair(Branch b, const Rational& primary, const Rational& sigma = 0);

// Pair at the scaled witness point of orbit_graph_at.  For a fixed orbit
// the discriminant at witness scale s differs from its scale-1 value by the
// positive factor s (POS / NEG) respectively s^(-4/3) (RHO / TAU), so the
// pencil class does not depend on the witness choice.
HermitianPencil probe_pair_at(Branch b, const Rational& num, const Rational& scale,
                              const Rational& sigma = 0);

// The published closed-form pair for the same probe points.  It agrees with
// probe_pair on the P = 0 branches but drops the |z_1|^2 contribution of the
// second form on POS / NEG; kept verbatim so classification tables computed
// from it can be compared against the derived pair.
HermitianPencil printed_probe_pair(Branch b, const Rational& primary,
                                   const Rational& sigma = 0);

// Weight-2 Hermitian pair of a surface with two CR variables and two defining
// equations: mixed coefficient matrices of the two right sides at the origin.
// Throws WrongCRType for any other shape.
HermitianPencil exact_hermitian_pair(const ModelSurface& s);

}  // namespace crtool
