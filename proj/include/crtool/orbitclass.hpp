#pragma once

// Model-surface classification of the orbits, with two backends.
//
// PENCIL expands the orbit graph at a rational witness point, extracts the
// Hermitian form pair there, and classifies its pencil; every step is exact
// rational arithmetic, including orbits whose normalized parameter is
// irrational.  PAPER_TABLE reproduces the published classification rows
// literally.  Three of the published rows for the P > 0 branch are textually
// corrupted; query points that only those rows would decide come back as
// MALFORMED_ROW instead of a class.  The two backends disagree on parts of
// the parameter space; sweep reports quantify where.

#include <string>
#include <vector>

#include "crtool/group.hpp"
#include "crtool/hermitian.hpp"

namespace crtool {

enum class ModelTag { E, Q_PLUS, Q_MINUS, Q_ZERO, F, C_SELF, MALFORMED_ROW };

std::string model_tag_name(ModelTag t);

enum class ClassifyBackend { PENCIL, PAPER_TABLE };

// Model surface tag of the orbit described by d.  PENCIL: OPLUS / OMINUS
// map to F, SURFACE_C to C_SELF, and the four quadric branches to E when
// the probe pencil is degenerate and to the pencil class otherwise.
// PAPER_TABLE: the literal published rows.  Throws InvalidParams when the
// descriptor lacks the fields its branch requires.
ModelTag classify(const OrbitDescriptor& d, ClassifyBackend backend);

struct DegeneracyFlags {
    int cr_dim = 0;    // complex tangent dimension
    int codim = 0;     // real codimension of the ambient transverse part
    int dimension = 0; // real dimension of the orbit
    bool holomorphically_degenerate = false;
    std::string degeneracy_witness;  // field direction, empty when not degenerate
};

DegeneracyFlags degeneracy_flags(const OrbitDescriptor& d);

struct SweepPoint {
    Rational primary;
    Rational sigma;  // unused for RHO / TAU grids
    ModelTag pencil;
    ModelTag table;
    bool agree = false;
};

struct SweepReport {
    Branch branch{};
    Rational lo, hi, step;
    std::vector<SweepPoint> points;
    size_t agreements = 0;
    size_t disagreements = 0;  // table well-formed, classes differ
    size_t malformed = 0;      // table hit a corrupted row
    std::vector<std::string> summary;  // one line per (pencil, table) mismatch kind
};

// Classifies every grid point with both backends.  POS / NEG sweep the
// square [lo, hi]^2 in (primary, sigma); RHO / TAU sweep the interval in
// the primary parameter only.  Throws InvalidParams for other branches or
// a non-positive step.
SweepReport sweep(Branch b, const Rational& lo, const Rational& hi,
                  const Rational& step);

std::string sweep_to_json(const SweepReport& r);
std::string sweep_to_csv(const SweepReport& r);

}  // namespace crtool
