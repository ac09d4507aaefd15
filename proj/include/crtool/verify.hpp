#pragma once

// One-shot verification suite: machine checks over every module, aggregated
// into a deterministic report.  Checks fail only on computational assertion
// failures; notes record where the published tables disagree with the exact
// computation and never fail a check.

#include <cstdint>
#include <string>
#include <vector>

#include "crtool/surface.hpp"

namespace crtool {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::vector<std::string> details;  // verified assertions, one line each
    std::vector<std::string> notes;    // published-table discrepancies
    double seconds = 0.0;              // wall time; kept out of rendered output
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;

    bool all_passed() const;
    double total_seconds() const;
    std::string text() const;
    std::string json() const;
};

// Type sequences of the model family and the named surfaces at the origin.
SuiteCheck check_types();

// Direction scan: of the sampled parameter directions, exactly (3:2:0) has
// the same type sequence at every probe point.
SuiteCheck check_homogeneity();

// Surface preservation and relative invariance of P, Q, R as polynomial
// identities; the reflection flips the sign of Q only.
SuiteCheck check_group_identities();

// Generator rank 5 on the surface, 6 off it, and pointwise span agreement
// between the group generators and the realified graded basis.
SuiteCheck check_orbit_dimensions(uint64_t seed);

// Pencil class invariance under random congruences; the three normal forms
// classify to themselves.
SuiteCheck check_pencil_invariance(uint64_t seed);

// Exact classification against the published table rows on quarter-step
// grids, with recomputed boundaries; disagreements become notes.
SuiteCheck check_table_comparison();

// Finite-difference jets of the orbit graphs against the exact pairs.
SuiteCheck check_numeric_jets();

// Graded automorphism dimensions of the tube model with tangency rechecks.
SuiteCheck check_aut_dimensions();

// Model equivalence against projective proportionality on a generated pair
// corpus, every positive witness re-verified by substitution.
SuiteCheck check_moduli(uint64_t seed);

// All checks in the order above.
SuiteReport verify_paper_suite(uint64_t seed = 0);

// One direction of the homogeneity scan: the type sequence of Q_{a,b,c} at
// each probe point, and whether all probes agree.
struct HomogeneityRow {
    ModelParams dir;
    std::vector<std::string> types;  // one per probe, fixed probe order
    bool constant_type = false;
};

// The fixed scan corpus: 21 projectively distinct directions including
// (3:2:0), probed at z = 0, 1, i, 1+i, 2-i.
std::vector<HomogeneityRow> homogeneity_scan();

// One published classification row audited against the exact pencil classes
// on the quarter-step parameter grids.
struct RowAudit {
    std::string row;         // the published row, e.g. "P>0: mu=0, sigma!=0 -> Q(0)"
    std::size_t applicable = 0;  // grid points satisfying the row's condition
    std::size_t held = 0;        // of those, points where the exact class agrees
    std::string boundary;    // recomputed exact boundary in the row's region
};

std::vector<RowAudit> audit_published_rows();

}  // namespace crtool
