#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crtool/surface.hpp"
#include "crtool/vfield.hpp"

namespace crtool {

// Type of a surface germ at a point: the bracket lengths m at which the
// tangent filtration D_1 c D_2 c ... gains dimensions, with the size of each
// gain.  finite means the filtration reaches the full tangent space.
struct BGType {
    std::vector<std::pair<int, int>> pairs;
    bool finite = false;

    std::string str() const;  // e.g. "((2,1),(3,1),(4,1))"

    friend bool operator==(const BGType& a, const BGType& b) {
        return a.pairs == b.pairs && a.finite == b.finite;
    }
    friend bool operator!=(const BGType& a, const BGType& b) { return !(a == b); }
};

// Computes the type at pt by iterating D_{v+1} = D_v + [D_v, D_1] with
// pointwise exact ranks.  Throws PointNotOnSurface when pt fails the
// defining equations, InvalidParams when cap < 2, and Inconclusive when the
// filtration neither fills the tangent space nor stabilizes within cap.
BGType bg_type(const ModelSurface& s, const SurfacePoint& pt, int cap = 8);

}  // namespace crtool
