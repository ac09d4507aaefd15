#include "crtool/bloomgraham.hpp"

#include <sstream>

#include "crtool/errors.hpp"
#include "crtool/linalg.hpp"

namespace crtool {

std::string BGType::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ",";
        os << "(" << pairs[i].first << "," << pairs[i].second << ")";
    }
    os << ")";
    if (!finite) os << " infinite";
    return os.str();
}

BGType bg_type(const ModelSurface& s, const SurfacePoint& pt, int cap) {
    if (cap < 2) throw InvalidParams("cap must be at least 2");
    if (!on_surface(s, pt)) throw PointNotOnSurface("probe point fails the defining equations");

    std::vector<VarId> coords = intrinsic_chart(s);
    std::map<VarId, Rational> values = chart_point(s, pt);
    int full_dim = static_cast<int>(coords.size());

    std::vector<PolyVectorField> d1 = cr_fields(s);
    std::vector<PolyVectorField> latest = d1;
    QMatrix rows;
    for (const auto& f : d1) rows.push_back(evaluate(f, coords, values));

    BGType out;
    int prev_dim = rank(rows);
    for (int m = 2; m <= cap; ++m) {
        std::vector<PolyVectorField> fresh;
        for (const auto& f : latest)
            for (const auto& g : d1) {
                PolyVectorField b = bracket(f, g);
                if (!b.is_zero()) fresh.push_back(std::move(b));
            }
        for (const auto& f : fresh) rows.push_back(evaluate(f, coords, values));
        int dim = rank(rows);
        if (dim < prev_dim) throw IdentityFailure("filtration dimension decreased");
        if (dim > prev_dim) out.pairs.push_back({m, dim - prev_dim});
        if (dim == full_dim) {
            out.finite = true;
            return out;
        }
        if (dim == prev_dim) {
            // The generator list only grows, so equal pointwise dimension on
            // consecutive layers means equal pointwise span: stabilized
            // strictly below the full tangent space.
            out.finite = false;
            return out;
        }
        prev_dim = dim;
        latest = std::move(fresh);
    }
    throw Inconclusive(cap, "filtration still growing at bracket length " + std::to_string(cap));
}

}  // namespace crtool
