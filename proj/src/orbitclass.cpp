#include "crtool/orbitclass.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <utility>

#include "crtool/errors.hpp"

namespace crtool {

namespace {

using nlohmann::json;

std::string rat_str(const Rational& r) { return rational_to_string(r); }

void require_quadric_params(const OrbitDescriptor& d) {
    const bool planar = d.branch == Branch::POS || d.branch == Branch::NEG;
    if (!d.primary)
        throw InvalidParams("descriptor lacks the branch parameter");
    const std::pair<int, int> want = planar ? std::pair<int, int>{3, 2}
                                            : std::pair<int, int>{4, 3};
    if (d.primary->pow != want)
        throw InvalidParams("branch parameter has the wrong exponent pair");
    if (d.primary->base <= 0)
        throw InvalidParams("branch parameter base must be positive");
    if (planar && !d.sigma)
        throw InvalidParams("descriptor lacks sigma");
}

ModelTag from_pencil(PencilClass c) {
    switch (c) {
        case PencilClass::Q_PLUS: return ModelTag::Q_PLUS;
        case PencilClass::Q_MINUS: return ModelTag::Q_MINUS;
        case PencilClass::Q_ZERO: return ModelTag::Q_ZERO;
        case PencilClass::DEPENDENT: return ModelTag::E;
    }
    throw InvalidParams("unknown pencil class");
}

// Published rows for the P > 0 branch.  Every condition depends on the
// primary parameter only through its square, which is rational even when
// the parameter itself is not.  The published rows covering sigma != 0
// below the parabola sigma = 27 mu^2 / 16 are textually corrupted and
// cannot be evaluated; MALFORMED_ROW marks that region.
ModelTag table_pos(const Rational& mu2, const Rational& sigma) {
    if (mu2 == 0 && sigma == 0) return ModelTag::E;
    if (mu2 == 0) return ModelTag::Q_ZERO;
    if (sigma == 0) return ModelTag::Q_MINUS;
    if (sigma >= Rational(27) * mu2 / 16) return ModelTag::Q_PLUS;
    return ModelTag::MALFORMED_ROW;
}

// Published rows for the P < 0 branch; these tile the plane completely.
ModelTag table_neg(const Rational& nu2, const Rational& sigma) {
    if (nu2 == 0 && sigma == 0) return ModelTag::E;
    if (nu2 == 0) return ModelTag::Q_ZERO;
    if (sigma == 0) return ModelTag::Q_PLUS;
    if (sigma <= Rational(27) * nu2 / 16) return ModelTag::Q_PLUS;
    const Rational t = 24 * sigma - Rational(81) * nu2 / 2;
    const Rational s2 = sigma * sigma;
    if (s2 > t) return ModelTag::Q_PLUS;
    if (s2 == t) return ModelTag::Q_ZERO;
    return ModelTag::Q_MINUS;
}

}  // namespace

std::string model_tag_name(ModelTag t) {
    switch (t) {
        case ModelTag::E: return "E";
        case ModelTag::Q_PLUS: return "Q(+1)";
        case ModelTag::Q_MINUS: return "Q(-1)";
        case ModelTag::Q_ZERO: return "Q(0)";
        case ModelTag::F: return "F";
        case ModelTag::C_SELF: return "C-SELF";
        case ModelTag::MALFORMED_ROW: return "MALFORMED-ROW";
    }
    return "";
}

ModelTag classify(const OrbitDescriptor& d, ClassifyBackend backend) {
    switch (d.branch) {
        case Branch::OPLUS:
        case Branch::OMINUS:
            return ModelTag::F;
        case Branch::SURFACE_C:
            return ModelTag::C_SELF;
        default:
            break;
    }
    require_quadric_params(d);
    const Rational& num = d.primary->num;
    const Rational& base = d.primary->base;
    if (backend == ClassifyBackend::PENCIL) {
        const HermitianPencil pair =
            probe_pair_at(d.branch, num, base, d.sigma.value_or(0));
        return from_pencil(classify_pencil(pair));
    }
    switch (d.branch) {
        case Branch::POS:
            return table_pos(num * num / (base * base * base), *d.sigma);
        case Branch::NEG:
            return table_neg(num * num / (base * base * base), *d.sigma);
        default:
            return ModelTag::Q_PLUS;
    }
}

DegeneracyFlags degeneracy_flags(const OrbitDescriptor& d) {
    DegeneracyFlags f;
    if (d.branch == Branch::SURFACE_C) {
        f.cr_dim = 1;
        f.codim = 3;
        f.dimension = 5;
        return f;
    }
    f.cr_dim = 2;
    f.codim = 2;
    f.dimension = 6;
    if (d.branch == Branch::OPLUS || d.branch == Branch::OMINUS) {
        f.holomorphically_degenerate = true;
        f.degeneracy_witness = "d/dw4";
    }
    return f;
}

SweepReport sweep(Branch b, const Rational& lo, const Rational& hi,
                  const Rational& step) {
    if (step <= 0) throw InvalidParams("sweep step must be positive");
    if (hi < lo) throw InvalidParams("sweep range is empty");
    const bool planar = b == Branch::POS || b == Branch::NEG;
    if (!planar && b != Branch::RHO && b != Branch::TAU)
        throw InvalidParams("sweep covers the parametrized branches only");

    SweepReport r;
    r.branch = b;
    r.lo = lo;
    r.hi = hi;
    r.step = step;

    std::vector<Rational> grid;
    for (Rational v = lo; v <= hi; v += step) grid.push_back(v);

    struct Box {
        size_t count = 0;
        Rational pmin, pmax, smin, smax;
    };
    std::map<std::pair<ModelTag, ModelTag>, Box> boxes;

    auto visit = [&](const Rational& p, const Rational& s) {
        OrbitDescriptor d;
        d.branch = b;
        d.primary = ExactParam{p, 1,
                               planar ? std::pair<int, int>{3, 2}
                                      : std::pair<int, int>{4, 3}};
        if (planar) d.sigma = s;
        d.base_point = orbit_graph_at(b, p, 1, planar ? s : Rational(0)).base;

        SweepPoint pt;
        pt.primary = p;
        pt.sigma = s;
        pt.pencil = classify(d, ClassifyBackend::PENCIL);
        pt.table = classify(d, ClassifyBackend::PAPER_TABLE);
        pt.agree = pt.pencil == pt.table;
        if (pt.agree) {
            ++r.agreements;
        } else {
            if (pt.table == ModelTag::MALFORMED_ROW)
                ++r.malformed;
            else
                ++r.disagreements;
            auto [it, fresh] = boxes.try_emplace({pt.pencil, pt.table});
            Box& box = it->second;
            if (fresh) {
                box.pmin = box.pmax = p;
                box.smin = box.smax = s;
            } else {
                box.pmin = std::min(box.pmin, p);
                box.pmax = std::max(box.pmax, p);
                box.smin = std::min(box.smin, s);
                box.smax = std::max(box.smax, s);
            }
            ++box.count;
        }
        r.points.push_back(std::move(pt));
    };

    for (const Rational& p : grid) {
        if (planar) {
            for (const Rational& s : grid) visit(p, s);
        } else {
            visit(p, 0);
        }
    }

    for (const auto& [key, box] : boxes) {
        std::ostringstream line;
        line << "pencil " << model_tag_name(key.first) << " vs table "
             << model_tag_name(key.second) << ": " << box.count
             << (box.count == 1 ? " point" : " points") << ", primary in ["
             << rat_str(box.pmin) << ", " << rat_str(box.pmax) << "]";
        if (planar)
            line << ", sigma in [" << rat_str(box.smin) << ", "
                 << rat_str(box.smax) << "]";
        r.summary.push_back(line.str());
    }
    return r;
}

std::string sweep_to_json(const SweepReport& r) {
    const bool planar = r.branch == Branch::POS || r.branch == Branch::NEG;
    json out;
    out["branch"] = branch_name(r.branch);
    out["range"] = {{"lo", rat_str(r.lo)},
                    {"hi", rat_str(r.hi)},
                    {"step", rat_str(r.step)}};
    out["counts"] = {{"total", r.points.size()},
                     {"agree", r.agreements},
                     {"disagree", r.disagreements},
                     {"malformed", r.malformed}};
    out["summary"] = r.summary;
    json pts = json::array();
    for (const SweepPoint& p : r.points) {
        json row;
        row["primary"] = rat_str(p.primary);
        if (planar)
            row["sigma"] = rat_str(p.sigma);
        else
            row["sigma"] = nullptr;
        row["pencil"] = model_tag_name(p.pencil);
        row["table"] = model_tag_name(p.table);
        row["agree"] = p.agree;
        pts.push_back(std::move(row));
    }
    out["points"] = std::move(pts);
    return out.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepReport& r) {
    const bool planar = r.branch == Branch::POS || r.branch == Branch::NEG;
    std::ostringstream out;
    out << "primary,sigma,pencil,table,agree\n";
    for (const SweepPoint& p : r.points) {
        out << rat_str(p.primary) << ',';
        if (planar) out << rat_str(p.sigma);
        out << ',' << model_tag_name(p.pencil) << ',' << model_tag_name(p.table)
            << ',' << (p.agree ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace crtool
