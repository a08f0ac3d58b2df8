// JSON, CSV and SVG serialization.
//
// Rationals are always the decimal-free strings "p" / "p/q"; every JSON
// round trip is bit-exact. SVG coordinates are the only place floating
// point appears, rounded for display only.

#ifndef OKBODY_IO_HPP
#define OKBODY_IO_HPP

#include "okbody/bodies.hpp"
#include "okbody/borel.hpp"
#include "okbody/flagval.hpp"
#include "okbody/polytope.hpp"
#include "okbody/surface.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace okb {

using Json = nlohmann::ordered_json;

inline Json rat_to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (!j.is_string()) throw std::invalid_argument("expected a \"p/q\" string");
    return rat_from_string(j.get<std::string>());
}

inline Json vec_to_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

inline RatVec vec_from_json(const Json& j) {
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

// ============================================================================
// Polytopes
// ============================================================================

inline Json polytope_to_json(const RationalPolytope& p) {
    Json j;
    j["dim"] = p.dim();
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(vec_to_json(v));
    j["vertices"] = verts;
    Json hs = Json::array();
    for (const auto& h : p.halfspaces()) {
        Json one;
        one["normal"] = vec_to_json(h.normal);
        one["offset"] = rat_to_json(h.offset);
        hs.push_back(one);
    }
    j["halfspaces"] = hs;
    return j;
}

/// Rebuilds from the vertex list and cross-checks the stored halfspaces.
inline RationalPolytope polytope_from_json(const Json& j) {
    size_t dim = j.at("dim").get<size_t>();
    std::vector<RatVec> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(vec_from_json(v));
    RationalPolytope p = verts.empty() ? RationalPolytope::empty(dim)
                                       : RationalPolytope::hull(verts);
    if (p.dim() != dim) throw std::invalid_argument("polytope_from_json: dimension mismatch");
    if (j.contains("halfspaces")) {
        std::set<Halfspace> stored, rebuilt;
        for (const auto& h : j.at("halfspaces"))
            stored.insert({vec_from_json(h.at("normal")), rat_from_json(h.at("offset"))});
        for (const auto& h : p.halfspaces()) rebuilt.insert(h);
        if (stored != rebuilt)
            throw std::invalid_argument("polytope_from_json: halfspaces disagree with the vertex hull");
    }
    return p;
}

// ============================================================================
// Discrete sets and forms
// ============================================================================

inline Json discrete_set_to_json(const DiscreteSet& s) {
    Json j;
    j["dim"] = s.dim;
    Json pts = Json::array();
    for (const auto& p : s.points) {
        Json row = Json::array();
        for (long e : p) row.push_back(e);
        pts.push_back(row);
    }
    j["points"] = pts;
    return j;
}

inline DiscreteSet discrete_set_from_json(const Json& j) {
    DiscreteSet s;
    s.dim = j.at("dim").get<size_t>();
    for (const auto& row : j.at("points")) {
        ExpVec p;
        for (const auto& e : row) p.push_back(e.get<long>());
        if (p.size() != s.dim) throw std::invalid_argument("discrete_set_from_json: ragged point");
        s.points.insert(p);
    }
    return s;
}

/// Generator file: {"vars": n, "degree": d, "generators": [[[coeff, [exps]], ...], ...]}.
struct FormsFile {
    size_t vars = 0;
    long degree = 0;
    std::vector<Form> generators;
};

inline FormsFile forms_from_json(const Json& j) {
    FormsFile ff;
    ff.vars = j.at("vars").get<size_t>();
    if (ff.vars < 1) throw std::invalid_argument("forms file: vars must be >= 1");
    ff.degree = -1;
    for (const auto& gen : j.at("generators")) {
        Form f;
        for (const auto& term : gen) {
            if (!term.is_array() || term.size() != 2)
                throw std::invalid_argument("forms file: each term is [coeff, [exponents]]");
            Rat c = rat_from_json(term[0]);
            ExpVec e;
            for (const auto& x : term[1]) e.push_back(x.get<long>());
            if (e.size() != ff.vars)
                throw std::invalid_argument("forms file: exponent length differs from vars");
            for (long x : e)
                if (x < 0) throw std::invalid_argument("forms file: negative exponent");
            form_add_term(f, e, c);
        }
        if (f.empty()) throw std::invalid_argument("forms file: zero generator");
        long d = degree(f.begin()->first);
        if (!is_homogeneous(f, d)) throw std::invalid_argument("forms file: generator not homogeneous");
        if (ff.degree == -1) ff.degree = d;
        else if (ff.degree != d)
            throw std::invalid_argument("forms file: generators of mixed degrees");
        ff.generators.push_back(std::move(f));
    }
    if (j.contains("degree") && j.at("degree").get<long>() != ff.degree)
        throw std::invalid_argument("forms file: declared degree disagrees with the generators");
    if (ff.generators.empty()) throw std::invalid_argument("forms file: no generators");
    return ff;
}

inline Json certificate_to_json(const GenericityCertificate& c) {
    Json j;
    j["master_seed"] = c.master_seed;
    j["chart_seeds"] = c.chart_seeds;
    j["bound"] = c.bound;
    j["attempts"] = c.attempts;
    j["borel_fixed"] = c.borel_fixed;
    return j;
}

// ============================================================================
// Surface models and decompositions
// ============================================================================

inline Json surface_model_to_json(const SurfaceModel& m) {
    Json j;
    j["curves"] = m.curves;
    j["exceptional"] = m.curves.at(m.exceptional);
    Json gram = Json::array();
    for (size_t i = 0; i < m.gram.rows(); ++i) {
        Json row = Json::array();
        for (size_t c = 0; c < m.gram.cols(); ++c) row.push_back(rat_to_json(m.gram.at(i, c)));
        gram.push_back(row);
    }
    j["gram"] = gram;
    j["pullback"] = vec_to_json(m.pullback);
    if (m.mu) j["mu"] = rat_to_json(*m.mu);
    if (m.vol) j["vol"] = rat_to_json(*m.vol);
    return j;
}

inline SurfaceModel surface_model_from_json(const Json& j) {
    SurfaceModel m;
    for (const auto& c : j.at("curves")) m.curves.push_back(c.get<std::string>());
    std::string exc = j.at("exceptional").get<std::string>();
    bool found = false;
    for (size_t i = 0; i < m.curves.size(); ++i)
        if (m.curves[i] == exc) {
            m.exceptional = i;
            found = true;
        }
    if (!found) throw std::invalid_argument("surface model: exceptional curve not in the list");
    const auto& gram = j.at("gram");
    size_t k = m.curves.size();
    m.gram = RatMatrix(k, k);
    if (gram.size() != k) throw std::invalid_argument("surface model: Gram shape mismatch");
    for (size_t i = 0; i < k; ++i) {
        if (gram[i].size() != k) throw std::invalid_argument("surface model: Gram shape mismatch");
        for (size_t c = 0; c < k; ++c) m.gram.at(i, c) = rat_from_json(gram[i][c]);
    }
    m.pullback = vec_from_json(j.at("pullback"));
    if (j.contains("mu")) m.mu = rat_from_json(j.at("mu"));
    if (j.contains("vol")) m.vol = rat_from_json(j.at("vol"));
    validate_model(m);
    return m;
}

inline Json zariski_to_json(const SurfaceModel& m, const ZariskiResult& z) {
    Json j;
    j["positive"] = vec_to_json(z.positive);
    Json neg = Json::array();
    for (const auto& [i, a] : z.negative) {
        Json one;
        one["curve"] = m.curves.at(i);
        one["multiplicity"] = rat_to_json(a);
        neg.push_back(one);
    }
    j["negative"] = neg;
    return j;
}

inline Json ray_profile_to_json(const SurfaceModel& m, const NegativePartOnE& ne) {
    Json j;
    j["mu"] = rat_to_json(ne.mu);
    Json pieces = Json::array();
    for (const auto& p : ne.pieces) {
        Json one;
        one["from"] = rat_to_json(p.t_lo);
        one["to"] = rat_to_json(p.t_hi);
        one["value_at_from"] = rat_to_json(p.value_at_lo);
        one["slope"] = rat_to_json(p.slope);
        Json sup = Json::array();
        for (size_t i : p.support) sup.push_back(m.curves.at(i));
        one["support"] = sup;
        pieces.push_back(one);
    }
    j["pieces"] = pieces;
    Json bs = Json::array();
    for (const auto& b : ne.breakpoints()) bs.push_back(rat_to_json(b));
    j["breakpoints"] = bs;
    return j;
}

// ============================================================================
// Body reports
// ============================================================================

inline Json body_report_to_json(const BodyReport& r) {
    Json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["has_bodies"] = r.has_bodies;
    if (r.has_bodies) {
        j["tilted"] = polytope_to_json(r.tilted);
        j["straightened"] = polytope_to_json(r.straightened);
    }
    j["epsilons"] = vec_to_json(r.epsilons);
    if (r.eps_loc) j["eps_loc"] = vec_to_json(*r.eps_loc);
    j["mu"] = rat_to_json(r.mu);
    j["vol"] = rat_to_json(r.vol);
    j["generic_flag"] = r.generic_flag;
    j["very_general_point"] = r.very_general_point;
    if (r.declared_nonsimplicial) j["declared_nonsimplicial"] = true;
    j["expected_failures"] = r.expected_failures;
    j["verdicts"] = r.verdicts;
    j["notes"] = r.notes;
    return j;
}

// ============================================================================
// CSV and SVG
// ============================================================================

inline std::string width_samples_to_csv(const std::vector<std::pair<Rat, Rat>>& samples,
                                        const std::string& value_name = "w") {
    std::ostringstream out;
    out << "t," << value_name << "\n";
    for (const auto& [t, w] : samples) out << rat_to_string(t) << "," << rat_to_string(w) << "\n";
    return out.str();
}

namespace detail {

/// Display-only conversion: 12 significant digits, never fed back into
/// any computation.
inline std::string svg_coord(const Rat& r) {
    double x = numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

inline void svg_polygon_path(std::ostringstream& out, const RationalPolytope& poly,
                             const Rat& ox, const Rat& scale_to, const Rat& max_y,
                             const std::string& fill) {
    // Order the vertices counterclockwise around the centroid, then flip y
    // for screen coordinates.
    auto verts = poly.vertices();
    if (verts.size() < 2) return;
    RatVec c(2, Rat(0));
    for (const auto& v : verts) c = vec_add(c, v);
    c = vec_scale(Rat(1) / Rat(static_cast<long>(verts.size())), c);
    std::sort(verts.begin(), verts.end(), [&](const RatVec& a, const RatVec& b) {
        auto half = [&](const RatVec& p) { return p[1] > c[1] || (p[1] == c[1] && p[0] >= c[0]); };
        bool ha = half(a), hb = half(b);
        if (ha != hb) return ha;
        Rat cr = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cr > 0;
    });
    out << "  <polygon fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"0.02\" points=\"";
    for (const auto& v : verts)
        out << svg_coord((v[0] + ox) * scale_to) << "," << svg_coord((max_y - v[1]) * scale_to)
            << " ";
    out << "\"/>\n";
}

}  // namespace detail

/// A standalone SVG drawing of one 2-D polytope, or of the nu_1-slices of a
/// 3-D one at the given values.
inline std::string polytope_to_svg(const RationalPolytope& p, const std::vector<Rat>& slice_at = {}) {
    std::vector<RationalPolytope> polys;
    if (p.dim() == 2) {
        polys.push_back(p);
    } else if (p.dim() == 3) {
        for (const auto& t : slice_at) {
            RationalPolytope s = slice(p, 0, t);
            if (!s.is_empty()) polys.push_back(s);
        }
        if (polys.empty()) throw std::invalid_argument("polytope_to_svg: no nonempty slices");
    } else {
        throw std::invalid_argument("polytope_to_svg: only 2-D bodies and 3-D slices are drawable");
    }

    Rat max_x(1), max_y(1);
    for (const auto& poly : polys)
        for (const auto& v : poly.vertices()) {
            max_x = std::max(max_x, v[0]);
            max_y = std::max(max_y, v[1]);
        }
    Rat gap = std::max(max_x, Rat(1)) / 4;
    Rat scale_to(60);

    std::ostringstream out;
    Rat total_w = (max_x + gap) * Rat(static_cast<long>(polys.size())) * scale_to;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-10 -10 "
        << detail::svg_coord(total_w + 20) << " " << detail::svg_coord(max_y * scale_to + 20)
        << "\">\n";
    Rat ox(0);
    for (const auto& poly : polys) {
        detail::svg_polygon_path(out, poly, ox, scale_to, max_y, "#cccccc");
        ox += max_x + gap;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace okb

#endif  // OKBODY_IO_HPP
