// Zariski decompositions on blow-up surfaces from exact intersection data,
// the piecewise-linear negative part along the ray L_t = pi*L - tE, and the
// resulting two-dimensional infinitesimal body (area under the graph of
// t -> t - N(L_t).E, zero lower boundary).
//
// The model carries the candidate negative curves and their Gram matrix;
// classes are coefficient vectors over the curve list. Decomposition runs
// the support-growth iteration: start from the curves the class meets
// negatively, solve the Gram system for the multiplicities, re-test
// positivity, repeat to a fixed point. If the curve list is incomplete or
// the class is not pseudoeffective within the model this surfaces as a
// NoDecomposition error, never a wrong answer.

#ifndef OKBODY_SURFACE_HPP
#define OKBODY_SURFACE_HPP

#include "okbody/matrix.hpp"
#include "okbody/polytope.hpp"
#include "okbody/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace okb {

struct NoDecomposition : std::runtime_error {
    explicit NoDecomposition(const std::string& what) : std::runtime_error(what) {}
};

struct SurfaceModel {
    std::vector<std::string> curves;
    size_t exceptional = 0;     // index of E in `curves`
    RatMatrix gram;             // exact intersection matrix
    RatVec pullback;            // pi*L over the curve basis, so L_t = pullback - t e_E
    std::optional<Rat> mu;      // declared end of the t-domain
    std::optional<Rat> vol;     // declared vol(L), cross-checked when present
};

inline void validate_model(const SurfaceModel& m, bool require_ray = true) {
    size_t k = m.curves.size();
    if (k == 0) throw std::invalid_argument("SurfaceModel: no curves");
    if (m.gram.rows() != k || m.gram.cols() != k)
        throw std::invalid_argument("SurfaceModel: Gram shape mismatch");
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (m.gram.at(i, j) != m.gram.at(j, i))
                throw std::invalid_argument("SurfaceModel: Gram matrix not symmetric");
            if (i != j && m.gram.at(i, j) < 0)
                throw std::invalid_argument("SurfaceModel: distinct curves must meet nonnegatively");
        }
    if (require_ray) {
        if (m.exceptional >= k) throw std::invalid_argument("SurfaceModel: bad exceptional index");
        if (m.gram.at(m.exceptional, m.exceptional) != -1)
            throw std::invalid_argument("SurfaceModel: E.E must be -1");
        if (m.pullback.size() != k)
            throw std::invalid_argument("SurfaceModel: pullback length mismatch");
    }
}

inline RatVec ray_class(const SurfaceModel& m, const Rat& t) {
    RatVec d(m.pullback);
    d[m.exceptional] -= t;
    return d;
}

struct ZariskiResult {
    RatVec positive;                 // class coefficients of P = D - N
    std::map<size_t, Rat> negative;  // support curve index -> multiplicity (> 0)

    Rat negative_dot(const SurfaceModel& m, size_t curve) const {
        Rat s(0);
        for (const auto& [i, a] : negative) s += a * m.gram.at(i, curve);
        return s;
    }
};

namespace detail {

inline bool negative_definite(const RatMatrix& g, const std::vector<size_t>& s) {
    // Leading principal minors of the restriction alternate: sign (-1)^k.
    for (size_t k = 1; k <= s.size(); ++k) {
        RatMatrix sub(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub.at(i, j) = g.at(s[i], s[j]);
        Rat det = determinant(sub);
        if ((k % 2 == 0) ? det <= 0 : det >= 0) return false;
    }
    return true;
}

/// Multiplicities solving (d - N).C = 0 for C in the support.
inline std::optional<RatVec> support_multiplicities(const RatMatrix& gram,
                                                    const std::vector<size_t>& support,
                                                    const RatVec& inter) {
    size_t k = support.size();
    RatMatrix gs(k, k);
    RatVec rhs(k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) gs.at(i, j) = gram.at(support[i], support[j]);
        rhs[i] = inter[support[i]];
    }
    return solve(gs, rhs);
}

}  // namespace detail

/// Exact Zariski decomposition of the class d within the model, by support
/// growth. Throws NoDecomposition when no valid split exists over the
/// listed curves.
inline ZariskiResult zariski_decompose(const SurfaceModel& m, const RatVec& d) {
    validate_model(m, /*require_ray=*/false);
    size_t k = m.curves.size();
    if (d.size() != k) throw std::invalid_argument("zariski_decompose: class length mismatch");
    RatVec inter = m.gram.apply(d);  // d . C_i

    std::set<size_t> support;
    for (size_t i = 0; i < k; ++i)
        if (inter[i] < 0) support.insert(i);

    RatVec mult;
    std::vector<size_t> sup;
    while (true) {
        sup.assign(support.begin(), support.end());
        if (sup.empty()) {
            mult.clear();
        } else {
            auto a = detail::support_multiplicities(m.gram, sup, inter);
            if (!a)
                throw NoDecomposition(
                    "zariski_decompose: singular Gram system (class not pseudoeffective within "
                    "the model, or the curve list is incomplete)");
            mult = *a;
        }
        // P . C_j for all j, and grow the support where negative.
        bool grew = false;
        for (size_t j = 0; j < k; ++j) {
            Rat pj = inter[j];
            for (size_t i = 0; i < sup.size(); ++i) pj -= mult[i] * m.gram.at(sup[i], j);
            if (pj < 0 && !support.count(j)) {
                support.insert(j);
                grew = true;
            }
        }
        if (!grew) break;
    }

    ZariskiResult res;
    res.positive = d;
    for (size_t i = 0; i < sup.size(); ++i) {
        if (mult[i] < 0)
            throw NoDecomposition("zariski_decompose: negative multiplicity (no valid decomposition)");
        if (mult[i] == 0) continue;  // inert curve, drop from the support
        res.negative[sup[i]] = mult[i];
    }
    // P = d - sum a_i C_i in the curve basis.
    for (const auto& [i, a] : res.negative) res.positive[i] -= a;

    // Validate every invariant; failures mean the input was out of range.
    std::vector<size_t> final_sup;
    for (const auto& [i, a] : res.negative) final_sup.push_back(i);
    RatVec pdot = m.gram.apply(res.positive);
    for (size_t j = 0; j < k; ++j)
        if (pdot[j] < 0)
            throw NoDecomposition("zariski_decompose: positive part not nef against the curve list");
    for (size_t i : final_sup)
        if (pdot[i] != 0) throw std::logic_error("zariski_decompose: P not orthogonal to the support");
    if (!detail::negative_definite(m.gram, final_sup))
        throw NoDecomposition("zariski_decompose: support Gram matrix not negative definite");
    return res;
}

// ============================================================================
// The negative part along the exceptional ray
// ============================================================================

struct RayPiece {
    Rat t_lo, t_hi;
    Rat value_at_lo, slope;        // N(L_t).E = value_at_lo + slope * (t - t_lo)
    std::vector<size_t> support;

    Rat at(const Rat& t) const { return value_at_lo + slope * (t - t_lo); }
};

struct NegativePartOnE {
    std::vector<RayPiece> pieces;  // consecutive, covering [0, mu]
    Rat mu;

    Rat at(const Rat& t) const {
        if (t < 0 || t > mu) throw std::invalid_argument("NegativePartOnE: t out of [0, mu]");
        for (const auto& p : pieces)
            if (t <= p.t_hi) return p.at(t);
        return pieces.back().at(t);
    }

    std::vector<Rat> breakpoints() const {
        std::vector<Rat> bs;
        for (const auto& p : pieces) bs.push_back(p.t_hi);
        return bs;
    }
};

namespace detail {

/// Signs of v + s*eps for infinitesimal eps > 0.
inline bool jet_negative(const Rat& v, const Rat& s) { return v < 0 || (v == 0 && s < 0); }
inline bool jet_positive(const Rat& v, const Rat& s) { return v > 0 || (v == 0 && s > 0); }

struct RaySupport {
    std::vector<size_t> support;
    RatVec mult_value;  // multiplicities at t0
    RatVec mult_slope;  // d/dt of the multiplicities while the support holds
};

/// Support of N(L_t) for t infinitesimally beyond t0, by the same growth
/// iteration run on first-order jets. nullopt when no valid decomposition
/// exists just beyond t0 (the ray has left the pseudoeffective region).
inline std::optional<RaySupport> support_beyond(const SurfaceModel& m, const Rat& t0) {
    size_t k = m.curves.size();
    RatVec d0 = ray_class(m, t0);
    RatVec e(k, Rat(0));
    e[m.exceptional] = -1;            // d(t) = d0 + (t - t0) * e
    RatVec iv = m.gram.apply(d0);     // values of d(t).C_j at t0
    RatVec is = m.gram.apply(e);      // slopes of d(t).C_j

    std::set<size_t> support;
    for (size_t j = 0; j < k; ++j)
        if (jet_negative(iv[j], is[j])) support.insert(j);

    RaySupport rs;
    while (true) {
        rs.support.assign(support.begin(), support.end());
        if (rs.support.empty()) {
            rs.mult_value.clear();
            rs.mult_slope.clear();
        } else {
            auto av = support_multiplicities(m.gram, rs.support, iv);
            auto as = support_multiplicities(m.gram, rs.support, is);
            if (!av || !as) return std::nullopt;
            rs.mult_value = *av;
            rs.mult_slope = *as;
        }
        bool grew = false;
        for (size_t j = 0; j < k; ++j) {
            Rat pv = iv[j], ps = is[j];
            for (size_t i = 0; i < rs.support.size(); ++i) {
                pv -= rs.mult_value[i] * m.gram.at(rs.support[i], j);
                ps -= rs.mult_slope[i] * m.gram.at(rs.support[i], j);
            }
            if (jet_negative(pv, ps) && !support.count(j)) {
                support.insert(j);
                grew = true;
            }
        }
        if (!grew) break;
    }
    for (size_t i = 0; i < rs.support.size(); ++i)
        if (!jet_positive(rs.mult_value[i], rs.mult_slope[i]))  // multiplicity <= 0 just beyond
            return std::nullopt;
    if (!negative_definite(m.gram, rs.support)) return std::nullopt;
    return rs;
}

}  // namespace detail

/// The exact piecewise-linear function t -> N(L_t).E on [0, mu], with the
/// breakpoints where the Zariski support changes. mu is the declared domain
/// end when the model carries one, otherwise the largest t admitting a
/// valid decomposition, searched below `cap`.
inline NegativePartOnE negative_part_on_E(const SurfaceModel& m, const Rat& cap = Rat(1000000)) {
    validate_model(m);
    size_t k = m.curves.size();
    NegativePartOnE out;
    Rat t0(0);
    while (true) {
        auto rs = detail::support_beyond(m, t0);
        if (!rs) {
            if (out.pieces.empty())
                throw NoDecomposition("negative_part_on_E: no decomposition at t = 0 (pi*L not "
                                      "pseudoeffective within the model)");
            out.mu = t0;
            break;
        }
        // N(t).E and the constraint functions are affine while the support holds.
        Rat ne_v(0), ne_s(0);
        for (size_t i = 0; i < rs->support.size(); ++i) {
            ne_v += rs->mult_value[i] * m.gram.at(rs->support[i], m.exceptional);
            ne_s += rs->mult_slope[i] * m.gram.at(rs->support[i], m.exceptional);
        }

        // End of the stability interval: first crossing of P.C_j >= 0 or of a
        // multiplicity hitting zero, then the declared mu, then the cap.
        std::optional<Rat> t_end;
        auto cross = [&](const Rat& v, const Rat& s) {
            // v + s*(t - t0) with the constraint ">= 0" holding just beyond t0.
            if (s >= 0) return;
            Rat tc = t0 - v / s;
            if (tc > t0 && (!t_end || tc < *t_end)) t_end = tc;
        };
        RatVec d0 = ray_class(m, t0);
        RatVec e(k, Rat(0));
        e[m.exceptional] = -1;
        RatVec iv = m.gram.apply(d0), is = m.gram.apply(e);
        std::set<size_t> insup(rs->support.begin(), rs->support.end());
        for (size_t j = 0; j < k; ++j) {
            if (insup.count(j)) continue;
            Rat pv = iv[j], ps = is[j];
            for (size_t i = 0; i < rs->support.size(); ++i) {
                pv -= rs->mult_value[i] * m.gram.at(rs->support[i], j);
                ps -= rs->mult_slope[i] * m.gram.at(rs->support[i], j);
            }
            cross(pv, ps);
        }
        for (size_t i = 0; i < rs->support.size(); ++i) cross(rs->mult_value[i], rs->mult_slope[i]);

        bool hit_mu = false;
        if (m.mu && (!t_end || *m.mu <= *t_end)) {
            t_end = *m.mu;
            hit_mu = true;
        }
        if (!t_end) {
            if (t0 >= cap) throw NoDecomposition("negative_part_on_E: ray unbounded below the cap");
            t_end = cap;  // provisional; next round re-tests beyond the cap
        }
        if (*t_end > cap && !hit_mu)
            throw NoDecomposition("negative_part_on_E: ray unbounded below the cap");

        out.pieces.push_back({t0, *t_end, ne_v, ne_s, rs->support});
        if (hit_mu) {
            out.mu = *t_end;
            break;
        }
        t0 = *t_end;
    }

    // Exact continuity at the breakpoints.
    for (size_t i = 0; i + 1 < out.pieces.size(); ++i)
        if (out.pieces[i].at(out.pieces[i].t_hi) != out.pieces[i + 1].value_at_lo)
            throw std::logic_error("negative_part_on_E: discontinuity at a breakpoint");
    return out;
}

/// The polygon { (t, y) : 0 <= t <= mu, 0 <= y <= t - N(L_t).E } with exact
/// vertices at the breakpoints. The upper boundary must be concave and
/// nonnegative; twice the area must match the declared vol(L) if present.
inline RationalPolytope surface_inobody(const SurfaceModel& m, const Rat& cap = Rat(1000000)) {
    NegativePartOnE ne = negative_part_on_E(m, cap);
    std::vector<RatVec> pts;
    pts.push_back({Rat(0), Rat(0)});
    pts.push_back({ne.mu, Rat(0)});
    std::optional<Rat> prev_slope;
    for (const auto& piece : ne.pieces) {
        Rat upper_slope = Rat(1) - piece.slope;
        if (prev_slope && upper_slope > *prev_slope)
            throw std::logic_error("surface_inobody: upper boundary not concave");
        prev_slope = upper_slope;
        for (const Rat& t : {piece.t_lo, piece.t_hi}) {
            Rat y = t - piece.at(t);
            if (y < 0) throw std::logic_error("surface_inobody: negative upper boundary");
            pts.push_back({t, y});
        }
    }
    RationalPolytope body = RationalPolytope::hull(pts);
    if (m.vol && volume(body) * 2 != *m.vol)
        throw std::logic_error("surface_inobody: area does not match the declared volume");
    return body;
}

/// Bl_p P^2 blown up again at a point x on F: strict transforms
/// lbar, Fbar and the exceptional E over x, polarized by (u+v) l + u F.
inline SurfaceModel blowup_p2_model(const Rat& u, const Rat& v) {
    if (u < v || v <= 0) throw std::invalid_argument("blowup_p2_model: need u >= v > 0");
    SurfaceModel m;
    m.curves = {"lbar", "Fbar", "E"};
    m.exceptional = 2;
    m.gram = RatMatrix::from_rows({
        rat_vec({-1, 0, 1}),
        rat_vec({0, -2, 1}),
        rat_vec({1, 1, -1}),
    });
    m.pullback = {u + v, u, 2 * u + v};
    m.vol = u * u + 2 * u * v;
    return m;
}

}  // namespace okb

#endif  // OKBODY_SURFACE_HPP
