// Borel-fixed discrete sets and convex shapes.
//
// In ambient lattice dimension k the move family is
//   f_i = -e_i + e_{i+1}   (i = 1..k-1),   f_k = -e_k,
// and a finite set S is Borel-fixed when (S + f_i) ∩ Z^k_+ ⊆ S for every i.
// The convex analogue crushes a coordinate into its successor:
//   B_i(a) = (a_1,...,a_{i-1}, 0, a_i + a_{i+1}, a_{i+2},...,a_k)
// with the last index dropping a_k outright. A compact convex body in the
// nonnegative orthant is Borel-fixed iff every vertex image under every B_i
// stays inside (the B_i are linear, so vertices suffice).

#ifndef OKBODY_BOREL_HPP
#define OKBODY_BOREL_HPP

#include "okbody/monomial.hpp"
#include "okbody/polytope.hpp"

#include <deque>
#include <optional>
#include <set>
#include <vector>

namespace okb {

struct DiscreteSet {
    size_t dim = 0;
    std::set<ExpVec> points;

    bool operator==(const DiscreteSet& o) const { return dim == o.dim && points == o.points; }
};

inline DiscreteSet make_discrete_set(size_t dim, const std::vector<ExpVec>& pts) {
    DiscreteSet s;
    s.dim = dim;
    for (const auto& p : pts) {
        if (p.size() != dim) throw std::invalid_argument("DiscreteSet: dimension mismatch");
        for (long e : p)
            if (e < 0) throw std::invalid_argument("DiscreteSet: negative coordinate");
        s.points.insert(p);
    }
    return s;
}

/// Single Borel move on a lattice point; nullopt when inadmissible (would
/// leave the nonnegative orthant).
inline std::optional<ExpVec> borel_move(const ExpVec& a, size_t i) {
    if (i >= a.size()) throw std::invalid_argument("borel_move: index out of range");
    if (a[i] < 1) return std::nullopt;
    ExpVec b(a);
    b[i] -= 1;
    if (i + 1 < a.size()) b[i + 1] += 1;
    return b;
}

struct BorelWitness {
    ExpVec point;
    size_t move_index = 0;  // 0-based
    ExpVec image;
};

/// True iff every admissible move of every point stays in the set; otherwise
/// the first counterexample encountered.
inline std::optional<BorelWitness> borel_set_counterexample(const DiscreteSet& s) {
    for (const auto& a : s.points)
        for (size_t i = 0; i < s.dim; ++i)
            if (auto b = borel_move(a, i); b && !s.points.count(*b))
                return BorelWitness{a, i, *b};
    return std::nullopt;
}

inline bool is_borel_fixed_set(const DiscreteSet& s) {
    return !borel_set_counterexample(s).has_value();
}

/// Smallest Borel-fixed superset, by breadth-first move expansion. Each move
/// strictly decreases the lex weight, so this terminates.
inline DiscreteSet borel_closure(const std::vector<ExpVec>& points) {
    if (points.empty()) throw std::invalid_argument("borel_closure: empty generator list");
    DiscreteSet s = make_discrete_set(points[0].size(), points);
    std::deque<ExpVec> queue(s.points.begin(), s.points.end());
    while (!queue.empty()) {
        ExpVec a = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < s.dim; ++i) {
            auto b = borel_move(a, i);
            if (b && s.points.insert(*b).second) queue.push_back(*b);
        }
    }
    return s;
}

inline std::vector<long> widths(const DiscreteSet& s) {
    if (s.points.empty()) throw std::invalid_argument("widths: empty set");
    std::vector<long> w(s.dim, 0);
    for (const auto& a : s.points)
        for (size_t i = 0; i < s.dim; ++i) w[i] = std::max(w[i], a[i]);
    return w;
}

struct CountingBounds {
    Int lower;
    Int upper;
};

/// In ambient dimension k, for nonempty Borel-fixed S:
///   1 + sum_{i=1..k} C(w_i + k - i, k - i + 1)  <=  |S|  <=  prod_i (w_i + 1).
inline CountingBounds counting_bounds(const DiscreteSet& s) {
    if (s.points.empty()) throw std::invalid_argument("counting_bounds: empty set");
    if (!is_borel_fixed_set(s)) throw std::invalid_argument("counting_bounds: set is not Borel-fixed");
    std::vector<long> w = widths(s);
    long k = static_cast<long>(s.dim);
    CountingBounds cb{Int(1), Int(1)};
    for (long i = 1; i <= k; ++i) {
        cb.lower += binomial(w[i - 1] + k - i, k - i + 1);
        cb.upper *= Int(w[i - 1] + 1);
    }
    Int size(static_cast<long>(s.points.size()));
    if (cb.lower > size || size > cb.upper)
        throw std::logic_error("counting_bounds: bound violated (input not Borel-fixed?)");
    return cb;
}

inline RationalPolytope hull_of(const DiscreteSet& s) {
    std::vector<RatVec> pts;
    for (const auto& a : s.points) pts.push_back(to_rat_vec(a));
    return RationalPolytope::hull(pts);
}

// ============================================================================
// Borel-fixed bodies
// ============================================================================

/// The crush map B_i as a (singular) linear map applied to a point.
inline RatVec crush(const RatVec& a, size_t i) {
    if (i >= a.size()) throw std::invalid_argument("crush: index out of range");
    RatVec b(a);
    if (i + 1 < a.size()) b[i + 1] += b[i];
    b[i] = 0;
    return b;
}

struct BodyWitness {
    RatVec vertex;
    size_t move_index = 0;
    RatVec image;
};

inline std::optional<BodyWitness> borel_body_counterexample(const RationalPolytope& p) {
    if (p.is_empty()) throw std::invalid_argument("borel_body_counterexample: empty polytope");
    for (const auto& v : p.vertices())
        for (const auto& x : v)
            if (x < 0)
                throw std::invalid_argument("borel_body_counterexample: polytope leaves the nonnegative orthant");
    for (const auto& v : p.vertices())
        for (size_t i = 0; i < p.dim(); ++i) {
            RatVec img = crush(v, i);
            if (!p.contains(img)) return BodyWitness{v, i, img};
        }
    return std::nullopt;
}

inline bool is_borel_fixed_body(const RationalPolytope& p) {
    return !borel_body_counterexample(p).has_value();
}

struct ShapeBounds {
    RationalPolytope lower;  // simplex(w)
    RationalPolytope upper;  // gamma(w)
    bool lower_included = false;
    bool upper_included = false;
    bool volume_bounds_hold = false;
};

/// simplex(w(P)) ⊆ P ⊆ gamma(w(P)) with the normalized volume inequality
/// (1/k!) Π w_i <= vol(P) <= Π w_i; all checked exactly.
inline ShapeBounds shape_bounds(const RationalPolytope& p) {
    if (p.is_empty()) throw std::invalid_argument("shape_bounds: empty polytope");
    if (!is_borel_fixed_body(p)) throw std::invalid_argument("shape_bounds: body is not Borel-fixed");
    RatVec w = widths(p);
    ShapeBounds sb;
    sb.lower = simplex_polytope(w);
    sb.upper = gamma_polytope(w);
    sb.lower_included = p.contains(sb.lower);
    sb.upper_included = sb.upper.contains(p);
    Rat prod(1);
    for (const auto& x : w) prod *= x;
    Rat vol = volume(p);
    sb.volume_bounds_hold =
        prod / Rat(factorial(static_cast<long>(p.dim()))) <= vol && vol <= prod;
    return sb;
}

/// Shadow volumes of the diagonal sections p ∩ { Σx = t }, measured by
/// projecting along the last coordinate (the normalization under which
/// parallel sections compare by translation). Nonincreasing on
/// [w_{k-1}, w_k) for Borel-fixed p.
inline std::vector<std::pair<Rat, Rat>> slice_volume_profile(const RationalPolytope& p,
                                                             std::vector<Rat> samples) {
    if (p.is_empty()) throw std::invalid_argument("slice_volume_profile: empty polytope");
    if (!is_borel_fixed_body(p))
        throw std::invalid_argument("slice_volume_profile: body is not Borel-fixed");
    if (p.dim() < 2) throw std::invalid_argument("slice_volume_profile: ambient dimension must be >= 2");
    size_t k = p.dim();
    RatVec w = widths(p);
    std::sort(samples.begin(), samples.end());
    RatVec diag(k, Rat(1));
    std::vector<std::pair<Rat, Rat>> profile;
    for (const auto& t : samples) {
        if (t < 0 || t > w[k - 1])
            throw std::invalid_argument("slice_volume_profile: sample out of [0, w_k]");
        RationalPolytope sec = hyperplane_section_drop(p, diag, t, k - 1);
        profile.emplace_back(t, volume(sec));
    }
    // Monotonicity on [w_{k-1}, w_k).
    Rat lo = k >= 2 ? w[k - 2] : Rat(0);
    const Rat& hi = w[k - 1];
    for (size_t i = 0; i + 1 < profile.size(); ++i) {
        const auto& [t1, v1] = profile[i];
        const auto& [t2, v2] = profile[i + 1];
        if (t1 >= lo && t2 < hi && v2 > v1)
            throw std::logic_error("slice_volume_profile: profile increased on [w_{k-1}, w_k)");
    }
    return profile;
}

}  // namespace okb

#endif  // OKBODY_BOREL_HPP
