// Exact rational convex polytopes in small ambient dimension (<= 6).
//
// Both representations are kept at all times: the minimal vertex set and an
// irredundant inequality description (proper facets relative to the affine
// hull, plus equations pinning the affine hull itself). Construction reduces
// to coordinates on the affine hull, so degenerate inputs are first class:
// a polytope may be lower-dimensional, a single point, or empty.
//
// Vertex enumeration from inequalities walks basic feasible solutions, so
// from_halfspaces requires a bounded region.

#ifndef OKBODY_POLYTOPE_HPP
#define OKBODY_POLYTOPE_HPP

#include "okbody/matrix.hpp"
#include "okbody/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace okb {

constexpr size_t kMaxPolytopeDim = 6;

/// normal . x <= offset
struct Halfspace {
    RatVec normal;
    Rat offset;

    bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const Halfspace& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

namespace detail {

/// Scales so the normal has coprime integer entries; orientation preserved.
inline Halfspace canonical_halfspace(Halfspace h) {
    Int lcm(1);
    for (const Rat& x : h.normal) lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
    Int g(0);
    for (const Rat& x : h.normal) g = boost::multiprecision::gcd(g, Int(numerator(x) * (lcm / denominator(x))));
    if (g == 0) throw std::logic_error("canonical_halfspace: zero normal");
    Rat s = make_rat(lcm, g);
    for (Rat& x : h.normal) x *= s;
    h.offset *= s;
    return h;
}

/// Equations additionally fix the sign of the first nonzero entry.
inline Halfspace canonical_equation(Halfspace h) {
    h = canonical_halfspace(std::move(h));
    for (const Rat& x : h.normal) {
        if (x == 0) continue;
        if (x < 0) {
            for (Rat& y : h.normal) y = -y;
            h.offset = -h.offset;
        }
        break;
    }
    return h;
}

}  // namespace detail

class RationalPolytope {
public:
    RationalPolytope() = default;

    static RationalPolytope empty(size_t dim) {
        check_dim(dim);
        RationalPolytope p;
        p.dim_ = dim;
        p.empty_ = true;
        return p;
    }

    static RationalPolytope hull(const std::vector<RatVec>& points) {
        if (points.empty()) throw std::invalid_argument("hull: empty point list");
        size_t dim = points[0].size();
        check_dim(dim);
        for (const auto& p : points)
            if (p.size() != dim) throw std::invalid_argument("hull: dimension mismatch");
        std::set<RatVec> uniq(points.begin(), points.end());
        prune_midpoints(uniq, dim);
        std::vector<RatVec> pts(uniq.begin(), uniq.end());
        return assemble(dim, pts, nullptr);
    }

    /// Vertex enumeration over basic feasible solutions. The inequalities
    /// must describe a bounded region.
    static RationalPolytope from_halfspaces(size_t dim, const std::vector<Halfspace>& hs) {
        check_dim(dim);
        for (const auto& h : hs)
            if (h.normal.size() != dim)
                throw std::invalid_argument("from_halfspaces: dimension mismatch");

        std::set<RatVec> found;
        std::vector<size_t> pick(dim);
        auto feasible = [&](const RatVec& x) {
            for (const auto& h : hs) {
                Rat lhs(0);
                for (size_t j = 0; j < dim; ++j) lhs += h.normal[j] * x[j];
                if (lhs > h.offset) return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, size_t from, size_t got) -> void {
            if (got == dim) {
                RatMatrix a(dim, dim);
                RatVec b(dim);
                for (size_t r = 0; r < dim; ++r) {
                    for (size_t c = 0; c < dim; ++c) a.at(r, c) = hs[pick[r]].normal[c];
                    b[r] = hs[pick[r]].offset;
                }
                if (auto x = solve(a, b); x && feasible(*x)) found.insert(*x);
                return;
            }
            for (size_t i = from; i + (dim - got) <= hs.size(); ++i) {
                pick[got] = i;
                self(self, i + 1, got + 1);
            }
        };
        if (hs.size() >= dim) rec(rec, 0, 0);
        if (found.empty()) return empty(dim);
        std::vector<RatVec> pts(found.begin(), found.end());
        return assemble(dim, pts, &hs);
    }

    size_t dim() const { return dim_; }
    bool is_empty() const { return empty_; }
    /// Dimension of the affine hull; -1 for the empty polytope.
    int affine_dim() const { return empty_ ? -1 : static_cast<int>(dim_ - equations_.size()); }

    const std::vector<RatVec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<Halfspace>& equations() const { return equations_; }

    /// Full inequality description: facets plus each equation as two
    /// opposite inequalities.
    std::vector<Halfspace> halfspaces() const {
        std::vector<Halfspace> hs(facets_);
        for (const auto& e : equations_) {
            hs.push_back(e);
            Halfspace flip;
            for (const Rat& x : e.normal) flip.normal.push_back(-x);
            flip.offset = -e.offset;
            hs.push_back(flip);
        }
        return hs;
    }

    bool contains(const RatVec& x) const {
        if (empty_) return false;
        if (x.size() != dim_) throw std::invalid_argument("contains: dimension mismatch");
        for (const auto& e : equations_)
            if (dot(e.normal, x) != e.offset) return false;
        for (const auto& f : facets_)
            if (dot(f.normal, x) > f.offset) return false;
        return true;
    }

    bool contains(const RationalPolytope& other) const {
        if (other.empty_) return true;
        for (const auto& v : other.vertices_)
            if (!contains(v)) return false;
        return true;
    }

    bool operator==(const RationalPolytope& o) const {
        if (dim_ != o.dim_ || empty_ != o.empty_) return false;
        return vertices_ == o.vertices_;
    }

private:
    size_t dim_ = 0;
    bool empty_ = true;
    std::vector<RatVec> vertices_;     // sorted; exactly the extreme points
    std::vector<Halfspace> facets_;    // proper facets relative to the affine hull
    std::vector<Halfspace> equations_; // independent affine-hull constraints

    static void check_dim(size_t dim) {
        if (dim < 1 || dim > kMaxPolytopeDim)
            throw std::invalid_argument("RationalPolytope: ambient dimension must be 1..6");
    }

    /// Drops points that are midpoints of two other members along small
    /// integer directions. Sound for any point set; on hulls of lattice sets
    /// it removes the bulk of the interior before facet enumeration.
    static void prune_midpoints(std::set<RatVec>& pts, size_t dim) {
        if (pts.size() < 3) return;
        std::vector<RatVec> dirs;
        RatVec d(dim, Rat(0));
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == dim) {
                for (const auto& x : d)
                    if (x != 0) { dirs.push_back(d); return; }
                return;
            }
            for (long v : {0L, 1L, -1L}) {
                d[i] = v;
                self(self, i + 1);
            }
            d[i] = 0;
        };
        rec(rec, 0);
        std::vector<RatVec> drop;
        for (const auto& p : pts) {
            for (const auto& dir : dirs) {
                if (pts.count(vec_add(p, dir)) && pts.count(vec_sub(p, dir))) {
                    drop.push_back(p);
                    break;
                }
            }
        }
        for (const auto& p : drop) pts.erase(p);
    }

    struct Frame {
        RatVec p0;
        RatMatrix basis;   // dim x k, columns span the affine hull directions
        RatMatrix coords;  // k x dim, y = coords * (x - p0)
        size_t affdim = 0;
    };

    static Frame make_frame(size_t dim, const std::vector<RatVec>& pts) {
        Frame fr;
        fr.p0 = pts[0];
        std::vector<RatVec> basis_rows;
        for (const auto& q : pts) {
            RatVec d = vec_sub(q, fr.p0);
            bool zero = true;
            for (const auto& x : d) zero = zero && x == 0;
            if (zero) continue;
            basis_rows.push_back(d);
            if (rank(RatMatrix::from_rows(basis_rows)) < basis_rows.size()) basis_rows.pop_back();
            if (basis_rows.size() == dim) break;
        }
        fr.affdim = basis_rows.size();
        RatMatrix bt = RatMatrix::from_rows(basis_rows);  // k x dim
        fr.basis = bt.transpose();
        if (fr.affdim > 0) {
            RatMatrix btb = bt * fr.basis;  // k x k, invertible
            auto inv = inverse(btb);
            if (!inv) throw std::logic_error("make_frame: Gram matrix singular");
            fr.coords = *inv * bt;  // k x dim
        }
        return fr;
    }

    static RatVec frame_coords(const Frame& fr, const RatVec& x) {
        return fr.coords.apply(vec_sub(x, fr.p0));
    }

    /// Facets of a full-dimensional point configuration in R^k, k >= 3:
    /// every supporting hyperplane spanned by k affinely independent points
    /// with all points on one side.
    static std::vector<Halfspace> facets_by_enumeration(const std::vector<RatVec>& ys, size_t k) {
        std::set<Halfspace> out;
        size_t m = ys.size();
        std::vector<size_t> pick(k);
        auto consider = [&]() {
            RatMatrix diffs(k - 1, k);
            for (size_t r = 0; r + 1 < k; ++r) {
                RatVec d = vec_sub(ys[pick[r + 1]], ys[pick[0]]);
                for (size_t c = 0; c < k; ++c) diffs.at(r, c) = d[c];
            }
            auto ker = kernel_basis(diffs);
            if (ker.size() != 1) return;
            RatVec n = ker[0];
            Rat c = dot(n, ys[pick[0]]);
            bool pos = false, neg = false;
            for (const auto& y : ys) {
                Rat v = dot(n, y);
                if (v > c) pos = true;
                else if (v < c) neg = true;
                if (pos && neg) return;
            }
            if (!pos && !neg) return;  // all points on the hyperplane: not full-dim, unreachable here
            if (pos) {
                for (auto& x : n) x = -x;
                c = -c;
            }
            out.insert(detail::canonical_halfspace({std::move(n), std::move(c)}));
        };
        auto rec = [&](auto&& self, size_t from, size_t got) -> void {
            if (got == k) { consider(); return; }
            for (size_t i = from; i + (k - got) <= m; ++i) {
                pick[got] = i;
                self(self, i + 1, got + 1);
            }
        };
        rec(rec, 0, 0);
        return {out.begin(), out.end()};
    }

    /// Facets of a full-dimensional planar configuration via monotone chain.
    static std::vector<Halfspace> facets_planar(std::vector<RatVec> ys) {
        std::sort(ys.begin(), ys.end());
        auto cross = [](const RatVec& o, const RatVec& a, const RatVec& b) {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        };
        std::vector<RatVec> ring;
        for (const auto& p : ys) {  // lower chain
            while (ring.size() >= 2 && cross(ring[ring.size() - 2], ring.back(), p) <= 0) ring.pop_back();
            ring.push_back(p);
        }
        size_t lower = ring.size() + 1;
        for (auto it = ys.rbegin(); it != ys.rend(); ++it) {  // upper chain
            while (ring.size() >= lower && cross(ring[ring.size() - 2], ring.back(), *it) <= 0) ring.pop_back();
            ring.push_back(*it);
        }
        ring.pop_back();  // closes on ys.front()

        std::vector<Halfspace> out;
        for (size_t i = 0; i < ring.size(); ++i) {
            const RatVec& a = ring[i];
            const RatVec& b = ring[(i + 1) % ring.size()];
            RatVec n = {b[1] - a[1], a[0] - b[0]};  // outward for ccw ring
            out.push_back(detail::canonical_halfspace({n, dot(n, a)}));
        }
        return out;
    }

    /// Common construction core. `hints` carries the inequality list when the
    /// points came from basic-solution enumeration: then the points are known
    /// extreme and facets are read off the hints instead of enumerated.
    static RationalPolytope assemble(size_t dim, const std::vector<RatVec>& pts,
                                     const std::vector<Halfspace>* hints) {
        RationalPolytope p;
        p.dim_ = dim;
        p.empty_ = false;

        Frame fr = make_frame(dim, pts);
        size_t k = fr.affdim;

        // Affine-hull equations from the kernel of basis^T.
        if (k < dim) {
            RatMatrix bt = fr.basis.transpose();
            std::vector<RatVec> normals =
                k == 0 ? std::vector<RatVec>() : kernel_basis(bt);
            if (k == 0)
                for (size_t i = 0; i < dim; ++i) {
                    RatVec e(dim, Rat(0));
                    e[i] = 1;
                    normals.push_back(e);
                }
            for (auto& n : normals) {
                Rat off = dot(n, fr.p0);
                p.equations_.push_back(detail::canonical_equation({std::move(n), std::move(off)}));
            }
            std::sort(p.equations_.begin(), p.equations_.end());
        }

        if (k == 0) {
            p.vertices_ = {fr.p0};
            return p;
        }

        std::vector<RatVec> ys;
        ys.reserve(pts.size());
        for (const auto& q : pts) ys.push_back(frame_coords(fr, q));

        std::vector<Halfspace> frame_facets;
        if (hints) {
            frame_facets = facets_from_hints(*hints, pts, ys, k);
        } else if (k == 1) {
            RatVec lo = ys[0], hi = ys[0];
            for (const auto& y : ys) {
                lo[0] = std::min(lo[0], y[0]);
                hi[0] = std::max(hi[0], y[0]);
            }
            frame_facets.push_back({{Rat(1)}, hi[0]});
            frame_facets.push_back({{Rat(-1)}, -lo[0]});
        } else if (k == 2) {
            frame_facets = facets_planar(ys);
        } else {
            frame_facets = facets_by_enumeration(ys, k);
        }

        // Lift frame facets to ambient coordinates: a.y <= c with
        // y = coords (x - p0) becomes (coords^T a).x <= c + (coords^T a).p0.
        RatMatrix mt = fr.coords.transpose();  // dim x k
        std::set<Halfspace> lifted;
        for (const auto& f : frame_facets) {
            RatVec n = mt.apply(f.normal);
            Rat off = f.offset + dot(n, fr.p0);
            lifted.insert(detail::canonical_halfspace({std::move(n), std::move(off)}));
        }
        p.facets_.assign(lifted.begin(), lifted.end());

        // Vertices: points whose active facet normals span the frame.
        std::set<RatVec> verts;
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<RatVec> active;
            for (const auto& f : frame_facets)
                if (dot(f.normal, ys[i]) == f.offset) active.push_back(f.normal);
            if (active.size() >= k && rank(RatMatrix::from_rows(active)) == k)
                verts.insert(pts[i]);
        }
        p.vertices_.assign(verts.begin(), verts.end());
        return p;
    }

    /// Classifies hinted inequalities against known extreme points: facets
    /// are those active on a (k-1)-dimensional set. Returned in frame
    /// coordinates (orthogonal projection quotients out equation normals).
    static std::vector<Halfspace> facets_from_hints(const std::vector<Halfspace>& hints,
                                                    const std::vector<RatVec>& pts,
                                                    const std::vector<RatVec>& ys, size_t k) {
        std::set<Halfspace> out;
        std::set<std::vector<size_t>> seen_active;
        for (const auto& h : hints) {
            std::vector<size_t> active;
            for (size_t i = 0; i < pts.size(); ++i)
                if (dot(h.normal, pts[i]) == h.offset) active.push_back(i);
            if (active.empty() || active.size() == pts.size()) continue;
            if (!seen_active.insert(active).second) continue;

            // Affine rank of the active set in frame coordinates.
            std::vector<RatVec> diffs;
            for (size_t j = 1; j < active.size(); ++j)
                diffs.push_back(vec_sub(ys[active[j]], ys[active[0]]));
            size_t r = diffs.empty() ? 0 : rank(RatMatrix::from_rows(diffs));
            if (r != k - 1) continue;

            // The facet hyperplane in the frame: normal orthogonal to the
            // active directions, oriented against the remaining points.
            RatVec n;
            if (k == 1) {
                n = {Rat(1)};
            } else {
                auto ker = kernel_basis(RatMatrix::from_rows(diffs));
                if (ker.size() != 1) continue;
                n = ker[0];
            }
            Rat c = dot(n, ys[active[0]]);
            bool pos = false;
            for (const auto& y : ys)
                if (dot(n, y) > c) { pos = true; break; }
            if (pos) {
                for (auto& x : n) x = -x;
                c = -c;
            }
            out.insert(detail::canonical_halfspace({std::move(n), std::move(c)}));
        }
        return {out.begin(), out.end()};
    }

    friend RationalPolytope apply_linear(const RationalPolytope&, const RatMatrix&);
    friend std::vector<std::vector<RatVec>> triangulation(const RationalPolytope&);
};

// ============================================================================
// Elementary operations
// ============================================================================

/// Image under an invertible linear map; both representations transform
/// directly, no hull recomputation.
inline RationalPolytope apply_linear(const RationalPolytope& p, const RatMatrix& t) {
    if (t.rows() != p.dim() || t.cols() != p.dim())
        throw std::invalid_argument("apply_linear: shape mismatch");
    auto tinv = inverse(t);
    if (!tinv) throw std::invalid_argument("apply_linear: map not invertible");
    if (p.is_empty()) return RationalPolytope::empty(p.dim());
    RationalPolytope q;
    q.dim_ = p.dim_;
    q.empty_ = false;
    for (const auto& v : p.vertices_) q.vertices_.push_back(t.apply(v));
    std::sort(q.vertices_.begin(), q.vertices_.end());
    RatMatrix tit = tinv->transpose();
    for (const auto& f : p.facets_)
        q.facets_.push_back(detail::canonical_halfspace({tit.apply(f.normal), f.offset}));
    for (const auto& e : p.equations_)
        q.equations_.push_back(detail::canonical_equation({tit.apply(e.normal), e.offset}));
    std::sort(q.facets_.begin(), q.facets_.end());
    std::sort(q.equations_.begin(), q.equations_.end());
    return q;
}

inline RationalPolytope scale(const RationalPolytope& p, const Rat& s) {
    if (s <= 0) throw std::invalid_argument("scale: factor must be positive");
    RatMatrix t(p.dim(), p.dim());
    for (size_t i = 0; i < p.dim(); ++i) t.at(i, i) = s;
    return apply_linear(p, t);
}

/// The straightening map (v_1,...,v_n) -> (v_2,...,v_n, v_1 - v_2 - ... - v_n)
/// as a unimodular matrix.
inline RatMatrix straightening_matrix(size_t n) {
    RatMatrix s(n, n);
    for (size_t i = 0; i + 1 < n; ++i) s.at(i, i + 1) = 1;
    s.at(n - 1, 0) = 1;
    for (size_t j = 1; j < n; ++j) s.at(n - 1, j) = -1;
    return s;
}

inline RationalPolytope straighten(const RationalPolytope& p) {
    return apply_linear(p, straightening_matrix(p.dim()));
}

inline RationalPolytope unstraighten(const RationalPolytope& p) {
    auto inv = inverse(straightening_matrix(p.dim()));
    return apply_linear(p, *inv);
}

inline RationalPolytope intersect(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    if (a.is_empty() || b.is_empty()) return RationalPolytope::empty(a.dim());
    std::vector<Halfspace> hs = a.halfspaces();
    for (const auto& h : b.halfspaces()) hs.push_back(h);
    return RationalPolytope::from_halfspaces(a.dim(), hs);
}

inline RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    if (a.is_empty() || b.is_empty()) return RationalPolytope::empty(a.dim());
    std::vector<RatVec> sums;
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices()) sums.push_back(vec_add(u, v));
    return RationalPolytope::hull(sums);
}

/// Exact shadow after dropping one coordinate.
inline RationalPolytope project_drop(const RationalPolytope& p, size_t coord) {
    if (coord >= p.dim()) throw std::invalid_argument("project_drop: coordinate out of range");
    if (p.dim() < 2) throw std::invalid_argument("project_drop: ambient dimension must be >= 2");
    if (p.is_empty()) return RationalPolytope::empty(p.dim() - 1);
    std::vector<RatVec> proj;
    for (const auto& v : p.vertices()) {
        RatVec w;
        for (size_t i = 0; i < v.size(); ++i)
            if (i != coord) w.push_back(v[i]);
        proj.push_back(std::move(w));
    }
    return RationalPolytope::hull(proj);
}

/// Section by the hyperplane a.x = c, reembedded in dimension dim-1 by
/// eliminating coordinate `drop` (requires a[drop] != 0, which makes the
/// projection along e_drop injective on the hyperplane). Volumes of the
/// result are shadow volumes with respect to that projection.
inline RationalPolytope hyperplane_section_drop(const RationalPolytope& p, const RatVec& a,
                                                const Rat& c, size_t drop) {
    size_t d = p.dim();
    if (a.size() != d || drop >= d) throw std::invalid_argument("hyperplane_section_drop: bad arguments");
    if (d < 2) throw std::invalid_argument("hyperplane_section_drop: ambient dimension must be >= 2");
    if (a[drop] == 0) throw std::invalid_argument("hyperplane_section_drop: a[drop] must be nonzero");
    if (p.is_empty()) return RationalPolytope::empty(d - 1);

    // x_drop = (c - sum_{i != drop} a_i x_i) / a_drop substituted everywhere.
    std::vector<Halfspace> cut;
    for (const auto& h : p.halfspaces()) {
        RatVec n;
        n.reserve(d - 1);
        Rat coef = h.normal[drop] / a[drop];
        for (size_t i = 0; i < d; ++i) {
            if (i == drop) continue;
            n.push_back(h.normal[i] - coef * a[i]);
        }
        cut.push_back({std::move(n), h.offset - coef * c});
    }
    // Degenerate rows (zero normal) are constant constraints.
    std::vector<Halfspace> clean;
    for (auto& h : cut) {
        bool zero = true;
        for (const auto& x : h.normal) zero = zero && x == 0;
        if (zero) {
            if (h.offset < 0) return RationalPolytope::empty(d - 1);
            continue;
        }
        clean.push_back(std::move(h));
    }
    return RationalPolytope::from_halfspaces(d - 1, clean);
}

/// Axis slice p ∩ { x_coord = value }, reembedded by dropping the coordinate.
inline RationalPolytope slice(const RationalPolytope& p, size_t coord, const Rat& value) {
    RatVec a(p.dim(), Rat(0));
    a[coord] = 1;
    return hyperplane_section_drop(p, a, value, coord);
}

// ============================================================================
// Volume
// ============================================================================

/// Simplices (as vertex tuples) of a boundary-cone triangulation. Faces are
/// rebuilt from the parent's inequality list (facets of a face are cut by
/// facets of the parent), which keeps the recursion cheap.
inline std::vector<std::vector<RatVec>> triangulation(const RationalPolytope& p) {
    if (p.is_empty()) return {};
    if (p.affine_dim() == 0) return {{p.vertices_[0]}};
    const RatVec& apex = p.vertices_[0];
    std::vector<Halfspace> hints = p.halfspaces();
    std::vector<std::vector<RatVec>> out;
    for (const auto& f : p.facets_) {
        if (dot(f.normal, apex) == f.offset) continue;
        std::vector<RatVec> on_facet;
        for (const auto& v : p.vertices_)
            if (dot(f.normal, v) == f.offset) on_facet.push_back(v);
        RationalPolytope face = RationalPolytope::assemble(p.dim_, on_facet, &hints);
        for (auto& s : triangulation(face)) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// Euclidean volume in the ambient dimension; 0 when not full-dimensional.
inline Rat volume(const RationalPolytope& p) {
    if (p.is_empty() || p.affine_dim() < static_cast<int>(p.dim())) return Rat(0);
    size_t d = p.dim();
    Rat total(0);
    for (const auto& s : triangulation(p)) {
        RatMatrix m(d, d);
        for (size_t r = 0; r < d; ++r) {
            RatVec e = vec_sub(s[r], s[d]);
            for (size_t c = 0; c < d; ++c) m.at(r, c) = e[c];
        }
        total += rat_abs(determinant(m));
    }
    return total / Rat(factorial(static_cast<long>(d)));
}

/// Coordinate-wise maxima over the vertex set.
inline RatVec widths(const RationalPolytope& p) {
    if (p.is_empty()) throw std::invalid_argument("widths: empty polytope");
    RatVec w(p.vertices()[0]);
    for (const auto& v : p.vertices())
        for (size_t i = 0; i < w.size(); ++i) w[i] = std::max(w[i], v[i]);
    return w;
}

// ============================================================================
// Named shapes
// ============================================================================

/// convex hull(0, t_1 e_1, ..., t_n e_n)
inline RationalPolytope simplex_polytope(const RatVec& t) {
    for (const auto& x : t)
        if (x < 0) throw std::invalid_argument("simplex_polytope: negative parameter");
    std::vector<RatVec> pts;
    pts.emplace_back(t.size(), Rat(0));
    for (size_t i = 0; i < t.size(); ++i) {
        RatVec v(t.size(), Rat(0));
        v[i] = t[i];
        pts.push_back(std::move(v));
    }
    return RationalPolytope::hull(pts);
}

inline RationalPolytope standard_simplex(size_t n, const Rat& t) {
    return simplex_polytope(RatVec(n, t));
}

/// { x >= 0 : x_1 + ... + x_i <= t_i for all i }
inline RationalPolytope gamma_polytope(const RatVec& t) {
    size_t n = t.size();
    std::vector<Halfspace> hs;
    for (size_t i = 0; i < n; ++i) {
        RatVec neg(n, Rat(0));
        neg[i] = -1;
        hs.push_back({std::move(neg), Rat(0)});
        if (t[i] < 0) throw std::invalid_argument("gamma_polytope: negative parameter");
        RatVec part(n, Rat(0));
        for (size_t j = 0; j <= i; ++j) part[j] = 1;
        hs.push_back({std::move(part), t[i]});
    }
    return RationalPolytope::from_halfspaces(n, hs);
}

inline RationalPolytope box_polytope(const RatVec& t) {
    size_t n = t.size();
    std::vector<Halfspace> hs;
    for (size_t i = 0; i < n; ++i) {
        if (t[i] < 0) throw std::invalid_argument("box_polytope: negative parameter");
        RatVec lo(n, Rat(0)), hi(n, Rat(0));
        lo[i] = -1;
        hi[i] = 1;
        hs.push_back({std::move(lo), Rat(0)});
        hs.push_back({std::move(hi), t[i]});
    }
    return RationalPolytope::from_halfspaces(n, hs);
}

/// S^{-1} simplex(t): the simplex with vertices 0, t_n e_1, and
/// t_i (e_1 + e_{i+1}) for i < n.
inline RationalPolytope inverted_simplex(const RatVec& t) {
    return unstraighten(simplex_polytope(t));
}

inline RationalPolytope inverted_gamma(const RatVec& t) {
    return unstraighten(gamma_polytope(t));
}

}  // namespace okb

#endif  // OKBODY_POLYTOPE_HPP
