#include "okbody/polytope.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace okb;

namespace {

std::vector<RatVec> pts(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<RatVec> out;
    for (auto& r : rows) out.push_back(rat_vec(r));
    return out;
}

RationalPolytope random_hull(SeededRng& rng, size_t dim, int npts, long lo, long hi) {
    std::vector<RatVec> ps;
    for (int i = 0; i < npts; ++i) {
        RatVec v(dim);
        for (auto& x : v) x = rng.int_in(lo, hi);
        ps.push_back(std::move(v));
    }
    return RationalPolytope::hull(ps);
}

}  // namespace

TEST_CASE("hull of a triangle") {
    auto p = RationalPolytope::hull(pts({{0, 0}, {2, 0}, {1, 1}}));
    CHECK(p.vertices().size() == 3);
    CHECK(p.facets().size() == 3);
    CHECK(p.equations().empty());
    CHECK(p.affine_dim() == 2);
    CHECK(p.contains(rat_vec({1, 0})));
    CHECK_FALSE(p.contains(rat_vec({1, 2})));
}

TEST_CASE("hull collapses interior and duplicate points") {
    auto inside = RatVec{Rat(1), make_rat(1, 2)};
    auto ps = pts({{0, 0}, {2, 0}, {1, 1}, {1, 0}, {1, 0}});
    ps.push_back(inside);
    CHECK(RationalPolytope::hull(ps) == RationalPolytope::hull(pts({{0, 0}, {2, 0}, {1, 1}})));
}

TEST_CASE("hull of a single point") {
    auto p = RationalPolytope::hull({rat_vec({3, -1, 2})});
    CHECK(p.affine_dim() == 0);
    CHECK(p.contains(rat_vec({3, -1, 2})));
    CHECK_FALSE(p.contains(rat_vec({3, -1, 1})));
    CHECK(volume(p) == 0);
}

TEST_CASE("hull of the Gamma(1,2) lattice points equals gamma_polytope(1,2)") {
    // Brute-force oracle: all five lattice points satisfy the four candidate
    // facets x>=0, y>=0, x<=1, x+y<=2, and each facet is met with equality by
    // two affinely independent points, so the H-rep below is exactly Gamma(1,2).
    auto p = RationalPolytope::hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}));
    auto g = gamma_polytope(rat_vec({1, 2}));
    CHECK(p == g);
    CHECK(p.facets().size() == 4);
    for (const auto& v : p.vertices()) CHECK(g.contains(v));
}

TEST_CASE("volume of standard simplices is t^n/n!") {
    for (size_t n = 1; n <= 4; ++n) {
        Rat t = make_rat(3, 2);
        Rat expect = 1;
        for (size_t i = 0; i < n; ++i) expect *= t;
        expect /= Rat(factorial(static_cast<long>(n)));
        CHECK(volume(standard_simplex(n, t)) == expect);
    }
}

TEST_CASE("volume of Gamma(1,2) is 3/2") {
    CHECK(volume(gamma_polytope(rat_vec({1, 2}))) == make_rat(3, 2));
}

TEST_CASE("volume of the Bl_pP2 body at u=3,v=1 is 15/2") {
    auto p = RationalPolytope::hull(pts({{0, 0}, {7, 0}, {3, 2}, {1, 1}}));
    CHECK(volume(p) == make_rat(15, 2));
}

TEST_CASE("axis slices") {
    auto s12 = simplex_polytope(rat_vec({1, 2}));
    auto seg = slice(s12, 0, Rat(0));
    CHECK(seg.vertices() == std::vector<RatVec>{{Rat(0)}, {Rat(2)}});

    // Tilted triangle at nu_1 = 1: edges y=0 and y=x (then y=2-x) give {1}x[0,1].
    auto tri = RationalPolytope::hull(pts({{0, 0}, {2, 0}, {1, 1}}));
    auto sec = slice(tri, 0, Rat(1));
    CHECK(sec.vertices() == std::vector<RatVec>{{Rat(0)}, {Rat(1)}});

    CHECK(slice(tri, 0, Rat(5)).is_empty());
    CHECK(slice(tri, 0, Rat(-1)).is_empty());
}

TEST_CASE("projections") {
    auto cube = box_polytope(rat_vec({1, 1, 1}));
    CHECK(project_drop(cube, 2) == box_polytope(rat_vec({1, 1})));
    CHECK(project_drop(simplex_polytope(rat_vec({1, 2, 3})), 2) ==
          simplex_polytope(rat_vec({1, 2})));

    SeededRng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_hull(rng, 3, 8, -4, 4);
        size_t drop = rng.below(3);
        auto sh = project_drop(p, drop);
        for (const auto& v : p.vertices()) {
            RatVec w;
            for (size_t i = 0; i < 3; ++i)
                if (i != drop) w.push_back(v[i]);
            CHECK(sh.contains(w));
        }
    }
}

TEST_CASE("minkowski sums") {
    auto tri = RationalPolytope::hull(pts({{0, 0}, {2, 0}, {1, 1}}));
    CHECK(minkowski_sum(tri, RationalPolytope::hull(pts({{0, 0}}))) == tri);

    auto seg_x = RationalPolytope::hull(pts({{0, 0}, {1, 0}}));
    auto seg_y = RationalPolytope::hull(pts({{0, 0}, {0, 1}}));
    CHECK(minkowski_sum(seg_x, seg_y) == box_polytope(rat_vec({1, 1})));

    CHECK(minkowski_sum(standard_simplex(2, Rat(1)), standard_simplex(2, Rat(1))) ==
          standard_simplex(2, Rat(2)));
}

TEST_CASE("straightening maps the tilted triangle to simplex(1,2)") {
    auto tri = RationalPolytope::hull(pts({{0, 0}, {2, 0}, {1, 1}}));
    CHECK(straighten(tri) == simplex_polytope(rat_vec({1, 2})));
    CHECK(unstraighten(straighten(tri)) == tri);
}

TEST_CASE("straighten/unstraighten are mutually inverse and volume preserving") {
    SeededRng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        size_t dim = 2 + rng.below(2);
        auto p = random_hull(rng, dim, 6, 0, 5);
        auto s = straighten(p);
        CHECK(unstraighten(s) == p);
        CHECK(volume(s) == volume(p));
    }
}

TEST_CASE("inverted simplex has the slanted vertex set") {
    // S^{-1} simplex(t1..tn) = hull{0, t_n e_1, t_i (e_1 + e_{i+1})}.
    RatVec t = rat_vec({1, 2, 3});
    auto inv = inverted_simplex(t);
    auto expect = RationalPolytope::hull(pts({{0, 0, 0}, {3, 0, 0}, {1, 1, 0}, {2, 0, 2}}));
    CHECK(inv == expect);
    CHECK(straighten(inv) == simplex_polytope(t));
}

TEST_CASE("inverted gamma matches its halfspace description") {
    // S^{-1} Gamma(t): v2+...+vn <= v1 <= t_n and v2+...+v_{i+1} <= t_i.
    RatVec t = rat_vec({1, 2, 3});
    auto ig = inverted_gamma(t);
    std::vector<Halfspace> hs;
    hs.push_back({rat_vec({1, 0, 0}), Rat(3)});
    hs.push_back({rat_vec({-1, 1, 1}), Rat(0)});
    hs.push_back({rat_vec({0, 1, 0}), Rat(1)});
    hs.push_back({rat_vec({0, 1, 1}), Rat(2)});
    hs.push_back({rat_vec({0, -1, 0}), Rat(0)});
    hs.push_back({rat_vec({0, 0, -1}), Rat(0)});
    CHECK(ig == RationalPolytope::from_halfspaces(3, hs));
    CHECK(straighten(ig) == gamma_polytope(t));
}

TEST_CASE("simplex equals gamma exactly for equal parameters") {
    for (size_t n = 1; n <= 4; ++n) {
        RatVec t(n, make_rat(5, 2));
        CHECK(simplex_polytope(t) == gamma_polytope(t));
    }
}

TEST_CASE("simplex(t') fits in gamma(t) iff t' <= t coordinatewise") {
    SeededRng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 2 + rng.below(2);
        RatVec t(n), tp(n);
        Rat acc(0), accp(0);
        for (size_t i = 0; i < n; ++i) {
            acc += Rat(rng.int_in(0, 3));
            accp += Rat(rng.int_in(0, 3));
            t[i] = acc;
            tp[i] = accp;
        }
        bool dominated = true;
        for (size_t i = 0; i < n; ++i) dominated = dominated && tp[i] <= t[i];
        CHECK(gamma_polytope(t).contains(simplex_polytope(tp)) == dominated);
    }
}

TEST_CASE("gamma is contained in the box of the same parameters") {
    RatVec t = rat_vec({1, 2, 4});
    CHECK(box_polytope(t).contains(gamma_polytope(t)));
}

TEST_CASE("V-rep to H-rep round trip is the identity") {
    SeededRng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        size_t dim = 1 + rng.below(3);
        auto p = random_hull(rng, dim, 7, -3, 3);
        CHECK(RationalPolytope::from_halfspaces(dim, p.halfspaces()) == p);
    }
}

TEST_CASE("vertices satisfy the facets; outward bumps do not") {
    SeededRng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        size_t dim = 2 + rng.below(2);
        auto p = random_hull(rng, dim, 6, -3, 3);
        for (const auto& v : p.vertices()) CHECK(p.contains(v));
        if (p.affine_dim() < static_cast<int>(dim)) continue;
        for (const auto& f : p.facets()) {
            const RatVec* on = nullptr;
            for (const auto& v : p.vertices())
                if (dot(f.normal, v) == f.offset) { on = &v; break; }
            REQUIRE(on != nullptr);
            RatVec bumped = vec_add(*on, vec_scale(make_rat(1, 1000), f.normal));
            CHECK_FALSE(p.contains(bumped));
        }
    }
}

namespace {

// Independent membership oracle: q is in the hull of S iff it lies in some
// simplex on affinely independent points of S (barycentric coordinates
// solved exactly).
bool in_hull_caratheodory(const std::vector<RatVec>& s, const RatVec& q) {
    size_t d = q.size();
    std::vector<size_t> pick(d + 1);
    bool found = false;
    auto simplex_test = [&]() {
        RatMatrix m(d + 1, d + 1);
        RatVec rhs(d + 1, Rat(1));
        for (size_t c = 0; c <= d; ++c) {
            for (size_t r = 0; r < d; ++r) m.at(r, c) = s[pick[c]][r];
            m.at(d, c) = 1;
        }
        for (size_t r = 0; r < d; ++r) rhs[r] = q[r];
        auto lambda = solve(m, rhs);
        if (!lambda) return false;
        for (const auto& l : *lambda)
            if (l < 0) return false;
        return true;
    };
    auto rec = [&](auto&& self, size_t from, size_t got) -> void {
        if (found) return;
        if (got == d + 1) {
            if (simplex_test()) found = true;
            return;
        }
        for (size_t i = from; i + (d + 1 - got) <= s.size(); ++i) {
            pick[got] = i;
            self(self, i + 1, got + 1);
        }
    };
    rec(rec, 0, 0);
    return found;
}

}  // namespace

TEST_CASE("membership agrees with the Caratheodory oracle") {
    SeededRng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        size_t dim = 2 + rng.below(2);
        std::vector<RatVec> ps;
        for (int i = 0; i < 6; ++i) {
            RatVec v(dim);
            for (auto& x : v) x = rng.int_in(-3, 3);
            ps.push_back(v);
        }
        auto hull = RationalPolytope::hull(ps);
        for (int k = 0; k < 8; ++k) {
            RatVec q(dim);
            for (auto& x : q) x = make_rat(rng.int_in(-6, 6), 2);
            CHECK(hull.contains(q) == in_hull_caratheodory(ps, q));
        }
    }
}

TEST_CASE("polygon areas agree with the shoelace formula") {
    SeededRng rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RatVec> ps;
        for (int i = 0; i < 7; ++i)
            ps.push_back({Rat(rng.int_in(-5, 5)), Rat(rng.int_in(-5, 5))});
        auto p = RationalPolytope::hull(ps);
        if (p.affine_dim() < 2) continue;
        // Order the hull vertices by angle around the centroid, then shoelace.
        auto verts = p.vertices();
        RatVec c(2, Rat(0));
        for (const auto& v : verts) c = vec_add(c, v);
        c = vec_scale(Rat(1) / Rat(static_cast<long>(verts.size())), c);
        std::sort(verts.begin(), verts.end(), [&](const RatVec& a, const RatVec& b) {
            auto upper = [&](const RatVec& x) {
                return x[1] > c[1] || (x[1] == c[1] && x[0] >= c[0]);
            };
            if (upper(a) != upper(b)) return upper(a);
            return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
        });
        Rat twice(0);
        for (size_t i = 0; i < verts.size(); ++i) {
            const RatVec& a = verts[i];
            const RatVec& b = verts[(i + 1) % verts.size()];
            twice += a[0] * b[1] - a[1] * b[0];
        }
        CHECK(volume(p) == rat_abs(twice) / 2);
    }
}

TEST_CASE("polygon slices agree with the edge-intersection oracle") {
    SeededRng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RatVec> ps;
        for (int i = 0; i < 6; ++i)
            ps.push_back({Rat(rng.int_in(0, 6)), Rat(rng.int_in(0, 6))});
        auto p = RationalPolytope::hull(ps);
        if (p.affine_dim() < 2) continue;
        Rat cut = make_rat(rng.int_in(0, 12), 2);

        // Oracle: intersect every segment between hull vertices with x = cut.
        std::optional<Rat> lo, hi;
        auto extend = [&](const Rat& y) {
            if (!lo || y < *lo) lo = y;
            if (!hi || y > *hi) hi = y;
        };
        const auto& verts = p.vertices();
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) {
                const RatVec& a = verts[i];
                const RatVec& b = verts[j];
                if (a[0] == b[0]) {
                    if (a[0] == cut) {
                        extend(a[1]);
                        extend(b[1]);
                    }
                    continue;
                }
                Rat s = (cut - a[0]) / (b[0] - a[0]);
                if (s < 0 || s > 1) continue;
                extend(a[1] + s * (b[1] - a[1]));
            }

        auto sec = slice(p, 0, cut);
        if (!lo) {
            CHECK(sec.is_empty());
        } else {
            REQUIRE_FALSE(sec.is_empty());
            CHECK(sec.contains({*lo}));
            CHECK(sec.contains({*hi}));
            CHECK(widths(sec)[0] == *hi);
            CHECK_FALSE(sec.contains({*lo - 1}));
            CHECK_FALSE(sec.contains({*hi + 1}));
        }
    }
}

TEST_CASE("hull of a union dominates both volumes") {
    SeededRng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        auto p = random_hull(rng, 2, 6, -4, 4);
        auto q = random_hull(rng, 2, 6, -4, 4);
        std::vector<RatVec> all(p.vertices());
        for (const auto& v : q.vertices()) all.push_back(v);
        Rat vu = volume(RationalPolytope::hull(all));
        CHECK(vu >= volume(p));
        CHECK(vu >= volume(q));
    }
}

TEST_CASE("degenerate polytopes keep vertex data and volume zero") {
    auto seg = RationalPolytope::hull(pts({{0, 0, 0}, {1, 1, 1}}));
    CHECK(seg.affine_dim() == 1);
    CHECK(volume(seg) == 0);
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.contains(rat_vec({0, 0, 0})));
    CHECK(seg.contains(RatVec(3, make_rat(1, 2))));
    CHECK_FALSE(seg.contains(rat_vec({0, 0, 1})));
}

TEST_CASE("intersection via halfspaces") {
    auto a = box_polytope(rat_vec({2, 2}));
    auto b = RationalPolytope::hull(pts({{1, 1}, {3, 1}, {1, 3}, {3, 3}}));
    auto c = intersect(a, b);
    CHECK(c == RationalPolytope::hull(pts({{1, 1}, {2, 1}, {1, 2}, {2, 2}})));
    CHECK(intersect(a, RationalPolytope::hull(pts({{5, 5}, {6, 6}}))).is_empty());
}

TEST_CASE("empty polytope is a first-class value") {
    auto e = RationalPolytope::empty(3);
    CHECK(e.is_empty());
    CHECK(volume(e) == 0);
    CHECK_FALSE(e.contains(rat_vec({0, 0, 0})));
    CHECK_THROWS_AS(widths(e), std::invalid_argument);
}

TEST_CASE("dimension guards") {
    CHECK_THROWS_AS(RationalPolytope::hull({RatVec(7, Rat(0))}), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolytope::hull(pts({{0, 0}, {0}})), std::invalid_argument);
    CHECK_THROWS_AS(minkowski_sum(box_polytope(rat_vec({1})), box_polytope(rat_vec({1, 1}))),
                    std::invalid_argument);
    CHECK_THROWS_AS(simplex_polytope(rat_vec({-1, 2})), std::invalid_argument);
}

TEST_CASE("widths are coordinatewise maxima") {
    auto p = RationalPolytope::hull(pts({{0, 0}, {2, 0}, {1, 1}}));
    CHECK(widths(p) == rat_vec({2, 1}));
}

TEST_CASE("box volume in dimension 6") {
    RatVec t(6, Rat(2));
    CHECK(volume(box_polytope(t)) == Rat(64));
    CHECK(volume(standard_simplex(6, Rat(1))) == Rat(1) / Rat(factorial(6)));
}
