#include "okbody/bodies.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace okb;

namespace {

FamilySpec spec_n(const std::string& f, long n) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    return s;
}

}  // namespace

TEST_CASE("product of curves") {
    auto r = build_family(spec_n("product-curves", 3));
    CHECK(r.straightened == simplex_polytope(rat_vec({1, 2, 3})));
    CHECK(r.vol == 6);
    CHECK(r.epsilons == rat_vec({1, 2, 3}));
    CHECK(r.mu == 3);
    auto sv = simplicial_check(r);
    CHECK(sv.product_matches);
    CHECK(sv.body_is_simplex == true);
}

TEST_CASE("symmetric powers, projective space, quadrics") {
    for (long n = 1; n <= 4; ++n) {
        auto r = build_family(spec_n("sym-power", n));
        CHECK(r.straightened == standard_simplex(n, Rat(1)));
        CHECK(r.vol == 1);
        CHECK(simplicial_check(r).product_matches);
    }
    auto p = build_family(spec_n("proj-space", 3));
    CHECK(p.straightened == standard_simplex(3, Rat(1)));

    auto q = build_family(spec_n("quadric", 3));
    CHECK(q.straightened == simplex_polytope(rat_vec({1, 1, 2})));
    CHECK(q.vol == 2);
    CHECK(q.mu == 2);
    CHECK(simplicial_check(q).product_matches);
}

TEST_CASE("blow-up of P^n at a point") {
    auto r = build_family([] {
        FamilySpec s;
        s.family = "blowup-pn";
        s.n = 3;
        s.a = 2;
        return s;
    }());
    CHECK(r.straightened == gamma_polytope(rat_vec({1, 2, 2})));
    CHECK(r.vol == 7);  // a^n - 1
    CHECK(r.epsilons == rat_vec({1, 2, 2}));
    auto sv = simplicial_check(r);
    CHECK_FALSE(sv.product_matches);  // 7 != 1*2*2
    CHECK(sv.body_is_simplex == false);

    auto verdicts = verify_bounds(r, true);
    for (const auto& [name, ok] : verdicts) {
        INFO(name);
        CHECK(ok);
    }
    CHECK(verdicts_as_expected(r, verdicts));

    FamilySpec bad;
    bad.family = "blowup-pn";
    bad.n = 2;
    bad.a = 1;
    CHECK_THROWS_AS(build_family(bad), std::invalid_argument);
}

TEST_CASE("blow-up of P^2 through the Zariski machinery") {
    FamilySpec s;
    s.family = "blowup-p2";
    s.u = 3;
    s.v = 1;
    auto r = build_family(s);
    CHECK(r.tilted == RationalPolytope::hull(
                          {rat_vec({0, 0}), rat_vec({7, 0}), rat_vec({3, 2}), rat_vec({1, 1})}));
    CHECK(r.vol == 15);
    CHECK(r.epsilons == rat_vec({1, 7}));
    CHECK(r.mu == 7);
    CHECK_FALSE(r.very_general_point);

    auto verdicts = verify_bounds(r, true);
    CHECK(verdicts.at("simplex_lower"));
    CHECK(verdicts.at("mu_upper"));
    CHECK_FALSE(verdicts.at("borel_fixed"));
    CHECK_FALSE(verdicts.at("gamma_upper"));
    CHECK_FALSE(verdicts.at("widths_equal_epsilons"));
    CHECK(verdicts_as_expected(r, verdicts));
}

TEST_CASE("P^1 x P^1 generic versus special flag") {
    auto g = build_family(spec_n("p1xp1-generic", 0));
    CHECK(g.tilted == RationalPolytope::hull({rat_vec({0, 0}), rat_vec({2, 0}), rat_vec({1, 1})}));
    CHECK(g.straightened == simplex_polytope(rat_vec({1, 2})));
    CHECK(verdicts_as_expected(g, verify_bounds(g, true)));

    auto s = build_family(spec_n("p1xp1-special", 0));
    CHECK(s.straightened == box_polytope(rat_vec({1, 1})));
    auto verdicts = verify_bounds(s, true);
    CHECK_FALSE(verdicts.at("simplex_lower"));  // refined inclusion fails for special flags
    CHECK(verdicts.at("mu_upper"));
    CHECK(verdicts.at("gamma_upper"));
    CHECK(verdicts_as_expected(s, verdicts));

    // vol = prod(eps) yet the body is not the simplex: only legal because
    // the flag is special.
    auto sv = simplicial_check(s);
    CHECK(sv.product_matches);
    CHECK(sv.body_is_simplex == false);
}

TEST_CASE("Jacobian fixtures") {
    auto nh = build_family(spec_n("jacobian-nonhyper", 0));
    CHECK(nh.straightened == simplex_polytope({make_rat(12, 7), make_rat(7, 4), Rat(2)}));
    CHECK(nh.vol == 6);
    CHECK(simplicial_check(nh).product_matches);
    CHECK(verdicts_as_expected(nh, verify_bounds(nh, true)));

    auto h = build_family(spec_n("jacobian-hyper", 0));
    CHECK_FALSE(h.has_bodies);
    CHECK(h.declared_nonsimplicial);
    CHECK_FALSE(simplicial_check(h).product_matches);
    Rat prod_loc(1);
    for (const auto& e : *h.eps_loc) prod_loc *= e;
    CHECK(prod_loc == make_rat(45, 8));  // 45/8 < 6 = vol certifies non-simplicial
    CHECK(prod_loc < h.vol);
    CHECK(verify_bounds(h, true).empty());
}

TEST_CASE("unknown families and bad parameters") {
    CHECK_THROWS_AS(build_family(spec_n("moduli-of-everything", 2)), std::invalid_argument);
    CHECK_THROWS_AS(build_family(spec_n("product-curves", 9)), std::invalid_argument);
    FamilySpec s;
    s.family = "blowup-p2";
    s.u = 1;
    s.v = 2;
    CHECK_THROWS_AS(build_family(s), std::invalid_argument);
}

TEST_CASE("epsilon extraction from tilted bodies") {
    CHECK(epsilons_from_body(inverted_simplex(rat_vec({1, 2, 3}))) == rat_vec({1, 2, 3}));

    SeededRng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 2 + rng.below(3);
        RatVec t(n);
        Rat acc(0);
        for (auto& x : t) {
            acc += Rat(1 + static_cast<long>(rng.below(3)));
            x = acc;
        }
        CHECK(epsilons_from_body(inverted_simplex(t)) == t);
    }

    // Origin outside: reject.
    auto off = RationalPolytope::hull({rat_vec({1, 0}), rat_vec({2, 0}), rat_vec({1, 1})});
    CHECK_THROWS_AS(epsilons_from_body(off), std::invalid_argument);
}

TEST_CASE("curve Seshadri interval") {
    auto nh = build_family(spec_n("jacobian-nonhyper", 0));
    auto iv = curve_seshadri_interval(nh);
    CHECK(iv.lower == 3);  // (12/7)(7/4) = 3 = 6/2: all inequalities collapse
    CHECK(iv.upper == 3);

    auto h = build_family(spec_n("jacobian-hyper", 0));
    auto ivh = curve_seshadri_interval(h, RatVec{make_rat(3, 2), make_rat(15, 8), Rat(2)});
    CHECK(ivh.lower == make_rat(45, 16));
    CHECK(ivh.upper == 3);

    // Simplicial bodies: the interval degenerates to a point.
    for (const char* fam : {"product-curves", "sym-power", "quadric"}) {
        auto r = build_family(spec_n(fam, 3));
        auto i2 = curve_seshadri_interval(r);
        CHECK(i2.lower == i2.upper);
    }
}

TEST_CASE("width functions of the blow-up body") {
    FamilySpec s;
    s.family = "blowup-p2";
    s.u = 3;
    s.v = 1;
    auto r = build_family(s);
    // w_2(t) = t on [0,1], (t+1)/2 on [1,3], (7-t)/2 on [3,7].
    auto samples = width_function(r, 2, {make_rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(5), Rat(7)});
    CHECK(samples[0].second == make_rat(1, 2));
    CHECK(samples[1].second == 1);
    CHECK(samples[2].second == make_rat(3, 2));
    CHECK(samples[3].second == 2);
    CHECK(samples[4].second == 1);
    CHECK(samples[5].second == 0);
}

TEST_CASE("width function of the tilted simplex has the interpolated closed form") {
    // For S^{-1} simplex(1,2): w_2(t) = t on [0,1], then eps*(mu-t)/(mu-eps) = 2-t.
    auto r = build_family(spec_n("product-curves", 2));
    auto samples = width_function(r, 2, {make_rat(1, 2), Rat(1), make_rat(3, 2), Rat(2)});
    CHECK(samples[0].second == make_rat(1, 2));
    CHECK(samples[1].second == 1);
    CHECK(samples[2].second == make_rat(1, 2));
    CHECK(samples[3].second == 0);
}

TEST_CASE("hyperelliptic fixture data rules out a pyramid body") {
    // The declared member (12/13, 0, 12/13) of the straightened body, coned
    // from 2 e_3, meets the alpha_3 = 0 slice at (12/7, 0, 0), which exceeds
    // the declared width w_1 = 3/2. Pure fixture arithmetic, frozen here.
    Rat mu(2);
    RatVec member{make_rat(12, 13), Rat(0), make_rat(12, 13)};
    // Parametrize 2e_3 + s*(member - 2e_3); alpha_3 = 0 at s = 2/(2 - member_3).
    Rat s = mu / (mu - member[2]);
    Rat alpha1 = s * member[0];
    CHECK(alpha1 == make_rat(12, 7));
    CHECK(alpha1 > make_rat(3, 2));

    auto h = build_family(spec_n("jacobian-hyper", 0));
    CHECK(h.epsilons[1] < make_rat(15, 8));  // 24/13 < eps_2^loc
}

TEST_CASE("width functions respect the epsilon thresholds on simplex families") {
    auto r = build_family(spec_n("product-curves", 3));
    for (size_t i = 2; i <= 3; ++i) {
        auto samples = width_function(r, i, {make_rat(1, 2), Rat(1), make_rat(3, 2), Rat(2),
                                             make_rat(5, 2), Rat(3)});
        for (const auto& [t, w] : samples) {
            CHECK(w <= t);
            if (t <= r.epsilons[i - 2]) CHECK(w == t);
            else CHECK(w < t);
        }
    }
    CHECK_THROWS_AS(width_function(r, 2, {Rat(4)}), std::invalid_argument);
    CHECK_THROWS_AS(width_function(r, 1, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("body extraction coherence across families") {
    std::vector<FamilySpec> specs;
    for (long n = 2; n <= 4; ++n) {
        specs.push_back(spec_n("product-curves", n));
        specs.push_back(spec_n("sym-power", n));
        specs.push_back(spec_n("quadric", n));
    }
    for (auto [np, ap] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {3, 3}}) {
        FamilySpec s;
        s.family = "blowup-pn";
        s.n = np;
        s.a = ap;
        specs.push_back(s);
    }
    specs.push_back(spec_n("jacobian-nonhyper", 0));
    specs.push_back(spec_n("p1xp1-generic", 0));

    for (const auto& s : specs) {
        auto r = build_family(s);
        INFO(r.family << " n=" << r.n);
        CHECK(straighten(r.tilted) == r.straightened);
        CHECK(volume(r.tilted) * Rat(factorial(static_cast<long>(r.n))) == r.vol);
        for (size_t i = 0; i + 1 < r.n; ++i) CHECK(r.epsilons[i] <= r.epsilons[i + 1]);
        for (const auto& e : r.epsilons) CHECK(e > 0);
        auto verdicts = verify_bounds(r, true);
        CHECK(verdicts_as_expected(r, verdicts));
        CHECK(verdicts.at("simplex_lower"));
    }
}
