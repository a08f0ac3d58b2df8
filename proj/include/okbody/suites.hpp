// Seeded property batteries behind the `verify` command: machine-checkable
// versions of the library's standing invariants, with counterexample
// payloads on failure. All sampling is deterministic in the given seed.

#ifndef OKBODY_SUITES_HPP
#define OKBODY_SUITES_HPP

#include "okbody/bodies.hpp"
#include "okbody/borel.hpp"
#include "okbody/flagval.hpp"
#include "okbody/surface.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace okb {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;  // counterexample payload on failure
};

namespace suites_detail {

struct Runner {
    std::string suite;
    std::vector<PropertyResult>& out;

    void operator()(const std::string& name, const std::function<std::string()>& body) const {
        PropertyResult r{suite, name, false, ""};
        try {
            r.detail = body();  // empty string means pass
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
};

inline std::string vec_str(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rat_to_string(v[i]);
    return s + ")";
}

inline std::string exp_str(const ExpVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline DiscreteSet random_closure(SeededRng& rng, size_t k, long maxcoord) {
    std::vector<ExpVec> gens;
    int ngens = 1 + static_cast<int>(rng.below(2));
    for (int g = 0; g < ngens; ++g) {
        ExpVec v(k);
        for (auto& e : v) e = static_cast<long>(rng.below(maxcoord + 1));
        gens.push_back(v);
    }
    return borel_closure(gens);
}

/// Enumeration-based decomposition finder used only to cross-check the
/// iterative algorithm; kept deliberately naive.
inline std::vector<ZariskiResult> zariski_by_enumeration(const SurfaceModel& m, const RatVec& d) {
    size_t k = m.curves.size();
    RatVec inter = m.gram.apply(d);
    std::vector<ZariskiResult> valid;
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::vector<size_t> sup;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) sup.push_back(i);
        RatVec mult;
        if (!sup.empty()) {
            auto a = detail::support_multiplicities(m.gram, sup, inter);
            if (!a) continue;
            mult = *a;
            bool pos = true;
            for (const auto& x : mult) pos = pos && x > 0;
            if (!pos || !detail::negative_definite(m.gram, sup)) continue;
        }
        RatVec p(d);
        for (size_t i = 0; i < sup.size(); ++i) p[sup[i]] -= mult[i];
        RatVec pdot = m.gram.apply(p);
        bool nef = true;
        for (size_t j = 0; j < k; ++j) nef = nef && pdot[j] >= 0;
        if (!nef) continue;
        ZariskiResult z;
        z.positive = p;
        for (size_t i = 0; i < sup.size(); ++i) z.negative[sup[i]] = mult[i];
        valid.push_back(std::move(z));
    }
    return valid;
}

inline SurfaceModel random_model(SeededRng& rng, size_t k) {
    SurfaceModel m;
    for (size_t i = 0; i < k; ++i) m.curves.push_back("C" + std::to_string(i));
    m.exceptional = 0;
    m.gram = RatMatrix(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            long v = rng.below(10) < 4 ? rng.int_in(1, 2) : 0;
            m.gram.at(i, j) = v;
            m.gram.at(j, i) = v;
        }
    for (size_t i = 0; i < k; ++i) {
        Rat rowsum(0);
        for (size_t j = 0; j < k; ++j)
            if (j != i) rowsum += m.gram.at(i, j);
        long extra = rng.int_in(0, 2);
        switch (rng.below(3)) {
            case 0: m.gram.at(i, i) = -(rowsum + 1 + extra); break;
            case 1: m.gram.at(i, i) = -std::max(Rat(1), Rat(rowsum - extra)); break;
            default: m.gram.at(i, i) = -(1 + extra); break;
        }
    }
    m.pullback = RatVec(k, Rat(0));
    return m;
}

}  // namespace suites_detail

inline void run_borel_suite(std::uint64_t seed, std::vector<PropertyResult>& out) {
    using namespace suites_detail;
    Runner run{"borel", out};

    run("closure_is_borel_fixed", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 1));
        for (int i = 0; i < 200; ++i) {
            auto c = random_closure(rng, 1 + rng.below(3), 4);
            if (auto w = borel_set_counterexample(c))
                return "closure not Borel at " + exp_str(w->point) + " move " +
                       std::to_string(w->move_index + 1);
        }
        return "";
    });

    run("widths_attained_on_axes", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 2));
        for (int i = 0; i < 200; ++i) {
            size_t k = 1 + rng.below(3);
            auto s = random_closure(rng, k, 4);
            auto w = widths(s);
            for (size_t c = 0; c < k; ++c) {
                ExpVec axis(k, 0);
                axis[c] = w[c];
                if (!s.points.count(axis))
                    return "w_" + std::to_string(c + 1) + "=" + std::to_string(w[c]) +
                           " not attained on the axis";
                if (c + 1 < k && w[c] > w[c + 1]) return "widths not nondecreasing";
            }
        }
        return "";
    });

    run("counting_bounds", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 3));
        for (int i = 0; i < 200; ++i) {
            auto s = random_closure(rng, 1 + rng.below(3), 4);
            counting_bounds(s);  // throws with the violation inside
        }
        return "";
    });

    run("shape_bounds_inclusions", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 4));
        for (int i = 0; i < 50; ++i) {
            size_t k = 2 + rng.below(2);
            auto sb = shape_bounds(hull_of(random_closure(rng, k, k == 2 ? 4 : 3)));
            if (!sb.lower_included) return "simplex(w) not inside the body";
            if (!sb.upper_included) return "body not inside gamma(w)";
            if (!sb.volume_bounds_hold) return "volume bounds violated";
        }
        return "";
    });

    run("slice_volume_monotone", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 5));
        for (int i = 0; i < 25; ++i) {
            size_t k = 2 + rng.below(2);
            auto p = hull_of(random_closure(rng, k, 3));
            RatVec w = widths(p);
            if (w[k - 1] == 0) continue;
            std::vector<Rat> ts;
            for (int j = 0; j <= 4; ++j)
                ts.push_back(w[k - 2] + (w[k - 1] - w[k - 2]) * make_rat(j, 5));
            slice_volume_profile(p, ts);  // throws on violation
        }
        return "";
    });

    run("non_borel_witness_rejected", [&]() -> std::string {
        std::vector<RatVec> ps = simplex_polytope(rat_vec({1, 2, 3})).vertices();
        ps.push_back(rat_vec({1, 1, 1}));
        auto p = RationalPolytope::hull(ps);
        if (is_borel_fixed_body(p)) return "hull(simplex(1,2,3) u {(1,1,1)}) accepted";
        if (p.contains(rat_vec({1, 0, 2}))) return "(1,0,2) unexpectedly inside";
        return "";
    });
}

inline void run_flagval_suite(std::uint64_t seed, std::vector<PropertyResult>& out) {
    using namespace suites_detail;
    Runner run{"flagval", out};

    run("generic_sets_borel_and_sized", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 11));
        for (int i = 0; i < 25; ++i) {
            size_t n = 2 + rng.below(3);
            long d = 1 + static_cast<long>(rng.below(4));
            size_t maxdim = monomials_of_degree(n, d).size();
            size_t dim = 1 + rng.below(std::min<size_t>(maxdim, 6));
            auto v = random_form_space(n, d, dim, rng.next_u64(), 5);
            auto [s, cert] = generic_valuative_set(v, rng.next_u64());
            if (s.points.size() != dim)
                return "cardinality " + std::to_string(s.points.size()) + " != dim " +
                       std::to_string(dim);
            if (!cert.borel_fixed) return "certificate not Borel-fixed";
        }
        return "";
    });

    run("hand_case_x1sq_x1x2", [&]() -> std::string {
        auto v = form_space_from_generators(
            3, 2, {monomial_form({2, 0, 0}), monomial_form({1, 1, 0})});
        auto expected = make_discrete_set(3, {{0, 0, 2}, {0, 1, 1}});
        for (std::uint64_t s : {seed, seed + 1, seed + 2}) {
            auto [got, cert] = generic_valuative_set(v, s);
            if (!(got == expected)) return "set mismatch under master seed " + std::to_string(s);
        }
        return "";
    });

    run("valuation_multiplicative", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 12));
        for (int i = 0; i < 50; ++i) {
            size_t n = 2 + rng.below(2);
            Form f, h;
            for (const auto& e : monomials_of_degree(n, 1 + rng.below(2)))
                form_add_term(f, e, Rat(rng.int_in(-3, 3)));
            for (const auto& e : monomials_of_degree(n, 1 + rng.below(2)))
                form_add_term(h, e, Rat(rng.int_in(-3, 3)));
            if (f.empty() || h.empty()) continue;
            FlagChart chart = FlagChart::random(n, rng.next_u64());
            ExpVec sum = valuative_vector(f, chart);
            ExpVec vh = valuative_vector(h, chart);
            for (size_t j = 0; j < sum.size(); ++j) sum[j] += vh[j];
            if (valuative_vector(form_mul(f, h), chart) != sum)
                return "v(fh) != v(f)+v(h) at trial " + std::to_string(i);
        }
        return "";
    });

    run("nobody_hulls_nested", [&]() -> std::string {
        GradedValuativeSystem sys{Rat(1), {}};
        for (long m = 1; m <= 3; ++m) sys.add(m, complete_system(3, m));
        auto approx = nobody_approximation(sys, derive_seed(seed, 13));
        if (!(approx.union_hull == standard_simplex(2, Rat(1))))
            return "complete-system union hull is not the standard simplex";
        return "";
    });

    run("partial_jets_of_complete_systems", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 15));
        for (size_t n = 2; n <= 4; ++n)
            for (long d = 1; d <= 3; ++d)
                for (size_t i = 1; i <= n; ++i)
                    if (!partial_jet_separates(complete_system(n, d), i, rng.next_u64()))
                        return "complete system failed partial jet separation at n=" +
                               std::to_string(n) + " d=" + std::to_string(d) +
                               " i=" + std::to_string(i);
        // Multiples of one coordinate miss a generic line by codimension 1.
        std::vector<Form> gens;
        for (const auto& e : monomials_of_degree(3, 1)) {
            ExpVec shifted(e);
            shifted[0] += 1;
            gens.push_back(monomial_form(shifted));
        }
        auto w = form_space_from_generators(3, 2, gens);
        if (partial_jet_separates(w, 2, rng.next_u64()))
            return "x1-multiples unexpectedly separate on a generic line";
        return "";
    });

    run("derivative_realizes_last_move", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 14));
        for (int i = 0; i < 50; ++i) {
            size_t n = 2 + rng.below(2);
            long d = 1 + static_cast<long>(rng.below(3));
            Form f;
            for (const auto& e : monomials_of_degree(n, d))
                form_add_term(f, e, Rat(rng.int_in(-4, 4)));
            if (f.empty()) continue;
            FlagChart chart = FlagChart::random(n, rng.next_u64());
            ExpVec v = valuative_vector(f, chart);
            if (v[n - 1] < 1) continue;
            Form df = jet_derivative(f, n - 1);
            if (df.empty()) continue;
            ExpVec expect(v);
            expect[n - 1] -= 1;
            if (valuative_vector(df, chart) != expect)
                return "derivative moved " + exp_str(v) + " to " +
                       exp_str(valuative_vector(df, chart));
        }
        return "";
    });
}

inline void run_surfzar_suite(std::uint64_t seed, std::vector<PropertyResult>& out) {
    using namespace suites_detail;
    Runner run{"surfzar", out};

    run("iterative_equals_enumeration", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 21));
        for (int i = 0; i < 60; ++i) {
            size_t k = 1 + rng.below(8);
            SurfaceModel m = random_model(rng, k);
            RatVec d(k);
            for (auto& x : d) x = rng.int_in(-4, 8);
            auto all = zariski_by_enumeration(m, d);
            if (all.size() > 1) return "enumeration found two decompositions";
            try {
                auto z = zariski_decompose(m, d);
                if (all.empty()) return "iterative succeeded where enumeration failed";
                if (!(z.positive == all[0].positive) || z.negative != all[0].negative)
                    return "iterative result differs from enumeration at trial " +
                           std::to_string(i);
            } catch (const NoDecomposition&) {
                if (!all.empty()) return "iterative failed where enumeration succeeded";
            }
        }
        return "";
    });

    run("positive_part_orthogonal_and_definite", [&]() -> std::string {
        auto m = blowup_p2_model(Rat(3), Rat(1));
        SeededRng rng(derive_seed(seed, 22));
        for (int i = 0; i < 20; ++i) {
            Rat t = make_rat(rng.int_in(0, 14), 2);
            auto z = zariski_decompose(m, ray_class(m, t));  // validates internally
            RatVec pdot = m.gram.apply(z.positive);
            for (const auto& [c, a] : z.negative)
                if (pdot[c] != 0) return "P not orthogonal to its support";
        }
        return "";
    });

    run("blowup_profile_breakpoints", [&]() -> std::string {
        auto ne = negative_part_on_E(blowup_p2_model(Rat(3), Rat(1)));
        if (ne.mu != 7) return "mu = " + rat_to_string(ne.mu);
        auto bs = ne.breakpoints();
        if (bs != std::vector<Rat>{Rat(1), Rat(3), Rat(7)}) return "breakpoints off";
        if (ne.at(Rat(2)) != make_rat(1, 2)) return "N.E at t=2 is " + rat_to_string(ne.at(Rat(2)));
        return "";
    });

    run("body_area_equals_declared_volume", [&]() -> std::string {
        SeededRng rng(derive_seed(seed, 23));
        for (int i = 0; i < 6; ++i) {
            Rat v(1 + static_cast<long>(rng.below(3)));
            Rat u = v + Rat(static_cast<long>(rng.below(3)));
            surface_inobody(blowup_p2_model(u, v));  // throws on area mismatch
        }
        return "";
    });
}

inline void run_bodies_suite(std::uint64_t seed, std::vector<PropertyResult>& out) {
    using namespace suites_detail;
    Runner run{"bodies", out};
    (void)seed;

    auto all_specs = []() {
        std::vector<FamilySpec> specs;
        for (long n = 2; n <= 4; ++n) {
            for (const char* f : {"product-curves", "sym-power", "quadric", "proj-space"}) {
                FamilySpec s;
                s.family = f;
                s.n = n;
                specs.push_back(s);
            }
        }
        for (auto [np, ap] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {3, 3}}) {
            FamilySpec s;
            s.family = "blowup-pn";
            s.n = np;
            s.a = ap;
            specs.push_back(s);
        }
        for (auto [u, v] : std::vector<std::pair<long, long>>{{3, 1}, {2, 1}, {1, 1}}) {
            FamilySpec s;
            s.family = "blowup-p2";
            s.u = u;
            s.v = v;
            specs.push_back(s);
        }
        for (const char* f : {"p1xp1-generic", "p1xp1-special", "jacobian-nonhyper",
                              "jacobian-hyper"}) {
            FamilySpec s;
            s.family = f;
            specs.push_back(s);
        }
        return specs;
    }();

    run("family_verdicts_as_expected", [&]() -> std::string {
        for (const auto& s : all_specs) {
            auto r = build_family(s);
            auto verdicts = verify_bounds(r, true);
            if (!verdicts_as_expected(r, verdicts)) {
                std::string bad;
                for (const auto& [k, v] : verdicts) bad += k + "=" + (v ? "1" : "0") + " ";
                return r.family + ": " + bad;
            }
        }
        return "";
    });

    run("simplicial_criterion_coherent", [&]() -> std::string {
        for (const auto& s : all_specs) {
            auto r = build_family(s);
            auto sv = simplicial_check(r);  // throws when incoherent on generic flags
            if (r.family == "jacobian-hyper" && sv.product_matches)
                return "hyperelliptic fixture claimed simplicial";
        }
        return "";
    });

    run("seshadri_intervals_ordered", [&]() -> std::string {
        for (const auto& s : all_specs) {
            auto r = build_family(s);
            auto iv = curve_seshadri_interval(r);
            if (iv.lower > iv.upper) return r.family + ": interval inverted";
            auto sv = simplicial_check(r);
            if (r.has_bodies && sv.product_matches && r.generic_flag && iv.lower != iv.upper)
                return r.family + ": simplicial interval did not collapse";
        }
        return "";
    });

    run("width_functions_contract", [&]() -> std::string {
        for (const auto& s : all_specs) {
            auto r = build_family(s);
            if (!r.has_bodies) continue;
            std::vector<Rat> ts;
            for (int j = 0; j <= 6; ++j) ts.push_back(r.mu * make_rat(j, 6));
            for (size_t i = 2; i <= r.n; ++i) width_function(r, i, ts);  // throws on violation
        }
        return "";
    });
}

inline std::vector<PropertyResult> run_verification(const std::string& suite, std::uint64_t seed) {
    std::vector<PropertyResult> out;
    bool all = suite == "all";
    if (all || suite == "borel") run_borel_suite(seed, out);
    if (all || suite == "flagval") run_flagval_suite(seed, out);
    if (all || suite == "surfzar") run_surfzar_suite(seed, out);
    if (all || suite == "bodies") run_bodies_suite(seed, out);
    if (out.empty()) throw std::invalid_argument("run_verification: unknown suite '" + suite + "'");
    return out;
}

}  // namespace okb

#endif  // OKBODY_SUITES_HPP
