// Flag valuations of homogeneous forms on P^{n-1}.
//
// A complete linear flag is encoded by an invertible chart g acting through
// the substitution x = g^T z (unit lower triangular charts stabilize no
// coordinate flag, which is what genericity needs). The homogenized
// valuation vector of a nonzero form is the exponent of the lex-smallest
// monomial of the substituted form; the valuative set of a linear system is
// the pivot-column set of its coefficient matrix row-reduced scanning
// columns in ascending lex order. For a generic chart that set is
// independent of the chart and Borel-fixed after dehomogenizing; genericity
// over Q is certified by agreement across independently seeded charts.

#ifndef OKBODY_FLAGVAL_HPP
#define OKBODY_FLAGVAL_HPP

#include "okbody/borel.hpp"
#include "okbody/matrix.hpp"
#include "okbody/monomial.hpp"
#include "okbody/polytope.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace okb {

/// Sparse homogeneous (or not) polynomial: exponent vector -> coefficient,
/// nonzero coefficients only, lex-ordered.
using Form = std::map<ExpVec, Rat, LexLess>;

inline void form_add_term(Form& f, const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = f.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) f.erase(it);
    }
}

inline Form form_mul(const Form& a, const Form& b) {
    Form p;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpVec e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            form_add_term(p, e, ca * cb);
        }
    return p;
}

inline Form monomial_form(const ExpVec& e, const Rat& c = Rat(1)) {
    Form f;
    form_add_term(f, e, c);
    return f;
}

inline bool is_homogeneous(const Form& f, long d) {
    for (const auto& [e, c] : f)
        if (degree(e) != d) return false;
    return true;
}

/// Exact partial derivative with respect to variable `idx` (0-based).
inline Form jet_derivative(const Form& f, size_t idx) {
    Form df;
    for (const auto& [e, c] : f) {
        if (idx >= e.size()) throw std::invalid_argument("jet_derivative: index out of range");
        if (e[idx] == 0) continue;
        ExpVec d(e);
        d[idx] -= 1;
        form_add_term(df, d, c * Rat(e[idx]));
    }
    return df;
}

// ============================================================================
// Charts
// ============================================================================

struct FlagChart {
    RatMatrix g;  // x = g^T z

    explicit FlagChart(RatMatrix m) : g(std::move(m)) {
        if (g.rows() != g.cols()) throw std::invalid_argument("FlagChart: matrix not square");
        if (determinant(g) == 0) throw std::invalid_argument("FlagChart: chart not invertible");
    }

    static FlagChart identity(size_t n) { return FlagChart(RatMatrix::identity(n)); }

    static FlagChart random(size_t n, std::uint64_t seed, long long bound = 1000000) {
        return FlagChart(random_unit_lower_triangular(n, bound, seed));
    }
};

/// f(g^T z) expanded exactly; powers of the substituted variables are cached
/// per call.
inline Form substitute(const Form& f, const FlagChart& chart) {
    if (f.empty()) return {};
    size_t n = f.begin()->first.size();
    if (chart.g.rows() != n) throw std::invalid_argument("substitute: variable count mismatch");

    std::vector<Form> linear(n);  // x_i = sum_j g(j,i) z_j
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (chart.g.at(j, i) == 0) continue;
            ExpVec e(n, 0);
            e[j] = 1;
            form_add_term(linear[i], e, chart.g.at(j, i));
        }
    }

    std::vector<std::vector<Form>> powers(n);  // powers[i][k] = linear[i]^k
    auto power_of = [&](size_t i, long k) -> const Form& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(monomial_form(ExpVec(n, 0)));
        while (static_cast<long>(cache.size()) <= k) cache.push_back(form_mul(cache.back(), linear[i]));
        return cache[k];
    };

    Form out;
    for (const auto& [e, c] : f) {
        Form term = monomial_form(ExpVec(n, 0), c);
        for (size_t i = 0; i < n; ++i)
            if (e[i] > 0) term = form_mul(term, power_of(i, e[i]));
        for (const auto& [me, mc] : term) form_add_term(out, me, mc);
    }
    return out;
}

/// Homogenized valuation vector: exponent of the lex-smallest monomial of
/// the substituted form.
inline ExpVec valuative_vector(const Form& f, const FlagChart& chart) {
    if (f.empty()) throw std::invalid_argument("valuative_vector: zero form");
    Form sub = substitute(f, chart);
    if (sub.empty()) throw std::logic_error("valuative_vector: substitution annihilated a form");
    return sub.begin()->first;
}

// ============================================================================
// Linear systems of forms
// ============================================================================

/// Linear subspace of the degree-d forms in n variables. Rows of `basis` are
/// coefficient vectors over monomials_of_degree(n, d) in ascending lex order
/// and are linearly independent; the space may be zero (no rows).
struct FormSpace {
    size_t n = 0;
    long d = 0;
    RatMatrix basis;

    size_t space_dim() const { return basis.rows(); }

    Form row_form(size_t i) const {
        auto monos = monomials_of_degree(n, d);
        Form f;
        for (size_t j = 0; j < monos.size(); ++j) form_add_term(f, monos[j], basis.at(i, j));
        return f;
    }
};

constexpr size_t kMaxMonomialBasis = 20000;

/// Builds a FormSpace from arbitrary generators: validates homogeneity,
/// row-reduces, and drops dependent generators. The dense monomial basis is
/// capped at 20000 columns.
inline FormSpace form_space_from_generators(size_t n, long d, const std::vector<Form>& gens) {
    if (Int(binomial(d + static_cast<long>(n) - 1, static_cast<long>(n) - 1)) >
        Int(static_cast<long>(kMaxMonomialBasis)))
        throw std::invalid_argument("form_space_from_generators: monomial basis larger than 20000");
    auto monos = monomials_of_degree(n, d);
    std::map<ExpVec, size_t, LexLess> index;
    for (size_t j = 0; j < monos.size(); ++j) index[monos[j]] = j;

    RatMatrix rows(gens.size(), monos.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!is_homogeneous(gens[i], d))
            throw std::invalid_argument("form_space_from_generators: generator not homogeneous of degree d");
        for (const auto& [e, c] : gens[i]) {
            auto it = index.find(e);
            if (it == index.end())
                throw std::invalid_argument("form_space_from_generators: exponent with wrong variable count");
            rows.at(i, it->second) = c;
        }
    }
    RrefResult r = rref(rows);
    RatMatrix basis(r.pivot_columns.size(), monos.size());
    for (size_t i = 0; i < r.pivot_columns.size(); ++i)
        for (size_t j = 0; j < monos.size(); ++j) basis.at(i, j) = r.reduced.at(i, j);
    return FormSpace{n, d, std::move(basis)};
}

inline FormSpace complete_system(size_t n, long d) {
    auto monos = monomials_of_degree(n, d);
    std::vector<Form> gens;
    for (const auto& m : monos) gens.push_back(monomial_form(m));
    return form_space_from_generators(n, d, gens);
}

/// Deterministic random subspace of the degree-d forms.
inline FormSpace random_form_space(size_t n, long d, size_t dim, std::uint64_t seed,
                                   long long coeff_bound = 9) {
    SeededRng rng(seed);
    auto monos = monomials_of_degree(n, d);
    if (dim > monos.size()) throw std::invalid_argument("random_form_space: dim too large");
    while (true) {
        std::vector<Form> gens;
        for (size_t i = 0; i < dim; ++i) {
            Form f;
            for (const auto& m : monos)
                form_add_term(f, m, Rat(rng.int_in(-coeff_bound, coeff_bound)));
            gens.push_back(std::move(f));
        }
        FormSpace v = form_space_from_generators(n, d, gens);
        if (v.space_dim() == dim) return v;
    }
}

/// Valuative set of the system under one chart: pivot columns of the
/// substituted coefficient matrix, scanning columns in ascending lex order.
/// Its size equals dim V for every chart.
inline DiscreteSet valuative_set(const FormSpace& v, const FlagChart& chart) {
    auto monos = monomials_of_degree(v.n, v.d);
    std::map<ExpVec, size_t, LexLess> index;
    for (size_t j = 0; j < monos.size(); ++j) index[monos[j]] = j;

    RatMatrix rows(v.space_dim(), monos.size());
    for (size_t i = 0; i < v.space_dim(); ++i) {
        Form sub = substitute(v.row_form(i), chart);
        for (const auto& [e, c] : sub) rows.at(i, index.at(e)) = c;
    }
    RrefResult r = rref(rows);
    std::vector<ExpVec> pts;
    for (size_t c : r.pivot_columns) pts.push_back(monos[c]);
    return make_discrete_set(v.n, pts);
}

inline DiscreteSet dehomogenize(const DiscreteSet& s) {
    if (s.dim < 1) throw std::invalid_argument("dehomogenize: dimension must be >= 1");
    DiscreteSet out;
    out.dim = s.dim - 1;
    for (const auto& p : s.points) out.points.insert(dehomogenize(p));
    return out;
}

// ============================================================================
// Generic valuative sets
// ============================================================================

struct GenericityCertificate {
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> chart_seeds;
    long long bound = 0;
    int attempts = 0;
    bool borel_fixed = false;
};

constexpr int kGenericRetryCap = 5;

/// Samples `trials` independent random charts; accepts when all valuative
/// sets agree and the dehomogenized set is Borel-fixed. Never silently
/// returns: exceeding the retry cap throws.
inline std::pair<DiscreteSet, GenericityCertificate> generic_valuative_set(
    const FormSpace& v, std::uint64_t seed, int trials = 3, long long bound = 1000000) {
    if (trials < 1) throw std::invalid_argument("generic_valuative_set: trials must be >= 1");
    GenericityCertificate cert;
    cert.master_seed = seed;
    cert.bound = bound;
    for (int attempt = 0; attempt < kGenericRetryCap; ++attempt) {
        cert.attempts = attempt + 1;
        cert.chart_seeds.clear();
        std::optional<DiscreteSet> agreed;
        bool mismatch = false;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t cs = derive_seed(seed, static_cast<std::uint64_t>(attempt) * 1000 + t);
            cert.chart_seeds.push_back(cs);
            DiscreteSet s = valuative_set(v, FlagChart::random(v.n, cs, bound));
            if (!agreed) agreed = std::move(s);
            else if (!(s == *agreed)) { mismatch = true; break; }
        }
        if (mismatch) continue;
        cert.borel_fixed = is_borel_fixed_set(dehomogenize(*agreed));
        if (cert.borel_fixed) return {std::move(*agreed), cert};
    }
    throw std::runtime_error(
        "generic_valuative_set: retry cap exceeded (unlucky seeds or an implementation bug)");
}

// ============================================================================
// Graded systems and their Newton-Okounkov approximations
// ============================================================================

/// Graded collection A_m of degree m*t forms, for the m where m*t is
/// integral. Multiplicativity is not required of the input.
struct GradedValuativeSystem {
    Rat t;
    std::map<long, FormSpace> spaces;

    void add(long m, FormSpace v) {
        if (m < 1) throw std::invalid_argument("GradedValuativeSystem: m must be >= 1");
        Rat deg = Rat(m) * t;
        if (denominator(deg) != 1 || Rat(v.d) != deg)
            throw std::invalid_argument("GradedValuativeSystem: degree of space must equal m*t");
        spaces.emplace(m, std::move(v));
    }
};

struct NobodyApproximation {
    std::map<long, RationalPolytope> scaled_hulls;  // (1/m) hull(Gamma_m)
    RationalPolytope union_hull;
};

/// Per-level scaled hulls P_m = (1/m) hull(Gamma_m) plus the hull of their
/// union. Nested P_m ⊆ P_{dm} is asserted for comparable levels and each
/// hull is checked Borel-fixed.
inline NobodyApproximation nobody_approximation(const GradedValuativeSystem& sys,
                                                std::uint64_t seed, int trials = 3,
                                                long long bound = 1000000) {
    if (sys.spaces.empty())
        throw std::invalid_argument("nobody_approximation: no nonzero graded pieces");
    NobodyApproximation out;
    std::vector<RatVec> all_scaled;
    for (const auto& [m, space] : sys.spaces) {
        if (space.space_dim() == 0) continue;
        auto [vh, cert] = generic_valuative_set(space, derive_seed(seed, m), trials, bound);
        DiscreteSet gamma = dehomogenize(vh);
        std::vector<RatVec> pts;
        for (const auto& p : gamma.points) pts.push_back(to_rat_vec(p));
        RationalPolytope hull = RationalPolytope::hull(pts);
        RationalPolytope scaled_hull = scale(hull, make_rat(1, m));
        if (!is_borel_fixed_body(scaled_hull))
            throw std::logic_error("nobody_approximation: scaled hull is not Borel-fixed");
        for (const auto& v : scaled_hull.vertices()) all_scaled.push_back(v);
        out.scaled_hulls.emplace(m, std::move(scaled_hull));
    }
    if (out.scaled_hulls.empty())
        throw std::invalid_argument("nobody_approximation: no nonzero graded pieces");
    for (const auto& [m1, p1] : out.scaled_hulls)
        for (const auto& [m2, p2] : out.scaled_hulls)
            if (m2 > m1 && m2 % m1 == 0 && !p2.contains(p1))
                throw std::logic_error("nobody_approximation: P_m not contained in P_{dm}");
    out.union_hull = RationalPolytope::hull(all_scaled);
    return out;
}

// ============================================================================
// Partial jet separation
// ============================================================================

/// Whether the restriction of the system to a generic codimension-(i-1)
/// linear subspace surjects onto all degree-s forms there. Two independent
/// charts must agree; persistent disagreement throws.
inline bool partial_jet_separates(const FormSpace& w, size_t i, std::uint64_t seed,
                                  long long bound = 1000000) {
    if (i < 1 || i > w.n) throw std::invalid_argument("partial_jet_separates: i out of range");
    size_t rest_vars = w.n - i + 1;
    Int target = binomial(w.d + static_cast<long>(rest_vars) - 1, static_cast<long>(rest_vars) - 1);
    if (w.space_dim() == 0) return false;

    auto restricted_rank = [&](std::uint64_t chart_seed) {
        FlagChart chart = FlagChart::random(w.n, chart_seed, bound);
        auto rest_monos = monomials_of_degree(rest_vars, w.d);
        std::map<ExpVec, size_t, LexLess> index;
        for (size_t j = 0; j < rest_monos.size(); ++j) index[rest_monos[j]] = j;
        RatMatrix rows(w.space_dim(), rest_monos.size());
        for (size_t r = 0; r < w.space_dim(); ++r) {
            Form sub = substitute(w.row_form(r), chart);
            // Restrict to { z_1 = ... = z_{i-1} = 0 }.
            for (const auto& [e, c] : sub) {
                bool survives = true;
                for (size_t k = 0; k + 1 < i; ++k) survives = survives && e[k] == 0;
                if (!survives) continue;
                ExpVec tail(e.begin() + (i - 1), e.end());
                rows.at(r, index.at(tail)) = c;
            }
        }
        return rank(rows);
    };

    for (int attempt = 0; attempt < kGenericRetryCap; ++attempt) {
        size_t r1 = restricted_rank(derive_seed(seed, 2 * attempt));
        size_t r2 = restricted_rank(derive_seed(seed, 2 * attempt + 1));
        if (r1 == r2) return Int(static_cast<long>(r1)) == target;
    }
    throw std::runtime_error("partial_jet_separates: charts kept disagreeing past the retry cap");
}

}  // namespace okb

#endif  // OKBODY_FLAGVAL_HPP
