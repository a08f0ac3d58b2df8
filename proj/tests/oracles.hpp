// Test-only oracles, independent of the implementation paths they check.

#ifndef OKBODY_TESTS_ORACLES_HPP
#define OKBODY_TESTS_ORACLES_HPP

#include "okbody/surface.hpp"

#include <vector>

namespace okb::oracle {

/// Every valid Zariski decomposition of d over the model's curves, by
/// exhaustive enumeration of the 2^k candidate supports. On models whose
/// distinct curves meet nonnegatively there is at most one.
inline std::vector<ZariskiResult> zariski_brute_force(const SurfaceModel& m, const RatVec& d) {
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
            if (!pos) continue;
            if (!detail::negative_definite(m.gram, sup)) continue;
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

/// Random symmetric intersection data: nonnegative sparse off-diagonals and
/// negative diagonals of varying dominance, so both decomposable and
/// non-decomposable classes occur.
inline SurfaceModel random_surface_model(SeededRng& rng, size_t k) {
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
            case 0: m.gram.at(i, i) = -(rowsum + 1 + extra); break;       // dominant
            case 1: m.gram.at(i, i) = -std::max(Rat(1), Rat(rowsum - extra)); break;
            default: m.gram.at(i, i) = -(1 + extra); break;
        }
    }
    m.pullback = RatVec(k, Rat(0));
    return m;
}

inline RatVec random_class(SeededRng& rng, size_t k) {
    RatVec d(k);
    for (auto& x : d) x = rng.int_in(-4, 8);
    return d;
}

}  // namespace okb::oracle

#endif  // OKBODY_TESTS_ORACLES_HPP
