// Exponent vectors, the lexicographic order with variable 1 most significant,
// homogenization, and enumeration of monomial bases of a fixed degree.

#ifndef OKBODY_MONOMIAL_HPP
#define OKBODY_MONOMIAL_HPP

#include "okbody/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace okb {

/// Nonnegative integer exponent vector of a monomial; also the carrier of
/// (homogenized) flag-valuation vectors.
using ExpVec = std::vector<long>;

inline long degree(const ExpVec& a) {
    long d = 0;
    for (long e : a) d += e;
    return d;
}

/// Strict total order: the first differing coordinate decides, variable 1
/// most significant. So (2,0,0) > (0,0,2) and x_n^d is the smallest monomial
/// of its degree.
inline int lex_compare(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_compare: length mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

struct LexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return lex_compare(a, b) < 0; }
};

/// Weights w_d = ((d+1)^{n-1},...,d+1,1). On equal-degree vectors the induced
/// weight order coincides with lex.
inline std::vector<Int> lex_weights(size_t n, long d) {
    std::vector<Int> w(n);
    Int p(1);
    for (size_t i = n; i-- > 0;) {
        w[i] = p;
        p *= Int(d + 1);
    }
    return w;
}

inline Int weight_of(const ExpVec& a, const std::vector<Int>& w) {
    if (a.size() != w.size()) throw std::invalid_argument("weight_of: length mismatch");
    Int s(0);
    for (size_t i = 0; i < a.size(); ++i) s += w[i] * a[i];
    return s;
}

/// Appends the homogenizing exponent d - sum(v).
inline ExpVec homogenize(const ExpVec& v, long d) {
    long s = degree(v);
    if (s > d) throw std::invalid_argument("homogenize: degree of vector exceeds d");
    ExpVec h(v);
    h.push_back(d - s);
    return h;
}

/// Drops the homogenizing coordinate.
inline ExpVec dehomogenize(const ExpVec& h) {
    if (h.empty()) throw std::invalid_argument("dehomogenize: empty vector");
    return ExpVec(h.begin(), h.end() - 1);
}

/// All exponent vectors of total degree d in n variables, strictly ascending
/// in lex order. Exactly C(d+n-1, n-1) entries.
inline std::vector<ExpVec> monomials_of_degree(size_t n, long d) {
    if (n < 1) throw std::invalid_argument("monomials_of_degree: n must be >= 1");
    if (d < 0) throw std::invalid_argument("monomials_of_degree: d must be >= 0");
    std::vector<ExpVec> out;
    ExpVec cur(n, 0);
    // Recursive enumeration emitting smaller leading exponents first.
    auto rec = [&](auto&& self, size_t i, long rem) -> void {
        if (i + 1 == n) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (long e = 0; e <= rem; ++e) {
            cur[i] = e;
            self(self, i + 1, rem - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

inline RatVec to_rat_vec(const ExpVec& a) {
    RatVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i];
    return v;
}

}  // namespace okb

#endif  // OKBODY_MONOMIAL_HPP
