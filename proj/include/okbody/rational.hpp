// Exact rational scalars and vectors, plus deterministic seeding utilities.
//
// Rat is a GMP-backed arbitrary-precision rational kept in canonical form
// (reduced, positive denominator). All construction goes through the helpers
// below; mpq arithmetic preserves canonical form once inputs are canonical.

#ifndef OKBODY_RATIONAL_HPP
#define OKBODY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace okb {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rat>;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Rat r(num, den);
    mpq_canonicalize(r.backend().data());
    return r;
}

inline Rat make_rat(long long num, long long den = 1) {
    return make_rat(Int(num), Int(den));
}

/// Parses a decimal-free rational: "p", "-p", or "p/q". Rejects anything else.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    auto digits = [](const std::string& t, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    size_t num_start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!digits(num, num_start, num.size()))
        throw std::invalid_argument("rat_from_string: bad numerator in '" + s + "'");
    if (slash == std::string::npos) return Rat(Int(num));
    std::string den = s.substr(slash + 1);
    if (!digits(den, 0, den.size()) || Int(den) == 0)
        throw std::invalid_argument("rat_from_string: bad denominator in '" + s + "'");
    return make_rat(Int(num), Int(den));
}

/// Formats canonically: "p" for integers, "p/q" otherwise. Round trips exactly.
inline std::string rat_to_string(const Rat& r) {
    return r.str();
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r(1);
    for (long i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

inline Int factorial(long n) {
    Int r(1);
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline RatVec rat_vec(std::initializer_list<long long> xs) {
    RatVec v;
    v.reserve(xs.size());
    for (long long x : xs) v.emplace_back(x);
    return v;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    RatVec c(a);
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    RatVec c(a);
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

inline RatVec vec_scale(const Rat& s, const RatVec& a) {
    RatVec c(a);
    for (auto& x : c) x *= s;
    return c;
}

// ============================================================================
// Deterministic RNG
// ============================================================================

/// SplitMix64: tiny, portable, deterministic across platforms. All randomness
/// in the library flows through this so fixed seeds give fixed outputs.
struct SeededRng {
    std::uint64_t state;

    explicit SeededRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("SeededRng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % n;
    }

    long long int_in(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("SeededRng::int_in: empty range");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
};

/// Fixed seed-splitting rule: child streams are derived, never shared.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
    SeededRng r(master ^ (salt * 0xD1B54A32D192ED03ull + 0x9E3779B97F4A7C15ull));
    return r.next_u64();
}

constexpr std::uint64_t kDefaultSeed = 20240811ull;

}  // namespace okb

#endif  // OKBODY_RATIONAL_HPP
