#include "okbody/matrix.hpp"
#include "okbody/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace okb;

static RatMatrix mat(size_t r, size_t c, std::initializer_list<long long> xs) {
    std::vector<Rat> es;
    for (long long x : xs) es.emplace_back(x);
    return RatMatrix(r, c, std::move(es));
}

TEST_CASE("rational construction stays canonical") {
    CHECK(rat_from_string("4/6") == make_rat(2, 3));
    CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
    CHECK(make_rat(6, -8) == make_rat(-3, 4));
    CHECK(rat_to_string(make_rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("2/-3"), std::invalid_argument);
}

TEST_CASE("exact reciprocal identity") {
    SeededRng rng(7);
    for (int i = 0; i < 200; ++i) {
        long long a = rng.int_in(-1000, 1000);
        long long b = rng.int_in(1, 1000);
        if (a == 0) continue;
        Rat r = make_rat(a, b);
        CHECK(r * (Rat(1) / r) == 1);
    }
}

TEST_CASE("rref identity matrix, natural order") {
    auto [red, piv] = rref(RatMatrix::identity(3));
    CHECK(piv == std::vector<size_t>{0, 1, 2});
    CHECK(red == RatMatrix::identity(3));
}

TEST_CASE("rref rank-1 matrix") {
    auto [red, piv] = rref(mat(2, 2, {1, 1, 2, 2}));
    CHECK(piv == std::vector<size_t>{0});
    CHECK(red.at(1, 0) == 0);
    CHECK(red.at(1, 1) == 0);
}

TEST_CASE("rref with reversed column order") {
    // Hand row-reduction scanning columns 2,1,0:
    //   pivot col 2 on (0,1,2) -> (0,1/2,1); eliminate -> (1,-1/2,0);
    //   pivot col 1 -> (-2,1,0); back-substitute -> (1,0,1).
    auto [red, piv] = rref(mat(2, 3, {0, 1, 2, 1, 0, 1}), {2, 1, 0});
    CHECK(piv == std::vector<size_t>{2, 1});
    CHECK(red.row(0) == rat_vec({1, 0, 1}));
    CHECK(red.row(1) == rat_vec({-2, 1, 0}));
    CHECK(piv.size() == rref(mat(2, 3, {0, 1, 2, 1, 0, 1})).pivot_columns.size());
}

TEST_CASE("rank is invariant under the column scan order") {
    SeededRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        RatMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = rng.int_in(-3, 3);
        auto order = natural_order(c);
        for (size_t i = c; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        CHECK(rref(m, order).pivot_columns.size() == rref(m).pivot_columns.size());
    }
}

TEST_CASE("rref is idempotent under the same column order") {
    SeededRng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        RatMatrix m(3, 4);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 4; ++j) m.at(i, j) = rng.int_in(-5, 5);
        std::vector<size_t> order{2, 0, 3, 1};
        auto once = rref(m, order);
        auto twice = rref(once.reduced, order);
        CHECK(once.reduced == twice.reduced);
        CHECK(once.pivot_columns == twice.pivot_columns);
    }
}

TEST_CASE("solve, inverse, kernel agree") {
    SeededRng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        RatMatrix a = random_invertible(3, 20, rng.next_u64());
        RatVec b{Rat(rng.int_in(-9, 9)), Rat(rng.int_in(-9, 9)), Rat(rng.int_in(-9, 9))};
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == b);
        auto inv = inverse(a);
        REQUIRE(inv.has_value());
        CHECK(a * *inv == RatMatrix::identity(3));
        CHECK(kernel_basis(a).empty());
    }
    RatMatrix sing = mat(2, 3, {1, 2, 3, 2, 4, 6});
    auto ker = kernel_basis(sing);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK(sing.apply(v) == RatVec(2, Rat(0)));
}

TEST_CASE("random unit lower triangular matrices") {
    CHECK(random_unit_lower_triangular(1, 10, 3) == RatMatrix::identity(1));
    CHECK(random_unit_lower_triangular(3, 10, 42) == random_unit_lower_triangular(3, 10, 42));
    CHECK(random_unit_lower_triangular(3, 10, 42) != random_unit_lower_triangular(3, 10, 43));
    CHECK(determinant(random_unit_lower_triangular(4, 10, 99)) == 1);
    CHECK_THROWS_AS(random_unit_lower_triangular(3, 1, 0), std::invalid_argument);
}

TEST_CASE("lower triangular entries are uniform (chi-square, 5 sigma)") {
    // 10^4 samples of the single free entry for n=2, bound=10: 21 cells,
    // df = 20, so mean 20 and sigma sqrt(40); 5 sigma above the mean ~ 51.6.
    const int samples = 10000;
    std::map<long long, int> counts;
    SeededRng seeds(2024);
    for (int i = 0; i < samples; ++i) {
        RatMatrix m = random_unit_lower_triangular(2, 10, seeds.next_u64());
        counts[static_cast<long long>(numerator(m.at(1, 0)))]++;
    }
    double expected = samples / 21.0, chi2 = 0;
    for (long long v = -10; v <= 10; ++v) {
        double d = counts[v] - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 51.7);
}

TEST_CASE("random invertible matrices have nonzero determinant") {
    SeededRng seeds(5);
    for (int i = 0; i < 1000; ++i)
        CHECK(determinant(random_invertible(3, 10, seeds.next_u64())) != 0);
    CHECK_THROWS_AS(random_invertible(3, 0, 1), std::invalid_argument);
}

TEST_CASE("rref rejects non-permutations") {
    CHECK_THROWS_AS(rref(RatMatrix::identity(2), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(rref(RatMatrix::identity(2), {0}), std::invalid_argument);
    CHECK_THROWS_AS(rref(RatMatrix::identity(2), {0, 5}), std::invalid_argument);
}
