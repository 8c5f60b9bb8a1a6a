#include <polyz/matrix.hpp>

#include <doctest.h>

#include <random>

using namespace polyz;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

// independent oracle: Laplace expansion along the first row
Int det_laplace(const IntMatrix& m) {
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Int d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, cc++) = m.at(i, k);
            }
        }
        Int term = m.at(0, j) * det_laplace(sub);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

} // namespace

TEST_CASE("determinant matches Laplace expansion") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, n, n, -9, 9);
        CHECK(determinant(m) == det_laplace(m));
    }
}

TEST_CASE("char_poly satisfies Cayley-Hamilton and det relation") {
    std::mt19937 rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix a = random_matrix(rng, n, n, -6, 6);
        std::vector<Int> p = char_poly(a);
        REQUIRE(p.size() == n + 1);
        CHECK(p[n] == 1); // monic
        // p(0) = det(-A) = (-1)^n det(A)
        CHECK(p[0] == (n % 2 == 0 ? determinant(a) : -determinant(a)));
        // Horner: p(A) = 0
        IntMatrix acc(n, n);
        for (std::size_t k = n + 1; k-- > 0;) {
            acc = acc * a;
            for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += p[k];
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("rank_over equals largest nonvanishing minor size") {
    std::mt19937 rng(103);
    std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                     FieldSpec::prime(3), FieldSpec::prime(5)};
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, r, c, -4, 4);
        for (const FieldSpec& f : fields) {
            std::size_t oracle = 0;
            for (std::size_t k = 1; k <= std::min(r, c); ++k) {
                bool nonzero = false;
                for (const Int& d : minors(m, k)) {
                    Int v = (f.kind == Field::Q) ? d : mod_pos(d, f.p);
                    if (v != 0) nonzero = true;
                }
                if (nonzero) oracle = k;
            }
            CHECK(rank_over(m, f) == oracle);
        }
    }
}

TEST_CASE("minors count and a hand-checked example") {
    IntMatrix m({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    std::vector<Int> m2 = minors(m, 2);
    REQUIRE(m2.size() == 9);
    // row subset {0,1}: col subsets {0,1},{0,2},{1,2}
    CHECK(m2[0] == Int(1 * 5 - 2 * 4));
    CHECK(m2[1] == Int(1 * 6 - 3 * 4));
    CHECK(m2[2] == Int(2 * 6 - 3 * 5));
    CHECK(minors(m, 3) == std::vector<Int>{determinant(m)});
}

TEST_CASE("solve_linear_diophantine finds and verifies solutions") {
    std::mt19937 rng(104);
    int solvable = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, r, c, -5, 5);
        std::vector<Int> x(c);
        std::uniform_int_distribution<int> d(-7, 7);
        for (auto& e : x) e = d(rng);
        std::vector<Int> b = m.apply(x);
        auto sol = solve_linear_diophantine(m, b);
        REQUIRE(sol.has_value()); // constructed solvable
        CHECK(m.apply(*sol) == b);
        ++solvable;
    }
    CHECK(solvable == 200);
}

TEST_CASE("solve_linear_diophantine detects unsolvable systems") {
    // 2x = 1 has no integer solution
    CHECK_FALSE(solve_linear_diophantine(IntMatrix({{2}}), {Int(1)}).has_value());
    // inconsistent over Q
    CHECK_FALSE(
        solve_linear_diophantine(IntMatrix({{1, 1}, {1, 1}}), {Int(0), Int(1)}).has_value());
    // solvable over Q but not Z
    CHECK_FALSE(solve_linear_diophantine(IntMatrix({{2, 0}, {0, 3}}), {Int(1), Int(3)})
                    .has_value());
}
