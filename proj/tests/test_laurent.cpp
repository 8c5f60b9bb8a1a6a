#include <polyz/laurent.hpp>

#include <doctest.h>

#include <random>

using namespace polyz;

namespace {

// membership in the Z[t,t^-1]-ideal: some t^s * target lies in the bounded
// Z[t]-span of the generators
bool laurent_member(const IntPoly& target, const std::vector<IntPoly>& gens) {
    IntPoly shifted = target;
    for (int s = 0; s <= 4; ++s) {
        if (in_span_bounded(shifted, gens, 10)) return true;
        shifted = shifted.shifted(1);
    }
    return false;
}

IntPoly random_poly(std::mt19937& rng, int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg), dc(-coeff_bound, coeff_bound);
    int deg = dd(rng);
    std::vector<Int> c(deg + 1);
    for (auto& e : c) e = dc(rng);
    return IntPoly(std::move(c));
}

const IntPoly t_plus_1({1, 1});
const IntPoly three = IntPoly::constant(3);

} // namespace

TEST_CASE("LaurentPoly canonical form and ring axioms spot checks") {
    LaurentPoly p(IntPoly({0, 0, 2, 1}), -1); // t^-1 (2t^2 + t^3) = 2t + t^2
    CHECK(p.shift() == 1);
    CHECK(p.poly() == IntPoly({2, 1}));
    CHECK(p == LaurentPoly(IntPoly({2, 1}), 1));
    LaurentPoly q = LaurentPoly::t_power(-2);
    CHECK((p * q).shift() == -1);
    CHECK(p - p == LaurentPoly());
    CHECK(LaurentPoly().shift() == 0);
    CHECK(q.is_unit());
    CHECK_FALSE(p.is_unit());
}

TEST_CASE("E1 of the order-selected 3x3 action equals (t+1, 3)") {
    IntMatrix theta({{1, 0, 0}, {1, 5, 18}, {0, 3, 11}});
    LaurentIdeal e1 = elementary_ideal_E1(theta);
    REQUIRE_FALSE(e1.empty());
    std::vector<IntPoly> target = {t_plus_1, three};

    // every generator of E1 lies in (t+1, 3)
    for (const IntPoly& g : e1.generators()) CHECK(laurent_member(g, target));
    // and conversely
    for (const IntPoly& g : target) CHECK(laurent_member(g, e1.generators()));

    CHECK_FALSE(is_unit_ideal(e1));
}

TEST_CASE("is_unit_ideal on fixed examples") {
    auto ideal = [](std::vector<LaurentPoly> g) { return LaurentIdeal(g); };
    CHECK_FALSE(is_unit_ideal(ideal({LaurentPoly::from_poly(t_plus_1),
                                     LaurentPoly::from_poly(three)})));
    CHECK(is_unit_ideal(ideal({LaurentPoly::from_poly(IntPoly({0, 1})),
                               LaurentPoly::from_poly(three)})));
    CHECK(is_unit_ideal(ideal({LaurentPoly::constant(2), LaurentPoly::from_poly(three)})));
    CHECK_FALSE(is_unit_ideal(ideal({LaurentPoly::constant(2),
                                     LaurentPoly::from_poly(IntPoly({-1, 1}))})));
}

TEST_CASE("is_unit_ideal invariance (100 random 2-generator ideals)") {
    std::mt19937 rng(301);
    std::uniform_int_distribution<int> dk(-3, 3), dsign(0, 1);
    int done = 0;
    while (done < 100) {
        LaurentPoly f = LaurentPoly::from_poly(random_poly(rng, 3, 4));
        LaurentPoly g = LaurentPoly::from_poly(random_poly(rng, 3, 4));
        if (f.is_zero() && g.is_zero()) continue;
        ++done;
        bool u = is_unit_ideal(LaurentIdeal({f, g}));

        // unit scaling by +-t^k
        LaurentPoly f2 = f.times_t(dk(rng));
        if (dsign(rng)) f2 = -f2;
        CHECK(is_unit_ideal(LaurentIdeal({f2, g})) == u);
        // permutation
        CHECK(is_unit_ideal(LaurentIdeal({g, f})) == u);
        // adding a multiple of the other generator
        LaurentPoly h = LaurentPoly::from_poly(random_poly(rng, 2, 3));
        CHECK(is_unit_ideal(LaurentIdeal({f, g + h * f})) == u);
    }
}

TEST_CASE("qgcd_certificate identity holds") {
    std::mt19937 rng(302);
    int tested = 0;
    while (tested < 60) {
        LaurentPoly f = LaurentPoly::from_poly(random_poly(rng, 3, 4));
        LaurentPoly g = LaurentPoly::from_poly(random_poly(rng, 3, 4));
        LaurentIdeal ideal({f, g});
        if (ideal.empty()) continue;
        GcdCertificate cert = qgcd_certificate(ideal);
        REQUIRE(cert.cofactors.size() == ideal.generators().size());
        CHECK(cert.c > 0);
        LaurentPoly sum;
        for (std::size_t i = 0; i < cert.cofactors.size(); ++i)
            sum = sum + cert.cofactors[i] * LaurentPoly::from_poly(ideal.generators()[i]);
        LaurentPoly rhs =
            LaurentPoly(cert.g, static_cast<long>(cert.v)).scaled(cert.c);
        CHECK(sum == rhs);
        ++tested;
    }
}

TEST_CASE("unit_certificate expands to 1 exactly when the ideal is the ring") {
    std::mt19937 rng(303);
    auto check_cert = [](const LaurentIdeal& ideal) {
        auto cert = unit_certificate(ideal);
        if (is_unit_ideal(ideal)) {
            REQUIRE(cert.has_value());
            LaurentPoly sum;
            for (std::size_t i = 0; i < cert->size(); ++i)
                sum = sum + (*cert)[i] * LaurentPoly::from_poly(ideal.generators()[i]);
            CHECK(sum == LaurentPoly::one());
        } else {
            CHECK_FALSE(cert.has_value());
        }
    };
    check_cert(LaurentIdeal({LaurentPoly::constant(2), LaurentPoly::from_poly(IntPoly({0, 1}))}));
    check_cert(LaurentIdeal({LaurentPoly::constant(2), LaurentPoly::from_poly(three)}));
    check_cert(LaurentIdeal({LaurentPoly::from_poly(t_plus_1), LaurentPoly::from_poly(three)}));
    for (int trial = 0; trial < 40; ++trial) {
        LaurentIdeal ideal({LaurentPoly::from_poly(random_poly(rng, 2, 3)),
                            LaurentPoly::from_poly(random_poly(rng, 2, 3))});
        if (ideal.empty()) continue;
        check_cert(ideal);
    }
}

TEST_CASE("in_span_bounded coherence") {
    std::mt19937 rng(304);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly f = random_poly(rng, 3, 4);
        IntPoly g = random_poly(rng, 3, 4);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(in_span_bounded(f * g, {f}, 6));
        CHECK(in_span_bounded(f + g, {f, g}, 6));
    }
    // 1 is not in (t+1, 3) even with generous degree bounds
    CHECK_FALSE(in_span_bounded(IntPoly::constant(1), {t_plus_1, three}, 10));
}
