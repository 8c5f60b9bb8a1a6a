#include <polyz/commensurator.hpp>

#include <doctest.h>

#include <random>

using namespace polyz;

namespace {

// companion matrix of t^3 - t - 1: no root of unity divides it
const IntMatrix kCompanion = IntMatrix::companion({Int(-1), Int(-1), Int(0)});

AmbientAction action() { return AmbientAction::validate(kCompanion); }

// is target a rational combination of the basis matrices?
bool in_span(const std::vector<RatMatrix>& basis, const RatMatrix& target) {
    // stack as columns of a 9 x (b+1) integer matrix after clearing
    // denominators; target is in the span iff adding it does not raise the
    // rank over Q
    auto pack = [](const std::vector<RatMatrix>& ms) {
        IntMatrix out(9, ms.size());
        for (std::size_t c = 0; c < ms.size(); ++c) {
            Int d = ms[c].denominator_lcm();
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    Rat x = ms[c].at(i, j) * d;
                    out.at(3 * i + j, c) = Int(x.get_num());
                }
        }
        return out;
    };
    std::vector<RatMatrix> with = basis;
    with.push_back(target);
    return rank_over(pack(basis), FieldSpec::rationals()) ==
           rank_over(pack(with), FieldSpec::rationals());
}

CommTriple random_triple(std::mt19937& rng, const AmbientAction& act) {
    std::uniform_int_distribution<int> dj(0, 2), dw(-6, 6), dk(1, 4), dc(-2, 2);
    while (true) {
        // integer combination of I, A, A^2 commutes with every power of A
        IntMatrix b(3, 3);
        IntMatrix power = IntMatrix::identity(3);
        for (int i = 0; i < 3; ++i) {
            Int c = dc(rng);
            b = b + power * IntMatrix({{c, 0, 0}, {0, c, 0}, {0, 0, c}});
            power = power * act.a;
        }
        if (determinant(b) == 0) continue;
        CommTriple t;
        t.b = RatMatrix::from_int(b);
        t.w = {Int(dw(rng)), Int(dw(rng)), Int(dw(rng))};
        t.k = static_cast<unsigned long>(dk(rng));
        return t;
    }
}

} // namespace

TEST_CASE("root of unity screen") {
    CHECK_FALSE(has_root_of_unity_eigenvalue(kCompanion));
    IntMatrix neg = IntMatrix::identity(3);
    for (int i = 0; i < 3; ++i) neg.at(i, i) = -1;
    CHECK(has_root_of_unity_eigenvalue(neg));
    CHECK(has_root_of_unity_eigenvalue(IntMatrix({{0, -1}, {1, 0}})));   // order 4
    CHECK(has_root_of_unity_eigenvalue(IntMatrix({{0, -1}, {1, 1}})));   // order 6
    CHECK(has_root_of_unity_eigenvalue(IntMatrix({{1, 1}, {0, 1}})));    // eigenvalue 1
    CHECK_FALSE(has_root_of_unity_eigenvalue(IntMatrix({{2, 1}, {1, 1}})));
    CHECK_THROWS_AS(AmbientAction::validate(neg), error);
    CHECK_THROWS_AS(AmbientAction::validate(IntMatrix({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                    error);
}

TEST_CASE("centralizer of A has dimension 3 containing I, A, A^2") {
    AmbientAction act = action();
    std::vector<RatMatrix> basis = centralizer_basis(act, 1);
    CHECK(basis.size() == 3);
    RatMatrix a = RatMatrix::from_int(act.a);
    CHECK(in_span(basis, RatMatrix::identity(3)));
    CHECK(in_span(basis, a));
    CHECK(in_span(basis, a * a));
    // every basis element commutes with A
    for (const RatMatrix& x : basis) CHECK(x * a == a * x);
}

TEST_CASE("nu telescoping identities for k, l <= 6") {
    AmbientAction act = action();
    for (unsigned long k = 1; k <= 6; ++k) {
        IntMatrix ak = int_matrix_pow(act.a, k);
        IntMatrix ident = IntMatrix::identity(3);
        for (unsigned long l = 1; l <= 6; ++l) {
            // nu_l(A^k)(A^k - I) = A^{kl} - I
            CHECK(nu(act, k, l) * (ak - ident) == int_matrix_pow(act.a, k * l) - ident);
            // nu_{ab}(X) = nu_a(X) nu_b(X^a) for a factorization of l
            for (unsigned long d = 1; d <= l; ++d) {
                if (l % d != 0) continue;
                CHECK(nu(act, k, l) == nu(act, k, d) * nu(act, k * d, l / d));
            }
        }
    }
}

TEST_CASE("triple normalization preserves equivalence") {
    AmbientAction act = action();
    std::mt19937 rng(501);
    for (int trial = 0; trial < 50; ++trial) {
        CommTriple t = random_triple(rng, act);
        for (unsigned long l = 2; l <= 4; ++l) {
            CommTriple u = triple_normalize(act, t, l);
            CHECK(u.k == t.k * l);
            CHECK(triple_equiv(act, t, u));
            CHECK(triple_equiv(act, u, t));
        }
    }
}

TEST_CASE("triple_equiv is an equivalence relation; compose respects it") {
    AmbientAction act = action();
    std::mt19937 rng(502);
    for (int trial = 0; trial < 100; ++trial) {
        CommTriple t1 = random_triple(rng, act);
        CommTriple t2 = random_triple(rng, act);
        CommTriple t3 = random_triple(rng, act);
        // reflexive
        CHECK(triple_equiv(act, t1, t1));
        // symmetric
        CHECK(triple_equiv(act, t1, t2) == triple_equiv(act, t2, t1));
        // transitive through normalization representatives
        CommTriple u = triple_normalize(act, t1, 3);
        CommTriple v = triple_normalize(act, u, 2);
        CHECK(triple_equiv(act, t1, u));
        CHECK(triple_equiv(act, u, v));
        CHECK(triple_equiv(act, t1, v));
        // composition respects the relation in each argument
        CommTriple lhs = triple_compose(act, t1, t2);
        CommTriple lhs_u = triple_compose(act, u, t2);
        CHECK(triple_equiv(act, lhs, lhs_u));
        CommTriple rhs = triple_compose(act, t3, t1);
        CommTriple rhs_u = triple_compose(act, t3, u);
        CHECK(triple_equiv(act, rhs, rhs_u));
    }
}

TEST_CASE("identity and inverse laws up to equivalence") {
    AmbientAction act = action();
    CommTriple e;
    e.b = RatMatrix::identity(3);
    e.w = {Int(0), Int(0), Int(0)};
    e.k = 1;
    std::mt19937 rng(503);
    for (int trial = 0; trial < 40; ++trial) {
        CommTriple t = random_triple(rng, act);
        CHECK(triple_equiv(act, triple_compose(act, e, t), t));
        CHECK(triple_equiv(act, triple_compose(act, t, e), t));
        // inverse when B is unimodular over Z: (B^-1, -B^-1 w, k)
        if (abs(t.b.det()) != 1) continue;
        auto binv = t.b.inverse();
        REQUIRE(binv.has_value());
        if (!binv->is_integral()) continue;
        CommTriple inv;
        inv.b = *binv;
        std::vector<Rat> bw = binv->apply(t.w);
        inv.w.resize(3);
        for (int i = 0; i < 3; ++i) inv.w[i] = -Int(bw[i].get_num());
        inv.k = t.k;
        CHECK(triple_equiv(act, triple_compose(act, inv, t), e));
        CHECK(triple_equiv(act, triple_compose(act, t, inv), e));
    }
}

TEST_CASE("triples with rational B compose by clearing denominators") {
    AmbientAction act = action();
    CommTriple t1;
    t1.b = RatMatrix::from_int(act.a);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t1.b.at(i, j) /= 2;
    t1.b = t1.b * RatMatrix::from_int(act.a); // (A/2) A, still commutes
    t1.w = {Int(1), Int(0), Int(0)};
    t1.k = 1;
    CommTriple t2;
    t2.b = RatMatrix::identity(3);
    t2.w = {Int(1), Int(1), Int(1)};
    t2.k = 1;
    CommTriple out = triple_compose(act, t1, t2);
    validate_triple(act, out);
    CHECK(triple_equiv(act, out, out));
}

TEST_CASE("comm of Z^n validation") {
    RatMatrix b = RatMatrix::identity(2);
    b.at(0, 0) = Rat(1, 3);
    b.at(0, 1) = Rat(1, 2);
    auto m = comm_of_Zn_validate(b);
    REQUIRE(m.has_value());
    CHECK(*m == 6);
    RatMatrix sing(2, 2); // zero matrix
    CHECK_FALSE(comm_of_Zn_validate(sing).has_value());
}

TEST_CASE("comm_of_Zn scale: B maps m Z^n into Z^n") {
    RatMatrix b(2, 2);
    b.at(0, 0) = Rat(5, 4);
    b.at(0, 1) = Rat(-1, 6);
    b.at(1, 0) = Rat(0);
    b.at(1, 1) = Rat(7, 2);
    auto m = comm_of_Zn_validate(b);
    REQUIRE(m.has_value());
    for (int e = 0; e < 2; ++e) {
        std::vector<Int> v = {Int(e == 0 ? *m : Int(0)), Int(e == 1 ? *m : Int(0))};
        for (const Rat& x : b.apply(v)) CHECK(x.get_den() == 1);
    }
}
