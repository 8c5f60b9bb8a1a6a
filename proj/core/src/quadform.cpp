#include "polyz/quadform.hpp"

namespace polyz {

BQForm BQForm::transformed(const IntMatrix& p) const {
    const Int &p00 = p.at(0, 0), &p01 = p.at(0, 1), &p10 = p.at(1, 0), &p11 = p.at(1, 1);
    BQForm g;
    g.a = eval(p00, p10);
    g.c = eval(p01, p11);
    g.b = 2 * a * p00 * p01 + b * (p00 * p11 + p01 * p10) + 2 * c * p10 * p11;
    return g;
}

BQForm cyclicity_form(const IntMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw error("cyclicity_form: need 2x2");
    return BQForm{m.at(1, 0), m.at(1, 1) - m.at(0, 0), -m.at(0, 1)};
}

namespace {

bool is_reduced_indefinite(const BQForm& f, const Int& sqrt_d) {
    // |sqrt(D) - 2|a|| < b < sqrt(D), in exact integer arithmetic:
    // b >= 1, b <= floor(sqrt D), and (b completes the sandwich)
    if (f.b <= 0) return false;
    if (f.b > sqrt_d) return false;
    Int two_abs_a = 2 * abs(f.a);
    // need sqrt(D) - 2|a| < b  and  2|a| - sqrt(D) < b
    // left: sqrtD < b + 2|a| i.e. floor test: sqrt_d < b + 2|a| works since all integers? sqrtD irrational:
    // sqrtD - 2|a| < b  <=>  sqrtD < b + 2|a|  <=>  sqrt_d < b + 2|a| (floor, D nonsquare)
    //                       actually sqrtD < m  <=>  sqrt_d <= m-1, m integer
    Int m1 = f.b + two_abs_a;
    if (!(sqrt_d <= m1 - 1)) return false;
    // 2|a| - sqrtD < b  <=>  2|a| - b < sqrtD  <=>  2|a| - b <= sqrt_d
    if (!(two_abs_a - f.b <= sqrt_d)) return false;
    // b < sqrtD  <=>  b <= sqrt_d (b integer, sqrtD irrational)
    return f.b <= sqrt_d;
}

// translate b into the normalization window, accumulating the change of basis
BQForm normalize_indef(BQForm f, const Int& sqrt_d, IntMatrix* acc) {
    Int abs_a = abs(f.a);
    Int two_a = 2 * f.a;
    // window: |a| > sqrt_d ? (-|a|, |a|] : (sqrt_d - 2|a|, sqrt_d]
    Int hi = (abs_a > sqrt_d) ? abs_a : sqrt_d;
    // choose m with b + 2am in (hi - 2|a|, hi]
    Int num = hi - f.b;
    Int m, two_abs_a = 2 * abs_a;
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), two_abs_a.get_mpz_t());
    if (f.a < 0) m = -m;
    if (m != 0) {
        Int new_b = f.b + two_a * m;
        Int new_c = f.c + f.b * m + f.a * m * m;
        f.b = new_b;
        f.c = new_c;
        if (acc) {
            IntMatrix t{{1, m}, {0, 1}};
            *acc = *acc * t;
        }
    }
    return f;
}

BQForm rho(const BQForm& f, const Int& sqrt_d, IntMatrix* acc) {
    // (a,b,c) -> normalize(c, -b, a); change of basis [[0,-1],[1,0]]
    BQForm g{f.c, -f.b, f.a};
    if (acc) {
        IntMatrix s{{0, -1}, {1, 0}};
        *acc = *acc * s;
    }
    return normalize_indef(g, sqrt_d, acc);
}

std::optional<Witness> definite_search(const BQForm& f) {
    // D < 0: values of |f| grow quadratically; crude but safe bound
    Int bound = 2 * isqrt(abs(f.a) + abs(f.c)) + 3;
    for (Int x = -bound; x <= bound; ++x)
        for (Int y = -bound; y <= bound; ++y) {
            Int v = f.eval(x, y);
            if (abs(v) == 1) return Witness{x, y, v};
        }
    return std::nullopt;
}

std::optional<Witness> linear_pair_solve(const BQForm& f, const Int& alpha, const Int& beta,
                                         const Int& gamma, const Int& delta) {
    // f = +-(alpha x + beta y)(gamma x + delta y); try all unit values
    Int det = alpha * delta - beta * gamma;
    if (det == 0) return std::nullopt;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            Int nx = Int(e1) * delta - Int(e2) * beta;
            Int ny = Int(e2) * alpha - Int(e1) * gamma;
            if (nx % det != 0 || ny % det != 0) continue;
            Int x = nx / det, y = ny / det;
            Int v = f.eval(x, y);
            if (abs(v) == 1) return Witness{x, y, v};
        }
    return std::nullopt;
}

std::optional<Witness> degenerate_or_square(const BQForm& f) {
    // D a perfect square (including 0). gcd(a,b,c) divides every value.
    Int g = gcd(gcd(f.a, f.b), f.c);
    if (g == 0) return std::nullopt; // zero form
    if (g != 1) return std::nullopt;

    if (f.a == 0 && f.c == 0) {
        // f = b xy, b = +-1
        if (abs(f.b) == 1) return Witness{1, 1, f.b};
        return std::nullopt;
    }
    if (f.a == 0) {
        // f = y (b x + c y)
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                if (f.b == 0) break;
                Int num = Int(e2) - f.c * e1;
                if (num % f.b != 0) continue;
                Int x = num / f.b, y = e1;
                Int v = f.eval(x, y);
                if (abs(v) == 1) return Witness{x, y, v};
            }
        if (f.b == 0 && abs(f.c) == 1) return Witness{0, 1, f.c};
        return std::nullopt;
    }
    if (f.c == 0) {
        // f = x (a x + b y)
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                if (f.b == 0) break;
                Int num = Int(e2) - f.a * e1;
                if (num % f.b != 0) continue;
                Int x = e1, y = num / f.b;
                Int v = f.eval(x, y);
                if (abs(v) == 1) return Witness{x, y, v};
            }
        if (f.b == 0 && abs(f.a) == 1) return Witness{1, 0, f.a};
        return std::nullopt;
    }

    Int e = isqrt(f.discriminant());
    if (e == 0) {
        // +-(alpha x + beta y)^2 up to sign; alpha, beta from square roots
        Int alpha = isqrt(abs(f.a)), beta = isqrt(abs(f.c));
        if (f.b < 0) beta = -beta;
        if (abs(f.a) != alpha * alpha) return std::nullopt; // cannot happen for D=0 primitive
        Int x, y;
        Int gg = gcdext(alpha, beta, x, y);
        if (abs(gg) != 1) return std::nullopt;
        x /= gg;
        y /= gg;
        Int v = f.eval(x, y);
        if (abs(v) == 1) return Witness{x, y, v};
        return std::nullopt;
    }
    // 4a f = (2a x + (b-e) y)(2a x + (b+e) y); take primitive parts
    Int l1a = 2 * f.a, l1b = f.b - e;
    Int l2a = 2 * f.a, l2b = f.b + e;
    Int g1 = gcd(l1a, l1b), g2 = gcd(l2a, l2b);
    if (g1 == 0 || g2 == 0) return std::nullopt;
    return linear_pair_solve(f, l1a / g1, l1b / g1, l2a / g2, l2b / g2);
}

} // namespace

std::vector<BQForm> reduce_cycle(const BQForm& f) {
    Int d = f.discriminant();
    if (d <= 0 || is_perfect_square(d))
        throw error("reduce_cycle: discriminant must be positive and non-square");
    Int sd = isqrt(d);
    BQForm g = normalize_indef(f, sd, nullptr);
    int guard = 0;
    while (!is_reduced_indefinite(g, sd)) {
        g = rho(g, sd, nullptr);
        if (++guard > 10000) throw error("reduce_cycle: reduction did not terminate");
    }
    std::vector<BQForm> cycle{g};
    BQForm cur = rho(g, sd, nullptr);
    while (!(cur == g)) {
        cycle.push_back(cur);
        cur = rho(cur, sd, nullptr);
        if (cycle.size() > 100000) throw error("reduce_cycle: cycle did not close");
    }
    return cycle;
}

std::optional<Witness> represents_pm_one(const BQForm& f) {
    if (f.is_zero()) return std::nullopt;
    Int d = f.discriminant();
    if (d < 0) return definite_search(f);
    if (is_perfect_square(d)) return degenerate_or_square(f);

    // indefinite, irrational sqrt: walk the cycle with the basis change
    Int sd = isqrt(d);
    IntMatrix p = IntMatrix::identity(2);
    BQForm g = normalize_indef(f, sd, &p);
    int guard = 0;
    while (!is_reduced_indefinite(g, sd)) {
        g = rho(g, sd, &p);
        if (++guard > 10000) throw error("represents_pm_one: reduction did not terminate");
    }
    BQForm start = g;
    for (;;) {
        if (abs(g.a) == 1) {
            Int x = p.at(0, 0), y = p.at(1, 0);
            Int v = f.eval(x, y);
            return Witness{x, y, v}; // v == g.a
        }
        g = rho(g, sd, &p);
        if (g == start) break;
        if (++guard > 200000) throw error("represents_pm_one: cycle did not close");
    }
    return std::nullopt;
}

std::optional<CompanionConjugacy> companion_conjugacy(const IntMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw error("companion_conjugacy: need 2x2");
    auto w = represents_pm_one(cyclicity_form(m));
    if (!w) return std::nullopt;
    CompanionConjugacy out;
    out.v = {w->x, w->y};
    std::vector<Int> av = m.apply(out.v);
    out.p = IntMatrix(2, 2);
    out.p.at(0, 0) = out.v[0];
    out.p.at(1, 0) = out.v[1];
    out.p.at(0, 1) = av[0];
    out.p.at(1, 1) = av[1];
    return out;
}

} // namespace polyz
