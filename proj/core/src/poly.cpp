#include "polyz/poly.hpp"

namespace polyz {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const Int& coeff, std::size_t deg) {
    std::vector<Int> c(deg + 1);
    c[deg] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Int> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<Int> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Int> c(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c = c_;
    for (Int& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Int> c(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return IntPoly(std::move(c));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& x : c_) g = gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> c = c_;
    for (Int& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::size_t IntPoly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

// ---- QPoly ----

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_int(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
}

QPoly QPoly::operator+(const QPoly& rhs) const {
    std::vector<Rat> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& rhs) const {
    std::vector<Rat> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rat> c(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (Rat& x : c) x *= s;
    return QPoly(std::move(c));
}

void QPoly::divmod(const QPoly& d, QPoly& q, QPoly& r) const {
    if (d.is_zero()) throw error("QPoly::divmod: division by zero");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quot;
    long dr = static_cast<long>(rem.size()) - 1;
    while (!rem.empty() && rem.back() == 0) { rem.pop_back(); --dr; }
    const long dd = d.degree();
    if (dr >= dd) quot.assign(dr - dd + 1, Rat(0));
    while (dr >= dd) {
        Rat f = rem[dr] / d.leading();
        quot[dr - dd] = f;
        for (long i = 0; i <= dd; ++i) rem[dr - dd + i] -= f * d.coeff(i);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        dr = static_cast<long>(rem.size()) - 1;
    }
    q = QPoly(std::move(quot));
    r = QPoly(std::move(rem));
}

IntPoly QPoly::to_primitive_int(Rat& c) const {
    if (is_zero()) {
        c = 0;
        return {};
    }
    Int den = 1;
    for (const Rat& x : c_) den = lcm(den, x.get_den());
    std::vector<Int> ic;
    ic.reserve(c_.size());
    for (const Rat& x : c_) {
        Rat v = x * den;
        ic.push_back(v.get_num());
    }
    IntPoly scaled(std::move(ic)); // == den * this
    Int g = scaled.content();
    if (scaled.leading() < 0) g = -g;
    IntPoly prim = scaled.primitive_part();
    c = Rat(g, den);
    mpq_canonicalize(c.get_mpq_t()); // this == c * prim
    return prim;
}

QPoly qpoly_gcdext(const QPoly& f1, const QPoly& f2, QPoly& a, QPoly& b) {
    // extended euclid; maintain r = s*f1 + t*f2
    QPoly r0 = f1, r1 = f2;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        QPoly q, r;
        r0.divmod(r1, q, r);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) {
        a = s0;
        b = t0;
        return r0;
    }
    Rat lead = r0.leading();
    Rat inv = 1 / lead;
    a = s0.scaled(inv);
    b = t0.scaled(inv);
    return r0.scaled(inv);
}

// ---- ModPoly ----

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly::ModPoly(std::vector<Int> coeffs, Int p) : c_(std::move(coeffs)), p_(std::move(p)) {
    for (Int& x : c_) x = mod_pos(x, p_);
    trim();
}

ModPoly ModPoly::from_int(const IntPoly& f, const Int& p) {
    return ModPoly(f.coeffs(), p);
}

ModPoly ModPoly::operator+(const ModPoly& rhs) const {
    std::vector<Int> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (i < c_.size() ? c_[i] : Int(0)) + (i < rhs.c_.size() ? rhs.c_[i] : Int(0));
    return ModPoly(std::move(c), p_);
}

ModPoly ModPoly::operator-(const ModPoly& rhs) const {
    std::vector<Int> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (i < c_.size() ? c_[i] : Int(0)) - (i < rhs.c_.size() ? rhs.c_[i] : Int(0));
    return ModPoly(std::move(c), p_);
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return ModPoly({}, p_);
    std::vector<Int> c(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return ModPoly(std::move(c), p_);
}

ModPoly ModPoly::scaled(const Int& s) const {
    std::vector<Int> c = c_;
    for (Int& x : c) x *= s;
    return ModPoly(std::move(c), p_);
}

void ModPoly::divmod(const ModPoly& d, ModPoly& q, ModPoly& r) const {
    if (d.is_zero()) throw error("ModPoly::divmod: division by zero");
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), d.c_.back().get_mpz_t(), p_.get_mpz_t()))
        throw error("ModPoly::divmod: leading coefficient not invertible");
    std::vector<Int> rem = c_;
    long dr = static_cast<long>(rem.size()) - 1;
    const long dd = d.degree();
    std::vector<Int> quot(dr >= dd ? dr - dd + 1 : 0);
    while (dr >= dd) {
        Int f = mod_pos(rem[dr] * inv, p_);
        quot[dr - dd] = f;
        for (long i = 0; i <= dd; ++i)
            rem[dr - dd + i] = mod_pos(rem[dr - dd + i] - f * d.c_[i], p_);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        dr = static_cast<long>(rem.size()) - 1;
    }
    q = ModPoly(std::move(quot), p_);
    r = ModPoly(std::move(rem), p_);
}

ModPoly modpoly_gcdext(const ModPoly& f1, const ModPoly& f2, ModPoly& a, ModPoly& b) {
    const Int& p = f1.modulus();
    ModPoly r0 = f1, r1 = f2;
    ModPoly s0({1}, p), s1({}, p);
    ModPoly t0({}, p), t1({1}, p);
    while (!r1.is_zero()) {
        ModPoly q({}, p), r({}, p);
        r0.divmod(r1, q, r);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) {
        a = s0;
        b = t0;
        return r0;
    }
    Int inv;
    mpz_invert(inv.get_mpz_t(), r0.coeffs().back().get_mpz_t(), p.get_mpz_t());
    a = s0.scaled(inv);
    b = t0.scaled(inv);
    return r0.scaled(inv);
}

// ---- polynomial matrices ----

IntPoly poly_det(const std::vector<std::vector<IntPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly::constant(1);
    for (const auto& row : m)
        if (row.size() != n) throw error("poly_det: non-square");
    if (n == 1) return m[0][0];
    IntPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<IntPoly>> sub(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) sub[i - 1].push_back(m[i][jj]);
        IntPoly term = m[0][j] * poly_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<IntPoly>> char_matrix(const IntMatrix& a) {
    if (!a.square()) throw error("char_matrix: non-square");
    const std::size_t n = a.rows();
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Int> c{-a.at(i, j)};
            if (i == j) c.push_back(1);
            m[i][j] = IntPoly(std::move(c));
        }
    return m;
}

} // namespace polyz
