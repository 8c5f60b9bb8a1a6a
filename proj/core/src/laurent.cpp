#include "polyz/laurent.hpp"

#include <map>

namespace polyz {

LaurentPoly::LaurentPoly(IntPoly poly, long shift) : poly_(std::move(poly)), shift_(shift) {
    if (poly_.is_zero()) {
        shift_ = 0;
        return;
    }
    const std::size_t low = poly_.low_order();
    if (low > 0) {
        std::vector<Int> c(poly_.coeffs().begin() + static_cast<long>(low), poly_.coeffs().end());
        poly_ = IntPoly(std::move(c));
        shift_ += static_cast<long>(low);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    const long s = std::min(shift_, rhs.shift_);
    IntPoly a = poly_.shifted(static_cast<std::size_t>(shift_ - s));
    IntPoly b = rhs.poly_.shifted(static_cast<std::size_t>(rhs.shift_ - s));
    return LaurentPoly(a + b, s);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    return LaurentPoly(poly_ * rhs.poly_, shift_ + rhs.shift_);
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(-poly_, shift_); }

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    return LaurentPoly(poly_ * IntPoly::constant(c), shift_);
}

LaurentPoly LaurentPoly::divided_exact(const Int& c) const {
    if (c == 0) throw error("LaurentPoly: division by zero");
    std::vector<Int> out;
    out.reserve(poly_.coeffs().size());
    for (const Int& x : poly_.coeffs()) {
        if (x % c != 0) throw error("LaurentPoly: inexact division");
        out.push_back(x / c);
    }
    return LaurentPoly(IntPoly(std::move(out)), shift_);
}

LaurentIdeal::LaurentIdeal(const std::vector<LaurentPoly>& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        LaurentPoly n(g.poly(), 0);
        gens_.push_back(n.poly());
    }
}

LaurentIdeal elementary_ideal_E1(const IntMatrix& a) {
    if (!a.square()) throw error("elementary_ideal_E1: non-square");
    const std::size_t n = a.rows();
    if (n < 2) throw error("elementary_ideal_E1: need n >= 2");
    auto tm = char_matrix(a);
    std::vector<LaurentPoly> gens;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<IntPoly>> sub;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<IntPoly> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(tm[r][c]);
                sub.push_back(std::move(row));
            }
            IntPoly d = poly_det(sub);
            if (!d.is_zero()) gens.push_back(LaurentPoly::from_poly(d));
        }
    return LaurentIdeal(gens);
}

GcdCertificate qgcd_certificate(const LaurentIdeal& gens) {
    if (gens.empty()) throw error("qgcd_certificate: empty ideal");
    const auto& fs = gens.generators();

    // fold extended gcd over Q[t], carrying cofactors
    QPoly g = QPoly::from_int(fs[0]);
    std::vector<QPoly> cof(fs.size());
    cof[0] = QPoly::constant(1);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        QPoly a, b;
        QPoly g2 = qpoly_gcdext(g, QPoly::from_int(fs[i]), a, b);
        for (std::size_t j = 0; j < i; ++j) cof[j] = cof[j] * a;
        cof[i] = b;
        g = g2;
    }

    GcdCertificate cert;
    Rat scale;
    cert.g = g.to_primitive_int(scale); // g == scale * cert.g
    // sum cof_i f_i = g = scale * cert.g; divide cofactors by scale
    Rat inv = 1 / scale;
    Int den = 1;
    std::vector<QPoly> scaled(cof.size());
    for (std::size_t i = 0; i < cof.size(); ++i) {
        scaled[i] = cof[i].scaled(inv);
        for (const Rat& x : scaled[i].coeffs()) den = lcm(den, x.get_den());
    }
    // integral cofactors: sum (den * scaled_i) f_i = den * cert.g
    std::vector<IntPoly> ic(cof.size());
    Int common = den;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        Rat c2;
        IntPoly prim = scaled[i].scaled(Rat(den)).to_primitive_int(c2);
        // c2 is integral by construction
        ic[i] = prim * IntPoly::constant(c2.get_num());
        if (!ic[i].is_zero()) common = gcd(common, ic[i].content());
    }
    if (common > 1) {
        den /= common;
        for (auto& p : ic) {
            std::vector<Int> cs = p.coeffs();
            for (Int& x : cs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), common.get_mpz_t());
            p = IntPoly(std::move(cs));
        }
    }
    cert.c = den;
    cert.v = 0;
    cert.cofactors.reserve(ic.size());
    for (auto& p : ic) cert.cofactors.push_back(LaurentPoly::from_poly(std::move(p)));
    return cert;
}

namespace {

// gcd of the generators in F_p[t] with Bezout cofactors
ModPoly modular_gcd(const std::vector<IntPoly>& fs, const Int& p, std::vector<ModPoly>& cof) {
    ModPoly g = ModPoly::from_int(fs[0], p);
    cof.assign(fs.size(), ModPoly({}, p));
    cof[0] = ModPoly({1}, p);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        ModPoly fi = ModPoly::from_int(fs[i], p);
        if (fi.is_zero()) continue;
        if (g.is_zero()) {
            g = fi;
            for (std::size_t j = 0; j < i; ++j) cof[j] = ModPoly({}, p);
            cof[i] = ModPoly({1}, p);
            continue;
        }
        ModPoly a({}, p), b({}, p);
        ModPoly g2 = modpoly_gcdext(g, fi, a, b);
        for (std::size_t j = 0; j < i; ++j) cof[j] = cof[j] * a;
        cof[i] = b;
        g = g2;
    }
    return g;
}

struct IdealElt {
    LaurentPoly value;
    std::vector<LaurentPoly> cof; // value = sum cof_i f_i

    IdealElt scaled_by(const LaurentPoly& s) const {
        IdealElt out;
        out.value = value * s;
        out.cof.reserve(cof.size());
        for (const auto& c : cof) out.cof.push_back(c * s);
        return out;
    }
    // x * y stays in the ideal: cofactors of x times the value of y
    IdealElt times(const IdealElt& y) const { return scaled_by(y.value); }
    IdealElt plus(const IdealElt& y) const {
        IdealElt out;
        out.value = value + y.value;
        out.cof.resize(cof.size());
        for (std::size_t i = 0; i < cof.size(); ++i) out.cof[i] = cof[i] + y.cof[i];
        return out;
    }
};

} // namespace

bool is_unit_ideal(const LaurentIdeal& gens) {
    if (gens.empty()) throw error("is_unit_ideal: empty ideal");
    GcdCertificate cert = qgcd_certificate(gens);
    if (cert.g.degree() != 0) return false; // gcd over Q[t] not a monomial
    for (const Int& p : prime_factors(cert.c)) {
        std::vector<ModPoly> unused;
        ModPoly g = modular_gcd(gens.generators(), p, unused);
        if (g.is_zero() || !g.is_monomial()) return false;
    }
    return true;
}

std::optional<std::vector<LaurentPoly>> unit_certificate(const LaurentIdeal& gens) {
    if (gens.empty()) throw error("unit_certificate: empty ideal");
    GcdCertificate cert = qgcd_certificate(gens);
    if (cert.g.degree() != 0) return std::nullopt;
    // cert: sum cof_i f_i = c  (g = 1, v = 0)
    const auto& fs = gens.generators();
    IdealElt c_elt{LaurentPoly::constant(cert.c), cert.cofactors};

    if (cert.c == 1) return c_elt.cof;

    // factor c with multiplicities
    std::map<Int, unsigned> fac;
    {
        Int n = abs(cert.c);
        for (const Int& p : prime_factors(n)) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fac[p] = e;
        }
    }

    std::optional<IdealElt> z;
    for (const auto& [p, e] : fac) {
        std::vector<ModPoly> mcof;
        ModPoly g = modular_gcd(fs, p, mcof);
        if (g.is_zero() || !g.is_monomial()) return std::nullopt;
        // make the combination exactly t^k mod p
        const long k = g.degree();
        Int lead = g.coeffs().back();
        Int inv;
        mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), p.get_mpz_t());
        IdealElt u;
        u.cof.resize(fs.size());
        u.value = LaurentPoly();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            LaurentPoly ci = LaurentPoly::from_poly(mcof[i].scaled(inv).lift()).times_t(-k);
            u.cof[i] = ci;
            u.value = u.value + ci * LaurentPoly::from_poly(fs[i]);
        }
        // u.value = 1 + p * s; raise to 1 + p^e * s'
        IdealElt w = u;
        for (unsigned i = 1; i < e; ++i) {
            // w <- w^p (still = 1 mod p^{i+1})
            IdealElt acc = w;
            for (Int r = 1; r < p; ++r) acc = acc.times(w);
            w = acc;
        }
        if (!z) {
            z = w;
        } else {
            // z <- z + w - z*w ; 1 - value picks up another prime power factor
            IdealElt zw = w.scaled_by(z->value);
            *z = z->plus(w);
            z->value = z->value - zw.value;
            for (std::size_t i = 0; i < z->cof.size(); ++i) z->cof[i] = z->cof[i] - zw.cof[i];
        }
    }

    // z.value = 1 + c * w; subtract w * (certificate of c)
    LaurentPoly diff = z->value - LaurentPoly::one();
    LaurentPoly w = diff.divided_exact(cert.c);
    std::vector<LaurentPoly> out(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) out[i] = z->cof[i] - c_elt.cof[i] * w;
    return out;
}

bool in_span_bounded(const IntPoly& target, const std::vector<IntPoly>& gens,
                     std::size_t max_deg) {
    if (target.is_zero()) return true;
    // columns: t^j * g_i for 0 <= j <= max_deg; rows: coefficients
    std::size_t height = target.coeffs().size();
    for (const auto& g : gens)
        if (!g.is_zero()) height = std::max(height, g.coeffs().size() + max_deg);
    std::vector<std::vector<Int>> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        for (std::size_t j = 0; j <= max_deg; ++j) {
            std::vector<Int> col(height);
            for (std::size_t i = 0; i < g.coeffs().size(); ++i) col[i + j] = g.coeffs()[i];
            cols.push_back(std::move(col));
        }
    }
    if (cols.empty()) return false;
    IntMatrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < height; ++i) m.at(i, j) = cols[j][i];
    std::vector<Int> b(height);
    for (std::size_t i = 0; i < target.coeffs().size(); ++i) b[i] = target.coeffs()[i];
    return solve_linear_diophantine(m, b).has_value();
}

} // namespace polyz
