#pragma once

#include "polyz/poly.hpp"

#include <optional>

namespace polyz {

// Element of Z[t, t^-1]: value = t^shift * poly(t). Canonical form: poly has
// nonzero constant term unless zero, and the zero element has shift 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(IntPoly poly, long shift);
    static LaurentPoly from_poly(IntPoly p) { return LaurentPoly(std::move(p), 0); }
    static LaurentPoly constant(Int c) { return LaurentPoly(IntPoly::constant(std::move(c)), 0); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly t_power(long k) { return LaurentPoly(IntPoly::constant(1), k); }

    const IntPoly& poly() const { return poly_; }
    long shift() const { return shift_; }
    bool is_zero() const { return poly_.is_zero(); }
    // unit of Z[t,t^-1]: +-t^k
    bool is_unit() const { return poly_.degree() == 0 && abs(poly_.coeff(0)) == 1; }

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly times_t(long k) const { return is_zero() ? *this : LaurentPoly(poly_, shift_ + k); }
    LaurentPoly scaled(const Int& c) const;

    // divide every coefficient by c; throws if not exact
    LaurentPoly divided_exact(const Int& c) const;

private:
    IntPoly poly_;
    long shift_ = 0;
};

// Finitely generated ideal of Z[t,t^-1]. Generators are stored with shift 0
// (units of the ring are dropped) and zero generators are discarded.
class LaurentIdeal {
public:
    LaurentIdeal() = default;
    explicit LaurentIdeal(const std::vector<LaurentPoly>& gens);

    const std::vector<IntPoly>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }

private:
    std::vector<IntPoly> gens_;
};

// E_1(tI - A): the ideal of (n-1)x(n-1) minors of tI - A. Requires A square,
// n >= 2.
LaurentIdeal elementary_ideal_E1(const IntMatrix& a);

// gcd certificate over Q[t]: sum_i cofactor_i * f_i = c * g * t^v with g the
// primitive gcd of the generators, c > 0 an integer and integral cofactors.
struct GcdCertificate {
    IntPoly g;
    Int c;
    unsigned v = 0;
    std::vector<LaurentPoly> cofactors;
};

GcdCertificate qgcd_certificate(const LaurentIdeal& gens);

// Is the ideal all of Z[t,t^-1]? Decision: the Q[t]-gcd must be a monomial,
// and for every prime p dividing the certificate constant the generators'
// gcd in F_p[t] must again be a monomial. Complete because every maximal
// ideal of Z[t,t^-1] contains a rational prime.
bool is_unit_ideal(const LaurentIdeal& gens);

// Explicit cofactors with sum_i a_i * f_i = 1 whenever is_unit_ideal holds.
std::optional<std::vector<LaurentPoly>> unit_certificate(const LaurentIdeal& gens);

// Test support: does target lie in the Z[t]-span of {t^j * g_i} with cofactor
// degrees bounded by max_deg? Decided exactly via an integer linear solve.
bool in_span_bounded(const IntPoly& target, const std::vector<IntPoly>& gens,
                     std::size_t max_deg);

} // namespace polyz
