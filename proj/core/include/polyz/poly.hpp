#pragma once

#include "polyz/ints.hpp"
#include "polyz/matrix.hpp"

#include <optional>

namespace polyz {

// Polynomial over Z, coefficients lowest degree first, trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int x) { return IntPoly({std::move(x)}); }
    static IntPoly monomial(const Int& coeff, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const { return c_.back(); }

    bool operator==(const IntPoly&) const = default;

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator-() const;
    IntPoly shifted(std::size_t k) const; // * t^k

    Int content() const;           // gcd of coefficients, 0 for zero poly
    IntPoly primitive_part() const; // content removed, leading coefficient > 0
    Int eval(const Int& x) const;

    std::size_t low_order() const; // index of first nonzero coefficient

private:
    void trim();
    std::vector<Int> c_;
};

// Polynomial over Q, for gcd certificates. Lowest degree first.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly from_int(const IntPoly& p);
    static QPoly constant(Rat x) { return QPoly({std::move(x)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const { return c_.back(); }

    bool operator==(const QPoly&) const = default;

    QPoly operator+(const QPoly& rhs) const;
    QPoly operator-(const QPoly& rhs) const;
    QPoly operator*(const QPoly& rhs) const;
    QPoly scaled(const Rat& c) const;

    // euclidean division: *this = q * d + r, deg r < deg d
    void divmod(const QPoly& d, QPoly& q, QPoly& r) const;

    // clear denominators: returns primitive integer polynomial, and the
    // rational c with *this == c * primitive
    IntPoly to_primitive_int(Rat& c) const;

private:
    void trim();
    std::vector<Rat> c_;
};

// monic gcd over Q[t] with Bezout cofactors: g = a*f1 + b*f2
QPoly qpoly_gcdext(const QPoly& f1, const QPoly& f2, QPoly& a, QPoly& b);

// Polynomials over F_p, used in the unit-ideal decision.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::vector<Int> coeffs, Int p);
    static ModPoly from_int(const IntPoly& f, const Int& p);

    const Int& modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }

    ModPoly operator+(const ModPoly& rhs) const;
    ModPoly operator-(const ModPoly& rhs) const;
    ModPoly operator*(const ModPoly& rhs) const;
    ModPoly scaled(const Int& c) const;

    void divmod(const ModPoly& d, ModPoly& q, ModPoly& r) const;

    // c * t^k with c != 0?
    bool is_monomial() const {
        if (is_zero()) return false;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    IntPoly lift() const { return IntPoly(c_); } // representatives in [0, p)

private:
    void trim();
    std::vector<Int> c_;
    Int p_;
};

// monic gcd over F_p[t] with Bezout cofactors
ModPoly modpoly_gcdext(const ModPoly& f1, const ModPoly& f2, ModPoly& a, ModPoly& b);

// determinant of a matrix of integer polynomials (cofactor expansion; inputs small)
IntPoly poly_det(const std::vector<std::vector<IntPoly>>& m);

// x*I - A as a polynomial matrix
std::vector<std::vector<IntPoly>> char_matrix(const IntMatrix& a);

} // namespace polyz
