#pragma once

#include "polyz/matrix.hpp"

#include <optional>
#include <vector>

namespace polyz {

// a x^2 + b xy + c y^2 over Z.
struct BQForm {
    Int a, b, c;

    Int discriminant() const { return b * b - 4 * a * c; }
    Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    bool operator==(const BQForm&) const = default;

    // change of variables (x,y) -> P(x,y); returns f composed with P
    BQForm transformed(const IntMatrix& p) const;
};

struct Witness {
    Int x, y;
    Int value; // +1 or -1
};

// The cyclicity form of a 2x2 action: Q(x,y) = det[v | Av] for v = (x,y).
// For A = [[a,b],[c,d]] this is (c, d-a, -b).
BQForm cyclicity_form(const IntMatrix& a);

// Full rho-cycle of reduced forms properly equivalent to f. Requires D > 0
// and not a perfect square.
std::vector<BQForm> reduce_cycle(const BQForm& f);

// Does f represent +1 or -1? Definite case by bounded search, square
// discriminant by factoring into linear forms, indefinite case through the
// reduction cycle with the transformation accumulated for the witness.
std::optional<Witness> represents_pm_one(const BQForm& f);

// If the cyclicity form of A represents +-1 with witness v, return v and
// P = [v | Av]; then |det P| = 1 and P^-1 A P is a companion matrix.
struct CompanionConjugacy {
    std::vector<Int> v;
    IntMatrix p;
};

std::optional<CompanionConjugacy> companion_conjugacy(const IntMatrix& a);

} // namespace polyz
