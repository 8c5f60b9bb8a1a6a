#pragma once

#include "polyz/matrix.hpp"

namespace polyz {

// U * M * V = S with U, V unimodular, S diagonal, nonnegative entries,
// d1 | d2 | ... .
struct SmithForm {
    IntMatrix u, s, v;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Invariant factors > 1 followed by nothing; zero diagonal entries are
// reported through free_rank.
struct CokernelInvariants {
    std::vector<Int> torsion; // each > 1, divisibility chain preserved
    std::size_t free_rank = 0;
};

CokernelInvariants cokernel_invariants(const IntMatrix& m);

// True iff the image of mu generates Z^n / im(M). Requires the cokernel
// to be finite; throws error otherwise ("criterion inapplicable").
bool generates_cokernel(const IntMatrix& m, const std::vector<Int>& mu);

// Same test, but also defined when the cokernel has free rank
// (Z^r + torsion is cyclic only when r <= 1).
bool generates_cokernel_allow_infinite(const IntMatrix& m, const std::vector<Int>& mu);

} // namespace polyz
