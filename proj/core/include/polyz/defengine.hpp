#pragma once

#include "polyz/catalog.hpp"
#include "polyz/groups.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyz {

enum class BoundDir { Lower, Upper };

struct DefBound {
    BoundDir dir = BoundDir::Lower;
    long value = 0;
    std::string rule;
    std::string citation;
    std::string inputs;
};

struct DefReport {
    std::string group_id;
    std::optional<long> lo, hi;
    bool exact = false;
    std::vector<DefBound> bounds;
    // invariants block
    std::optional<std::size_t> hirsch;
    std::optional<bool> orientable;
    std::optional<std::size_t> beta_q, beta_f2, beta_f3, beta_f5;
};

DefBound presentation_lower(const Presentation& p);

// def <= 2 - beta_1(.; R) for orientable PD4 groups with chi = 0;
// F_2 is always allowed, Q and odd primes only for orientable specs.
std::optional<DefBound> lemma1_upper(const Presentation& p, const FieldSpec& field,
                                     bool orientable);

// def <= 0 for torsion-free virtually poly-Z of Hirsch length 4.
DefBound lemma2_upper(std::size_t hirsch);

// From def(H) <= def_sub_upper for an index-`index` subgroup H:
// def(G) <= floor((def(H) - 1) / index) + 1.
DefBound lemma3_transfer(long def_sub_upper, unsigned long index);

// def(K x| Z) >= 1 + def(K) - s when K is s-generated.
DefBound lemma4_lower(long def_k, unsigned long s);

enum class Lemma7Result { Exactly0, ExactlyMinus1, UpperMinus1, Inconclusive };

// Decision for pi = Z^3 x|_theta Z, theta = [[1,0],[mu,A]], mu = (m,0)^T.
Lemma7Result lemma7_decide(const IntMatrix& a, const Int& m);

// Upper bound -1 when E_1(tI - theta) is a proper ideal of Z[t, t^-1].
std::optional<DefBound> e1_obstruction_upper(const IntMatrix& theta);

// v with |entries| <= bound and det([v | theta v | theta^2 v]) = +-1, if any.
std::optional<std::vector<Int>> cyclic_vector_search(const IntMatrix& theta, long bound);

struct AnalyzeOptions {
    bool use_catalog = true;
    // restrict lemma1 to one field ("q", "f2", "f3", "f5"); empty = try all
    std::string field;
};

DefReport analyze(const GroupSpec& spec, const AnalyzeOptions& opts = {});

Int mobius(unsigned long n);
Int witt_rank(unsigned long beta, unsigned long k);

// (lower, upper) window for Hirsch length n, first Betti number beta;
// class2 selects the nilpotency-class-2 lower bound.
std::pair<Int, Int> bounds_window(unsigned long n, unsigned long beta, bool class2);

// 2-generator poly-Z family of Hirsch length n with exact deficiency
// 2 - floor((n+1)/2).
std::pair<Presentation, DefReport> companion_family(unsigned long n);

} // namespace polyz
