#include "polyz/defengine.hpp"

#include "polyz/laurent.hpp"
#include "polyz/quadform.hpp"
#include "polyz/smith.hpp"

#include <algorithm>

namespace polyz {

namespace {

Int binom2(const Int& n) { return n * (n - 1) / 2; }

DefBound make_bound(BoundDir dir, long value, std::string rule, std::string citation,
                    std::string inputs = {}) {
    DefBound b;
    b.dir = dir;
    b.value = value;
    b.rule = std::move(rule);
    b.citation = std::move(citation);
    b.inputs = std::move(inputs);
    return b;
}

} // namespace

DefBound presentation_lower(const Presentation& p) {
    long v = static_cast<long>(p.generators.size()) - static_cast<long>(p.relators.size());
    return make_bound(BoundDir::Lower, v, "presentation_lower",
                      "def >= #generators - #relators for any finite presentation",
                      std::to_string(p.generators.size()) + " generators, " +
                          std::to_string(p.relators.size()) + " relators");
}

std::optional<DefBound> lemma1_upper(const Presentation& p, const FieldSpec& field,
                                     bool orientable) {
    bool is_f2 = field.kind == Field::Fp && field.p == 2;
    if (!is_f2 && !orientable) return std::nullopt;
    std::size_t b = beta1(p, field);
    std::string fname = field.kind == Field::Q ? "Q" : "F_" + field.p.get_str();
    return make_bound(BoundDir::Upper, 2 - static_cast<long>(b), "lemma1_upper",
                      "def <= 2 - beta_1 over R for an R-orientable PD4 group with chi = 0",
                      "beta_1(" + fname + ") = " + std::to_string(b));
}

DefBound lemma2_upper(std::size_t hirsch) {
    if (hirsch != 4) throw error("lemma2_upper: requires Hirsch length 4");
    return make_bound(BoundDir::Upper, 0, "lemma2_upper",
                      "vanishing L2 Betti numbers with c.d. > 2 force def <= 0");
}

DefBound lemma3_transfer(long def_sub_upper, unsigned long index) {
    if (index == 0) throw error("lemma3_transfer: index must be >= 1");
    long num = def_sub_upper - 1;
    long idx = static_cast<long>(index);
    long q = num / idx;
    if (num % idx != 0 && num < 0) --q; // floor division
    return make_bound(BoundDir::Upper, q + 1, "lemma3_transfer",
                      "def(H) >= [G:H] def(G) + 1 - [G:H] for a finite-index subgroup H",
                      "def(H) <= " + std::to_string(def_sub_upper) + ", index " +
                          std::to_string(index));
}

DefBound lemma4_lower(long def_k, unsigned long s) {
    if (s == 0) throw error("lemma4_lower: s must be >= 1");
    return make_bound(BoundDir::Lower, 1 + def_k - static_cast<long>(s), "lemma4_lower",
                      "def(K x| Z) >= 1 + def(K) - s when K is s-generated",
                      "def(K) = " + std::to_string(def_k) + ", s = " + std::to_string(s));
}

Lemma7Result lemma7_decide(const IntMatrix& a, const Int& m) {
    if (a.rows() != 2 || a.cols() != 2) throw error("lemma7_decide: A must be 2x2");
    if (abs(determinant(a)) != 1) throw error("lemma7_decide: A must be unimodular");
    IntMatrix rel = IntMatrix::identity(3) - theta3_matrix(a, m);
    Int g = 0;
    for (const Int& x : minors(rel, 2)) g = gcd(g, x);
    if (g == 0) throw error("lemma7_decide: all 2x2 minors of I - theta vanish (beta > 2)");
    auto cc = companion_conjugacy(a);
    IntMatrix i2a = IntMatrix::identity(2) - a;
    if (cc && generates_cokernel_allow_infinite(i2a, {m, Int(0)})) return Lemma7Result::Exactly0;
    if (g > 1 && cc) return Lemma7Result::ExactlyMinus1; // L = Z^2 x|_A Z is 2-generated
    if (g > 1) return Lemma7Result::UpperMinus1;
    return Lemma7Result::Inconclusive;
}

std::optional<DefBound> e1_obstruction_upper(const IntMatrix& theta) {
    if (!theta.square()) throw error("e1_obstruction_upper: non-square matrix");
    if (abs(determinant(theta)) != 1) throw error("e1_obstruction_upper: non-unimodular matrix");
    if (is_unit_ideal(elementary_ideal_E1(theta))) return std::nullopt;
    return make_bound(BoundDir::Upper, -1, "e1_obstruction_upper",
                      "E_1(tI - theta) proper obstructs the fibre being a cyclic module, "
                      "so def <= -1",
                      "E_1 is a proper ideal");
}

std::optional<std::vector<Int>> cyclic_vector_search(const IntMatrix& theta, long bound) {
    if (theta.rows() != 3 || theta.cols() != 3) throw error("cyclic_vector_search: need 3x3");
    if (abs(determinant(theta)) != 1) throw error("cyclic_vector_search: non-unimodular matrix");
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y)
            for (long z = -bound; z <= bound; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                std::vector<Int> v{x, y, z};
                std::vector<Int> tv = theta.apply(v);
                std::vector<Int> ttv = theta.apply(tv);
                IntMatrix p(3, 3);
                for (std::size_t i = 0; i < 3; ++i) {
                    p.at(i, 0) = v[i];
                    p.at(i, 1) = tv[i];
                    p.at(i, 2) = ttv[i];
                }
                if (abs(determinant(p)) == 1) return v;
            }
    return std::nullopt;
}

namespace {

std::string describe_spec(const GroupSpec& spec) {
    switch (spec.kind) {
    case GroupKind::SemidirectZnZ:
        return "SemidirectZnZ[" + std::to_string(spec.a.rows()) + "]";
    case GroupKind::Theta3:
        return "Theta3[m=" + spec.m.get_str() + "]";
    case GroupKind::Tower:
        return "Tower[" + std::to_string(spec.tower.size()) + "]";
    case GroupKind::Catalog:
        return spec.name;
    case GroupKind::RawPresentation:
        return "Presentation[" + std::to_string(spec.pres.generators.size()) + " gens]";
    }
    return "?";
}

void add_lemma7_bounds(std::vector<DefBound>& bs, Lemma7Result r) {
    switch (r) {
    case Lemma7Result::Exactly0:
        bs.push_back(make_bound(BoundDir::Lower, 0, "lemma7_exact0",
                                "A is companion-conjugate and mu generates Cok(I - A), "
                                "so the fibre is cyclic and def = 0"));
        bs.push_back(make_bound(BoundDir::Upper, 0, "lemma7_exact0",
                                "A is companion-conjugate and mu generates Cok(I - A), "
                                "so the fibre is cyclic and def = 0"));
        break;
    case Lemma7Result::ExactlyMinus1:
        bs.push_back(make_bound(BoundDir::Upper, -1, "lemma7_exactminus1",
                                "a common prime divides the 2x2 minors of I - theta, so "
                                "beta_1(F_p) >= 3 and def <= -1"));
        bs.push_back(make_bound(BoundDir::Lower, -1, "lemma7_exactminus1",
                                "L = Z^2 x|_A Z is 2-generated with def(L) = 0, so "
                                "def >= -1"));
        break;
    case Lemma7Result::UpperMinus1:
        bs.push_back(make_bound(BoundDir::Upper, -1, "lemma7_upperminus1",
                                "a common prime divides the 2x2 minors of I - theta, so "
                                "beta_1(F_p) >= 3 and def <= -1"));
        break;
    case Lemma7Result::Inconclusive:
        break;
    }
}

} // namespace

DefReport analyze(const GroupSpec& spec_in, const AnalyzeOptions& opts) {
    GroupSpec spec = spec_in;
    std::optional<CatalogEntry> entry;
    if (spec.kind == GroupKind::Catalog) {
        entry = catalog_lookup(spec.name);
        spec = entry->spec;
    }

    DefReport rep;
    rep.group_id = entry ? entry->name : describe_spec(spec_in);

    std::optional<Presentation> pres =
        entry ? std::optional<Presentation>(entry->pres) : presentation_of(spec);
    if (pres) {
        rep.beta_q = beta1(*pres, FieldSpec::rationals());
        rep.beta_f2 = beta1(*pres, FieldSpec::prime(2));
        rep.beta_f3 = beta1(*pres, FieldSpec::prime(3));
        rep.beta_f5 = beta1(*pres, FieldSpec::prime(5));
    }
    try {
        rep.hirsch = hirsch_length(spec);
    } catch (const error&) {
    }
    try {
        rep.orientable = orientable_over_Q(spec);
    } catch (const error&) {
    }

    std::vector<DefBound>& bs = rep.bounds;
    if (pres) bs.push_back(presentation_lower(*pres));

    if (rep.hirsch && *rep.hirsch == 4) {
        bs.push_back(lemma2_upper(4));
        bs.push_back(make_bound(BoundDir::Lower, -2, "hirsch4_lower",
                                "Hirsch length 4: mapping torus over a 3-generated kernel of "
                                "deficiency 0 when beta > 0, amalgam over an index-2 Hirsch-3 "
                                "subgroup when beta = 0; either way def >= -2"));
        if (pres) {
            bool orient = rep.orientable.value_or(false);
            auto try_field = [&](const char* tag, const FieldSpec& f) {
                if (!opts.field.empty() && opts.field != tag) return;
                if (auto b = lemma1_upper(*pres, f, orient)) bs.push_back(*b);
            };
            try_field("f2", FieldSpec::prime(2));
            try_field("q", FieldSpec::rationals());
            try_field("f3", FieldSpec::prime(3));
            try_field("f5", FieldSpec::prime(5));
        }
    }

    if (spec.kind == GroupKind::Theta3) {
        try {
            add_lemma7_bounds(bs, lemma7_decide(spec.a, spec.m));
        } catch (const error&) {
            // beta > 2 for this theta; the 3.3 rules do not apply
        }
    }

    if (spec.kind == GroupKind::SemidirectZnZ && spec.a.rows() == 3) {
        IntMatrix rel = IntMatrix::identity(3) - spec.a;
        CokernelInvariants cok = cokernel_invariants(rel);
        if (cok.torsion.empty()) { // H_1 of the fibre section is torsion free
            if (auto b = e1_obstruction_upper(spec.a)) bs.push_back(*b);
            std::size_t beta = 1 + cok.free_rank;
            if (beta == 1) { // K = pi', a 2-knot group situation
                bs.push_back(make_bound(BoundDir::Lower, -1, "knot_lower",
                                        "torsion-free solvable 2-knot groups have "
                                        "deficiency -1 or 0"));
                if (auto v = cyclic_vector_search(spec.a, 10)) {
                    std::string inputs = "cyclic vector (" + (*v)[0].get_str() + ", " +
                                         (*v)[1].get_str() + ", " + (*v)[2].get_str() + ")";
                    bs.push_back(make_bound(BoundDir::Lower, 0, "cyclic_module",
                                            "the fibre Z^3 is a cyclic module (explicit "
                                            "cyclic vector), so def = 0",
                                            inputs));
                    bs.push_back(make_bound(BoundDir::Upper, 0, "cyclic_module",
                                            "the fibre Z^3 is a cyclic module (explicit "
                                            "cyclic vector), so def = 0",
                                            inputs));
                }
            }
        }
    }

    if (entry && opts.use_catalog) {
        bs.push_back(make_bound(BoundDir::Lower, entry->lo, "catalog", entry->citation));
        bs.push_back(make_bound(BoundDir::Upper, entry->hi, "catalog", entry->citation));
    }

    for (const DefBound& b : bs) {
        if (b.dir == BoundDir::Lower)
            rep.lo = rep.lo ? std::max(*rep.lo, b.value) : b.value;
        else
            rep.hi = rep.hi ? std::min(*rep.hi, b.value) : b.value;
    }
    rep.exact = rep.lo && rep.hi && *rep.lo == *rep.hi;
    if (rep.lo && rep.hi && *rep.lo > *rep.hi)
        throw error("analyze: inconsistent bounds for " + rep.group_id);
    return rep;
}

Int mobius(unsigned long n) {
    if (n == 0) throw error("mobius: n must be >= 1");
    Int result = 1;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
    }
    if (m > 1) result = -result;
    return result;
}

Int witt_rank(unsigned long beta, unsigned long k) {
    if (beta < 1 || k < 1) throw error("witt_rank: beta, k must be >= 1");
    Int sum = 0;
    for (unsigned long d = 1; d <= k; ++d) {
        if (k % d) continue;
        Int term;
        mpz_ui_pow_ui(term.get_mpz_t(), beta, k / d);
        sum += mobius(d) * term;
    }
    if (sum % k != 0) throw error("witt_rank: non-integral value");
    return sum / k;
}

std::pair<Int, Int> bounds_window(unsigned long n, unsigned long beta, bool class2) {
    if (beta < 1 || beta > n) throw error("bounds_window: need 1 <= beta <= n");
    Int nn = n, bb = beta;
    Int upper = nn - binom2(bb);
    if (class2) {
        if (nn > bb * (bb + 1) / 2)
            throw error("bounds_window: class2 requires n <= binom(beta+1, 2)");
        return {nn - binom2(bb) - bb * (nn - bb), upper};
    }
    return {nn - binom2(nn), upper};
}

std::pair<Presentation, DefReport> companion_family(unsigned long n) {
    if (n < 2) throw error("companion_family: n must be >= 2");
    Presentation p;
    p.generators = {"t", "x"};
    unsigned long half = (n + 1) / 2;
    for (unsigned long i = 1; i < half; ++i) {
        Word conj = word_concat(word_concat(word_pow(0, i), word_pow(1, 1)),
                                word_pow(0, -static_cast<long>(i)));
        p.relators.push_back(word_commutator(word_pow(1, 1), conj));
    }
    // t^{n-1} x t^{1-n} = x (the w = 1 case)
    Word fin = word_concat(word_concat(word_pow(0, n - 1), word_pow(1, 1)),
                           word_pow(0, 1 - static_cast<long>(n)));
    fin = word_concat(fin, word_pow(1, -1));
    p.relators.push_back(fin);

    DefReport rep;
    rep.group_id = "CompanionFamily(" + std::to_string(n) + ")";
    rep.hirsch = n;
    rep.bounds.push_back(presentation_lower(p));
    Int def_zn = Int(n) - binom2(Int(n));
    rep.bounds.push_back(lemma3_transfer(def_zn.get_si(), n - 1));
    long lo = 2 - static_cast<long>(half);
    for (const DefBound& b : rep.bounds) {
        if (b.dir == BoundDir::Lower)
            rep.lo = rep.lo ? std::max(*rep.lo, b.value) : b.value;
        else
            rep.hi = rep.hi ? std::min(*rep.hi, b.value) : b.value;
    }
    if (!rep.lo || !rep.hi || *rep.lo != lo || *rep.hi != lo)
        throw error("companion_family: bounds do not certify the closed form");
    rep.exact = true;
    return {p, rep};
}

} // namespace polyz
