#include "polyz/catalog.hpp"

#include <charconv>

namespace polyz {

namespace {

Word g(std::size_t i, long e = 1) { return word_pow(i, e); }

Word cm(std::size_t i, std::size_t j) { return word_commutator(g(i), g(j)); }

Word w(std::initializer_list<Syllable> ss) { return word_normalized(Word(ss)); }

CatalogEntry raw_entry(std::string name, Presentation pres, long lo, long hi,
                       std::string citation, bool orientable, std::size_t hirsch) {
    CatalogEntry e;
    e.name = std::move(name);
    e.pres = std::move(pres);
    e.spec = GroupSpec::raw(e.pres);
    e.spec.hirsch_override = hirsch;
    e.spec.orientable_override = orientable;
    e.lo = lo;
    e.hi = hi;
    e.citation = std::move(citation);
    e.orientable = orientable;
    e.hirsch = hirsch;
    e.matrix_based = false;
    return e;
}

CatalogEntry matrix_entry(std::string name, GroupSpec spec, Presentation pres, long lo, long hi,
                          std::string citation) {
    CatalogEntry e;
    e.name = std::move(name);
    e.spec = std::move(spec);
    e.pres = std::move(pres);
    e.lo = lo;
    e.hi = hi;
    e.citation = std::move(citation);
    e.orientable = orientable_over_Q(e.spec);
    e.hirsch = hirsch_length(e.spec);
    e.matrix_based = true;
    return e;
}

CatalogEntry make_z4() {
    IntMatrix i3 = IntMatrix::identity(3);
    return matrix_entry("Z4", GroupSpec::semidirect(i3), build_semidirect_presentation(i3), -2, -2,
                        "Z^4: 4 generators, 6 commutator relations; beta_1(Q)=4 gives def <= -2");
}

CatalogEntry make_gamma_q(long q) {
    if (q < 1) throw error("GammaQxZ: q must be >= 1");
    if (q == 1) {
        Presentation p;
        p.generators = {"t", "u", "v"};
        Word c = cm(1, 2);
        p.relators = {cm(0, 1), cm(0, 2), word_commutator(g(1), c), word_commutator(g(2), c)};
        return raw_entry("GammaQxZ(1)", p, -1, -1,
                         "Heisenberg x Z: 3-generator 4-relator presentation is optimal "
                         "since beta_1(Q)=3 gives def <= -1",
                         true, 4);
    }
    Presentation p;
    p.generators = {"t", "u", "v", "z"};
    p.relators = {cm(0, 1), cm(0, 2), cm(0, 3), cm(1, 3), cm(2, 3),
                  word_concat(cm(1, 2), g(3, -q))};
    return raw_entry("GammaQxZ(" + std::to_string(q) + ")", p, -2, -2,
                     "Gamma_q x Z, q > 1: beta_1(F_p)=4 for p | q gives def <= -2; "
                     "mapping-torus presentation realizes -2",
                     true, 4);
}

CatalogEntry make_b1xz() {
    Presentation p;
    p.generators = {"t", "u", "v", "x"};
    p.relators = {w({{0, 1}, {3, 1}, {0, -1}, {3, 1}}), cm(1, 3), cm(2, 3),
                  cm(0, 1), cm(0, 2), cm(1, 2)};
    return raw_entry("B1xZ", p, -2, -2,
                     "B_1 x Z: beta_1(F_2)=4 gives def <= -2; 4-generator 6-relator "
                     "presentation realizes -2",
                     false, 4);
}

CatalogEntry make_b2xz() {
    Presentation p;
    p.generators = {"t", "u", "v"};
    Word tut = w({{0, 1}, {1, 1}, {0, -1}});
    p.relators = {w({{0, 2}, {1, 1}, {0, -2}, {1, -1}}), cm(0, 2),
                  word_commutator(g(1), tut), cm(1, 2)};
    return raw_entry("B2xZ", p, -1, -1,
                     "B_2 x Z: beta_1(F_2)=3 gives def <= -1; the 3-generator "
                     "4-relator presentation realizes -1",
                     false, 4);
}

CatalogEntry make_upsilon() {
    Presentation p;
    p.generators = {"t", "u"};
    Word c1 = cm(0, 1);
    Word c2 = word_commutator(g(0), c1);
    p.relators = {word_commutator(g(0), c2), word_commutator(g(1), c1)};
    return raw_entry("Upsilon", p, 0, 0,
                     "class-3 nilpotent mapping torus: balanced 2-generator presentation, "
                     "def <= 0 for these groups",
                     true, 4);
}

CatalogEntry make_g4xz() {
    Presentation p;
    p.generators = {"t", "u", "x"};
    Word uxu = w({{1, 1}, {2, 1}, {1, -1}});
    p.relators = {cm(0, 1), cm(0, 2), w({{1, 2}, {2, 1}, {1, -2}, {2, -1}}),
                  word_commutator(g(2), uxu)};
    return raw_entry("G4xZ", p, -1, -1,
                     "G_4 x Z: beta_1(F_2)=3 gives def <= -1; 3-generator 4-relator "
                     "presentation realizes -1",
                     true, 4);
}

CatalogEntry make_g2xz() {
    Presentation p;
    p.generators = {"t", "x", "y", "u"};
    p.relators = {w({{0, 1}, {1, 1}, {0, -1}, {1, 1}}), w({{0, 1}, {2, 1}, {0, -1}, {2, 1}}),
                  cm(1, 2), cm(0, 3), cm(1, 3), cm(2, 3)};
    return raw_entry("G2xZ", p, -2, -2,
                     "G_2 x Z: beta_1(F_2)=4 gives def <= -2; mapping-torus presentation "
                     "realizes -2",
                     true, 4);
}

CatalogEntry make_theta_example() {
    IntMatrix theta{{1, 0, 0}, {1, 5, 18}, {0, 3, 11}};
    Presentation p;
    p.generators = {"t", "x", "y", "z"};
    p.relators = {w({{0, 1}, {1, 1}, {0, -1}, {2, -1}, {1, -1}}),
                  w({{0, 1}, {2, 1}, {0, -1}, {3, -3}, {2, -5}}),
                  w({{0, 1}, {3, 1}, {0, -1}, {3, -11}, {2, -18}}),
                  cm(1, 2), cm(1, 3)};
    return matrix_entry("ThetaExample", GroupSpec::semidirect(theta), p, -1, -1,
                        "Z^3 x|_theta Z with E_1(tI - theta) = (t+1, 3) proper, so the "
                        "fibre is not a cyclic module and def = -1");
}

CatalogEntry make_g5_semidirect(long m) {
    IntMatrix a{{0, -1}, {1, 1}};
    return matrix_entry("G5semidirect(" + std::to_string(m) + ")", GroupSpec::theta3(a, m),
                        build_theta3_presentation(a, m), 0, 0,
                        "G_5 x| Z: the order-6 action is companion-conjugate with trivial "
                        "Cok(I-A), so def = 0 for every m");
}

CatalogEntry make_kbkb() {
    Presentation p;
    p.generators = {"x", "y", "a", "b"};
    p.relators = {w({{0, 1}, {1, 1}, {0, -1}, {1, 1}}), w({{2, 1}, {3, 1}, {2, -1}, {3, 1}}),
                  cm(0, 2), cm(0, 3), cm(1, 2), cm(1, 3)};
    return raw_entry("KbKb", p, -2, -2,
                     "pi_1(Kb) x pi_1(Kb): beta_1(F_2)=4 gives def <= -2; product "
                     "presentation realizes -2",
                     false, 4);
}

CatalogEntry make_knot2a() {
    Presentation p;
    p.generators = {"a", "b"};
    p.relators = {w({{1, 1}, {0, 2}, {1, -2}, {0, -3}}), w({{1, 2}, {0, 1}, {1, -3}, {0, -2}})};
    return raw_entry("knot2a", p, 0, 0,
                     "solvable 2-knot group with a balanced presentation, so def = 0", true, 4);
}

CatalogEntry make_knot2b() {
    IntMatrix theta{{0, 0, 1}, {-5, 2, 0}, {-8, 3, -7}};
    Presentation p;
    p.generators = {"t", "x", "y", "z"};
    p.relators = {cm(1, 3), cm(2, 3),
                  w({{0, 1}, {1, 1}, {0, -1}, {3, 8}, {2, 5}}),
                  w({{0, 1}, {2, 1}, {0, -1}, {3, -3}, {2, -2}}),
                  w({{0, 1}, {3, 1}, {0, -1}, {3, 7}, {1, -1}})};
    return matrix_entry("knot2b", GroupSpec::semidirect(theta), p, -1, 0,
                        "solvable 2-knot group Z^3 x|_theta Z; torsion-free solvable 2-knot "
                        "groups have deficiency -1 or 0");
}

CatalogEntry make_g2b2() {
    Presentation p;
    p.generators = {"s", "t"};
    p.relators = {w({{0, 1}, {1, 2}, {0, -1}, {1, 2}}),
                  w({{0, 1}, {1, 1}, {0, 2}, {1, -1}, {0, -1}, {1, 1}, {0, 2}, {1, -1}})};
    return raw_entry("G2B2", p, 0, 0,
                     "flat 4-manifold group G_2 *_phi B_2: balanced 2-generator "
                     "presentation, so def = 0",
                     false, 4);
}

CatalogEntry make_g2b1() {
    Presentation p;
    p.generators = {"a", "b", "c", "t"};
    p.relators = {w({{1, 1}, {0, 1}, {1, -1}, {0, 1}}), cm(2, 0), cm(2, 1),
                  w({{3, 1}, {1, 2}, {3, -1}, {1, 2}}), w({{3, 1}, {2, 1}, {3, -1}, {2, 1}}),
                  w({{3, 2}, {0, -1}})};
    return raw_entry("G2B1", p, -1, -1,
                     "flat 4-manifold group G_2 *_phi B_1: beta_1(F_2)=3 gives def <= -1, "
                     "and a deficiency -1 presentation is known",
                     false, 4);
}

CatalogEntry make_g2g2() {
    Presentation p;
    p.generators = {"x", "y", "t", "s"};
    p.relators = {cm(0, 1), w({{2, 1}, {0, 1}, {2, -1}, {0, 1}}),
                  w({{2, 1}, {1, 1}, {2, -1}, {1, 1}}), w({{3, 1}, {1, 1}, {3, -1}, {1, 1}}),
                  w({{3, 1}, {2, 2}, {3, -1}, {2, 2}}), w({{3, 2}, {0, -1}})};
    return raw_entry("G2G2", p, -1, -1,
                     "flat 4-manifold group G_2 *_phi G_2: beta_1(F_2)=3 gives def <= -1, "
                     "and a deficiency -1 presentation is known",
                     false, 4);
}

CatalogEntry make_g6b3() {
    Presentation p;
    p.generators = {"a", "b", "s"};
    p.relators = {w({{0, 1}, {1, 2}, {0, -1}, {1, 2}}),
                  w({{1, 1}, {0, 2}, {1, -1}, {0, 2}}),
                  w({{2, 1}, {0, 2}, {2, -1}, {0, 2}}),
                  w({{2, 1}, {1, 1}, {2, -1}, {1, -1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, -2}}),
                  w({{2, 1}, {0, 1}, {1, 1}, {0, -1}, {2, -1}, {1, -1},
                     {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {1, 2}}),
                  w({{2, 2}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, -2}})};
    return raw_entry("G6B3", p, -2, -1,
                     "flat 4-manifold group G_6 *_phi B_3: beta_1(F_2)=3 gives def <= -1; "
                     "the known presentation has deficiency -2 and optimality is open",
                     false, 4);
}

CatalogEntry make_s2222xz() {
    Presentation p;
    p.generators = {"a", "b", "c", "d", "h", "z"};
    for (std::size_t i = 0; i < 4; ++i)
        p.relators.push_back(w({{i, 2}, {4, -1}}));
    p.relators.push_back(w({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, -1}}));
    for (std::size_t i = 0; i < 4; ++i) p.relators.push_back(cm(4, i));
    for (std::size_t i = 0; i < 5; ++i) p.relators.push_back(cm(5, i));
    return raw_entry("S2222xZ", p, -2, -2,
                     "Nil^3 Seifert group over S(2,2,2,2) times Z: orientable with "
                     "beta_1(F_2)=4, so def = -2; the kernel is 3-generated of deficiency 0",
                     true, 4);
}

CatalogEntry make_nil_s2222(long al, long be, long ga, long de, long e) {
    if (al % 2 == 0 || be % 2 == 0 || ga % 2 == 0 || de % 2 == 0)
        throw error("NilS2222: alpha..delta must be odd");
    if (2 * e + (al + be + ga + de) == 0)
        throw error("NilS2222: Euler invariant e + (alpha+..+delta)/2 must be nonzero");
    Presentation p;
    p.generators = {"a", "b", "c", "d", "h"};
    long pows[4] = {al, be, ga, de};
    for (std::size_t i = 0; i < 4; ++i)
        p.relators.push_back(w({{i, 2}, {4, -pows[i]}}));
    p.relators.push_back(w({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, -e}}));
    for (std::size_t i = 0; i < 4; ++i) p.relators.push_back(cm(4, i));
    std::string nm = "NilS2222(" + std::to_string(al) + "," + std::to_string(be) + "," +
                     std::to_string(ga) + "," + std::to_string(de) + "," + std::to_string(e) + ")";
    return raw_entry(std::move(nm), p, 0, 0,
                     "Nil^3 Seifert group over S(2,2,2,2): torsion-free virtually poly-Z of "
                     "Hirsch length 3, hence 3-generated with def = 0",
                     true, 3);
}

struct ParsedName {
    std::string base;
    std::vector<long> args;
};

ParsedName parse_name(const std::string& name) {
    ParsedName out;
    auto open = name.find('(');
    if (open == std::string::npos) {
        out.base = name;
        return out;
    }
    if (name.back() != ')') throw error("catalog: malformed name '" + name + "'");
    out.base = name.substr(0, open);
    std::string args = name.substr(open + 1, name.size() - open - 2);
    std::size_t pos = 0;
    while (pos <= args.size()) {
        auto comma = args.find(',', pos);
        std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw error("catalog: bad parameter in '" + name + "'");
        out.args.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

CatalogEntry catalog_lookup(const std::string& name) {
    ParsedName pn = parse_name(name);
    auto want = [&](std::size_t k) {
        if (pn.args.size() != k)
            throw error("catalog: '" + pn.base + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (pn.base == "Z4") { want(0); return make_z4(); }
    if (pn.base == "GammaQxZ") { want(1); return make_gamma_q(pn.args[0]); }
    if (pn.base == "B1xZ") { want(0); return make_b1xz(); }
    if (pn.base == "B2xZ") { want(0); return make_b2xz(); }
    if (pn.base == "Upsilon") { want(0); return make_upsilon(); }
    if (pn.base == "G4xZ") { want(0); return make_g4xz(); }
    if (pn.base == "G2xZ") { want(0); return make_g2xz(); }
    if (pn.base == "ThetaExample") { want(0); return make_theta_example(); }
    if (pn.base == "G5semidirect") { want(1); return make_g5_semidirect(pn.args[0]); }
    if (pn.base == "KbKb") { want(0); return make_kbkb(); }
    if (pn.base == "knot2a") { want(0); return make_knot2a(); }
    if (pn.base == "knot2b") { want(0); return make_knot2b(); }
    if (pn.base == "G2B2") { want(0); return make_g2b2(); }
    if (pn.base == "G2B1") { want(0); return make_g2b1(); }
    if (pn.base == "G2G2") { want(0); return make_g2g2(); }
    if (pn.base == "G6B3") { want(0); return make_g6b3(); }
    if (pn.base == "S2222xZ") { want(0); return make_s2222xz(); }
    if (pn.base == "NilS2222") {
        want(5);
        return make_nil_s2222(pn.args[0], pn.args[1], pn.args[2], pn.args[3], pn.args[4]);
    }
    throw error("catalog: unknown name '" + name + "'");
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    for (const char* n :
         {"Z4", "GammaQxZ(1)", "GammaQxZ(2)", "GammaQxZ(3)", "B1xZ", "B2xZ", "Upsilon", "G4xZ",
          "G2xZ", "ThetaExample", "G5semidirect(1)", "KbKb", "knot2a", "knot2b", "G2B2", "G2B1",
          "G2G2", "G6B3", "S2222xZ", "NilS2222(1,1,1,1,1)"})
        out.push_back(catalog_lookup(n));
    return out;
}

} // namespace polyz
