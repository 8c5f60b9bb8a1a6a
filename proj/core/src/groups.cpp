#include "polyz/groups.hpp"
#include "polyz/catalog.hpp"

namespace polyz {

Word word_normalized(const Word& w) {
    Word out;
    for (const auto& s : w) {
        if (s.exp == 0) continue;
        if (!out.empty() && out.back().gen == s.gen) {
            out.back().exp += s.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return word_normalized(out);
}

Word word_pow(std::size_t gen, const Int& exp) {
    if (exp == 0) return {};
    return {Syllable{gen, exp}};
}

Word word_commutator(const Word& a, const Word& b) {
    return word_concat(word_concat(a, b), word_concat(word_inverse(a), word_inverse(b)));
}

void validate_presentation(const Presentation& p) {
    for (const auto& r : p.relators) {
        if (r.empty()) throw error("presentation: empty relator");
        for (const auto& s : r) {
            if (s.gen >= p.generators.size()) throw error("presentation: generator index out of range");
            if (s.exp == 0) throw error("presentation: zero exponent");
        }
    }
}

GroupSpec GroupSpec::semidirect(IntMatrix action) {
    if (!action.square()) throw error("semidirect: action must be square");
    if (abs(determinant(action)) != 1) throw error("semidirect: action must be unimodular");
    GroupSpec g;
    g.kind = GroupKind::SemidirectZnZ;
    g.a = std::move(action);
    return g;
}

GroupSpec GroupSpec::theta3(IntMatrix block, Int m) {
    if (block.rows() != 2 || block.cols() != 2) throw error("theta3: block must be 2x2");
    if (abs(determinant(block)) != 1) throw error("theta3: block must be unimodular");
    GroupSpec g;
    g.kind = GroupKind::Theta3;
    g.a = std::move(block);
    g.m = std::move(m);
    return g;
}

GroupSpec GroupSpec::from_tower(std::vector<IntMatrix> actions) {
    for (const auto& t : actions) {
        if (!t.square()) throw error("tower: actions must be square");
        if (abs(determinant(t)) != 1) throw error("tower: actions must be unimodular");
    }
    GroupSpec g;
    g.kind = GroupKind::Tower;
    g.tower = std::move(actions);
    return g;
}

GroupSpec GroupSpec::catalog(std::string name) {
    GroupSpec g;
    g.kind = GroupKind::Catalog;
    g.name = std::move(name);
    return g;
}

GroupSpec GroupSpec::raw(Presentation p) {
    validate_presentation(p);
    GroupSpec g;
    g.kind = GroupKind::RawPresentation;
    g.pres = std::move(p);
    return g;
}

IntMatrix theta3_matrix(const IntMatrix& block, const Int& m) {
    if (block.rows() != 2 || block.cols() != 2) throw error("theta3_matrix: block must be 2x2");
    IntMatrix t(3, 3);
    t.at(0, 0) = 1;
    t.at(1, 0) = m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) t.at(i + 1, j + 1) = block.at(i, j);
    return t;
}

Presentation build_semidirect_presentation(const IntMatrix& a) {
    if (!a.square()) throw error("build_semidirect_presentation: non-square action");
    if (abs(determinant(a)) != 1) throw error("build_semidirect_presentation: non-unimodular action");
    std::size_t n = a.rows();
    Presentation p;
    p.generators.push_back("t");
    for (std::size_t i = 0; i < n; ++i) p.generators.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            p.relators.push_back(word_commutator(word_pow(1 + i, 1), word_pow(1 + j, 1)));
    for (std::size_t i = 0; i < n; ++i) {
        Word image;
        for (std::size_t j = 0; j < n; ++j)
            image = word_concat(image, word_pow(1 + j, a.at(j, i)));
        Word rel = word_concat(word_pow(0, 1), word_pow(1 + i, 1));
        rel = word_concat(rel, word_pow(0, -1));
        rel = word_concat(rel, word_inverse(image));
        p.relators.push_back(rel);
    }
    validate_presentation(p);
    return p;
}

Presentation build_theta3_presentation(const IntMatrix& block, const Int& m) {
    if (block.rows() != 2 || block.cols() != 2) throw error("build_theta3_presentation: block must be 2x2");
    if (abs(determinant(block)) != 1) throw error("build_theta3_presentation: non-unimodular block");
    const Int &a = block.at(0, 0), &b = block.at(0, 1), &c = block.at(1, 0), &d = block.at(1, 1);
    Presentation p;
    p.generators = {"t", "u", "x", "y"};
    // [t,u] = x^m
    p.relators.push_back(word_concat(word_commutator(word_pow(0, 1), word_pow(1, 1)),
                                     word_pow(2, -m)));
    // t x t^-1 = x^a y^c, t y t^-1 = x^b y^d
    Word r1 = word_concat(word_concat(word_pow(0, 1), word_pow(2, 1)), word_pow(0, -1));
    r1 = word_concat(r1, word_inverse(word_concat(word_pow(2, a), word_pow(3, c))));
    p.relators.push_back(r1);
    Word r2 = word_concat(word_concat(word_pow(0, 1), word_pow(3, 1)), word_pow(0, -1));
    r2 = word_concat(r2, word_inverse(word_concat(word_pow(2, b), word_pow(3, d))));
    p.relators.push_back(r2);
    p.relators.push_back(word_commutator(word_pow(1, 1), word_pow(2, 1)));
    p.relators.push_back(word_commutator(word_pow(1, 1), word_pow(3, 1)));
    p.relators.push_back(word_commutator(word_pow(2, 1), word_pow(3, 1)));
    validate_presentation(p);
    return p;
}

IntMatrix abelianization_matrix(const Presentation& p) {
    IntMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (const auto& s : p.relators[i]) m.at(i, s.gen) += s.exp;
    return m;
}

std::size_t beta1(const Presentation& p, const FieldSpec& field) {
    return p.generators.size() - rank_over(abelianization_matrix(p), field);
}

namespace {

Int tower_det_product(const GroupSpec& spec) {
    switch (spec.kind) {
    case GroupKind::SemidirectZnZ:
        return determinant(spec.a);
    case GroupKind::Theta3:
        return determinant(spec.a); // det theta = det of the 2x2 block
    case GroupKind::Tower: {
        Int prod = 1;
        for (const auto& t : spec.tower) prod *= determinant(t);
        return prod;
    }
    default:
        throw error("orientability: matrix-based spec required");
    }
}

} // namespace

bool orientable_over_Q(const GroupSpec& spec) {
    if (spec.orientable_override) return *spec.orientable_override;
    switch (spec.kind) {
    case GroupKind::SemidirectZnZ:
    case GroupKind::Theta3:
    case GroupKind::Tower:
        return tower_det_product(spec) == 1;
    case GroupKind::Catalog:
        return catalog_lookup(spec.name).orientable;
    case GroupKind::RawPresentation:
        throw error("orientability unknown for raw presentation");
    }
    throw error("orientability: bad spec");
}

std::size_t hirsch_length(const GroupSpec& spec) {
    if (spec.hirsch_override) return *spec.hirsch_override;
    switch (spec.kind) {
    case GroupKind::SemidirectZnZ:
        return spec.a.rows() + 1;
    case GroupKind::Theta3:
        return 4;
    case GroupKind::Tower:
        return spec.tower.size() + 1;
    case GroupKind::Catalog:
        return catalog_lookup(spec.name).hirsch;
    case GroupKind::RawPresentation:
        throw error("hirsch length unknown for raw presentation");
    }
    throw error("hirsch length: bad spec");
}

std::optional<Presentation> presentation_of(const GroupSpec& spec) {
    switch (spec.kind) {
    case GroupKind::SemidirectZnZ:
        return build_semidirect_presentation(spec.a);
    case GroupKind::Theta3:
        return build_theta3_presentation(spec.a, spec.m);
    case GroupKind::Tower:
        return std::nullopt; // matrices alone do not pin down the extension cocycles
    case GroupKind::Catalog:
        return catalog_lookup(spec.name).pres;
    case GroupKind::RawPresentation:
        return spec.pres;
    }
    return std::nullopt;
}

} // namespace polyz
