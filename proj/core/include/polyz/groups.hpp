#pragma once

#include "polyz/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyz {

// Group words as syllable sequences; only exponent sums are ever needed,
// so no free reduction beyond merging adjacent syllables.
struct Syllable {
    std::size_t gen;
    Int exp;
    bool operator==(const Syllable&) const = default;
};
using Word = std::vector<Syllable>;

Word word_normalized(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
Word word_pow(std::size_t gen, const Int& exp);
Word word_commutator(const Word& a, const Word& b);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

void validate_presentation(const Presentation& p);

enum class GroupKind { SemidirectZnZ, Theta3, Tower, Catalog, RawPresentation };

// Tagged group description. Matrix-based kinds carry their action data;
// catalog names are resolved lazily; raw presentations carry optional
// curated metadata (Hirsch length, orientability) when known.
struct GroupSpec {
    GroupKind kind = GroupKind::RawPresentation;
    IntMatrix a;                      // SemidirectZnZ action, or the 2x2 block of Theta3
    Int m;                            // Theta3 offset
    std::vector<IntMatrix> tower;     // Tower actions, innermost first
    std::string name;                 // Catalog
    Presentation pres;                // RawPresentation
    std::optional<std::size_t> hirsch_override;
    std::optional<bool> orientable_override;

    static GroupSpec semidirect(IntMatrix action);
    static GroupSpec theta3(IntMatrix block, Int m);
    static GroupSpec from_tower(std::vector<IntMatrix> actions);
    static GroupSpec catalog(std::string name);
    static GroupSpec raw(Presentation p);
};

// theta = [[1, 0], [mu, A]] with mu = (m, 0)^T, as a 3x3 matrix.
IntMatrix theta3_matrix(const IntMatrix& block, const Int& m);

// <t, x_1..x_n | [x_i,x_j], t x_i t^-1 = column i of A>
Presentation build_semidirect_presentation(const IntMatrix& a);

// <t, u, x, y | [t,u]=x^m, t x t^-1 = x^a y^c, t y t^-1 = x^b y^d,
//               ux=xu, uy=yu, xy=yx>
Presentation build_theta3_presentation(const IntMatrix& block, const Int& m);

// rows = relators, cols = generators, entries = exponent sums
IntMatrix abelianization_matrix(const Presentation& p);

std::size_t beta1(const Presentation& p, const FieldSpec& field);

bool orientable_over_Q(const GroupSpec& spec);
std::size_t hirsch_length(const GroupSpec& spec);

// Presentation usable for homological bounds, when one is available.
std::optional<Presentation> presentation_of(const GroupSpec& spec);

} // namespace polyz
