// Simple objects of D_omega(G)-Mod: pairs (conjugacy class representative,
// projective character of its centralizer), with explicit character values
// and a deterministic global index order that all matrices inherit.

#pragma once

#include "drinfeld/cohomology.hpp"
#include "drinfeld/cyclotomic.hpp"
#include "drinfeld/group.hpp"

namespace drinfeld {

struct ProjectiveCharacter {
    long degree = 1;
    std::vector<Cyclotomic> values;  // indexed by local element of the centralizer
};

struct SimpleLabel {
    int class_index = 0;
    Elt rep = 0;
    int char_ordinal = 0;
    long class_size = 1;
    long degree = 1;
    long dimension = 1;  // class_size * degree
};

struct ClassSimples {
    Centralizer cent;
    Cochain2 alpha;
    std::vector<ProjectiveCharacter> chars;
};

struct Simples {
    Group G;
    Cocycle3 omega;
    std::vector<ClassSimples> classes;
    std::vector<SimpleLabel> labels;

    long rank() const { return static_cast<long>(labels.size()); }
    const ProjectiveCharacter& character(long label_idx) const {
        const SimpleLabel& l = labels[label_idx];
        return classes[l.class_index].chars[l.char_ordinal];
    }
    const ClassSimples& class_data(long label_idx) const {
        return classes[labels[label_idx].class_index];
    }
};

// Irreducible alpha_g-projective characters of C_G(g), in the fixed order:
//   - <a>-type centralizers: the q linear characters chi_t(a^x) = zeta_q^{tx};
//   - <b>-type centralizers: mu_{b^k} * chi_0^{m'} with the renumbering
//     m'k = m (mod p), ordered by m;
//   - the whole group at g = 1: linear characters first, then the induced
//     degree-p characters by minimal orbit representative;
//   - products: tensor products in lexicographic order.
// Throws std::invalid_argument when alpha is not the transgression of omega
// at g.
std::vector<ProjectiveCharacter> centralizer_characters(const Group& G, Elt g,
                                                        const Cochain2& alpha,
                                                        const Cocycle3& omega);

Simples enumerate_simples(const Group& G, const Cocycle3& omega);

}  // namespace drinfeld
