#include "drinfeld/simples.hpp"

#include <stdexcept>

namespace drinfeld {

namespace {

std::vector<ProjectiveCharacter> chars_for(const Centralizer& cent, Elt g,
                                           const Cochain2& alpha, const Cocycle3& omega);

std::vector<ProjectiveCharacter> linear_cyclic_chars(long m) {
    std::vector<ProjectiveCharacter> out;
    out.reserve(m);
    for (long t = 0; t < m; ++t) {
        ProjectiveCharacter ch;
        ch.degree = 1;
        ch.values.reserve(m);
        for (long x = 0; x < m; ++x)
            ch.values.push_back(Cyclotomic::root_of_unity(m, t * x));
        out.push_back(std::move(ch));
    }
    return out;
}

// mu-twisted characters of Z_p with alpha = d(mu), mu(b^x) = zeta_{p^2}^{k u x}.
// Ordinal m corresponds to mu * chi_0^{m'} with m' k = m (mod p).
std::vector<ProjectiveCharacter> twisted_b_chars(long p, long u, long k) {
    long p2 = p * p;
    long kinv = mod_inverse(k, p);
    std::vector<ProjectiveCharacter> out;
    out.reserve(p);
    for (long m = 0; m < p; ++m) {
        long mprime = (m * kinv) % p;
        ProjectiveCharacter ch;
        ch.degree = 1;
        ch.values.reserve(p);
        for (long x = 0; x < p; ++x)
            ch.values.push_back(
                Cyclotomic::root_of_unity(p2, mod_long(k * u * x + p * mprime * x, p2)));
        out.push_back(std::move(ch));
    }
    return out;
}

std::vector<ProjectiveCharacter> metacyclic_ordinary_chars(const Group& G) {
    long p = G.p(), q = G.q();
    std::vector<ProjectiveCharacter> out;
    // Linear characters, inflated from the Z_p quotient.
    for (long s = 0; s < p; ++s) {
        ProjectiveCharacter ch;
        ch.degree = 1;
        ch.values.reserve(G.order());
        for (Elt x = 0; x < G.order(); ++x)
            ch.values.push_back(Cyclotomic::root_of_unity(p, s * G.coord_b(x)));
        out.push_back(std::move(ch));
    }
    // Degree-p characters induced from <a>, one per orbit of multiplication
    // by n on Z_q \ {0}; the a-classes of G list the orbit representatives in
    // the required (minimal member, ascending) order.
    const auto& classes = G.conjugacy_classes();
    long a_classes = (q - 1) / p;
    for (long ci = 1; ci <= a_classes; ++ci) {
        long t = G.coord_a(classes[ci].rep);
        ProjectiveCharacter ch;
        ch.degree = p;
        ch.values.reserve(G.order());
        for (Elt x = 0; x < G.order(); ++x) {
            if (G.coord_b(x) != 0) {
                ch.values.push_back(Cyclotomic::zero());
                continue;
            }
            long l = G.coord_a(x);
            Cyclotomic::TermList terms;
            long e = mod_long(t * l, q);
            for (long s = 0; s < p; ++s) {
                terms.emplace_back(e, Rational(1));
                e = mod_long(e * G.n(), q);
            }
            ch.values.push_back(Cyclotomic::from_terms(q, terms));
        }
        out.push_back(std::move(ch));
    }
    return out;
}

std::vector<ProjectiveCharacter> tensor_chars(const std::vector<ProjectiveCharacter>& lhs,
                                              const std::vector<ProjectiveCharacter>& rhs,
                                              long right_order) {
    std::vector<ProjectiveCharacter> out;
    out.reserve(lhs.size() * rhs.size());
    for (const auto& c1 : lhs) {
        for (const auto& c2 : rhs) {
            ProjectiveCharacter ch;
            ch.degree = c1.degree * c2.degree;
            ch.values.reserve(c1.values.size() * c2.values.size());
            for (size_t x1 = 0; x1 < c1.values.size(); ++x1)
                for (long x2 = 0; x2 < right_order; ++x2)
                    ch.values.push_back(c1.values[x1] * c2.values[x2]);
            out.push_back(std::move(ch));
        }
    }
    return out;
}

Cochain2 slice_alpha(const Cochain2& alpha, const Group& local_product, bool left_side) {
    const Group& sub = left_side ? local_product.left() : local_product.right();
    long m = sub.order();
    std::vector<long> table(m * m);
    for (Elt x = 0; x < m; ++x)
        for (Elt y = 0; y < m; ++y) {
            Elt X = left_side ? local_product.pair_element(x, 0) : local_product.pair_element(0, x);
            Elt Y = left_side ? local_product.pair_element(y, 0) : local_product.pair_element(0, y);
            table[x * m + y] = alpha.eval_exp(X, Y);
        }
    return Cochain2(sub, alpha.modulus(), std::move(table));
}

std::vector<ProjectiveCharacter> chars_for(const Centralizer& cent, Elt g,
                                           const Cochain2& alpha, const Cocycle3& omega) {
    const Group& G = cent.ambient();
    switch (cent.kind()) {
        case Centralizer::Kind::Product: {
            Cochain2 a1 = slice_alpha(alpha, cent.local(), true);
            Cochain2 a2 = slice_alpha(alpha, cent.local(), false);
            auto c1 = chars_for(cent.factor_left(), G.pair_left(g), a1, omega.factor_left());
            auto c2 = chars_for(cent.factor_right(), G.pair_right(g), a2, omega.factor_right());
            return tensor_chars(c1, c2, cent.factor_right().order());
        }
        case Centralizer::Kind::Whole: {
            if (G.kind() == Group::Kind::Cyclic) {
                long m = G.order();
                if (alpha.is_trivial()) return linear_cyclic_chars(m);
                // Twisted cyclic double: ordinary characters twisted by a
                // trivializing mu.
                Cochain1 mu = solve_mu(alpha);
                long N = alpha.modulus();
                std::vector<ProjectiveCharacter> out;
                out.reserve(m);
                for (long t = 0; t < m; ++t) {
                    ProjectiveCharacter ch;
                    ch.degree = 1;
                    for (long x = 0; x < m; ++x)
                        ch.values.push_back(Cyclotomic::root_of_unity(N, mu.eval_exp(x)) *
                                            Cyclotomic::root_of_unity(m, t * x));
                    out.push_back(std::move(ch));
                }
                return out;
            }
            if (G.kind() == Group::Kind::Metacyclic) {
                if (!alpha.is_trivial())
                    throw std::logic_error("chars_for: nontrivial alpha at the identity class");
                return metacyclic_ordinary_chars(G);
            }
            throw std::logic_error("chars_for: unexpected whole-group centralizer");
        }
        case Centralizer::Kind::CyclicGenerated: {
            std::vector<Elt> gen = cent.generators();
            if (gen.size() != 1) throw std::logic_error("chars_for: bad generator list");
            if (gen[0] == G.metacyclic_element(1, 0)) {  // <a>
                if (!alpha.is_trivial())
                    throw std::logic_error("chars_for: nontrivial alpha on <a>");
                return linear_cyclic_chars(G.q());
            }
            if (gen[0] == G.metacyclic_element(0, 1)) {  // <b>
                long k = G.coord_b(g);
                if (G.coord_a(g) != 0 || k == 0)
                    throw std::logic_error("chars_for: non-canonical <b>-class representative");
                long u = 0;
                if (omega.kind() == Cocycle3::Kind::Inflated) u = omega.u();
                else if (omega.kind() != Cocycle3::Kind::Trivial)
                    throw std::logic_error("chars_for: unsupported cocycle kind");
                if (u == 0) {
                    // mu is trivial; only the renumbering by k remains.
                    long p = G.p();
                    long kinv = mod_inverse(k, p);
                    std::vector<ProjectiveCharacter> out;
                    for (long m = 0; m < p; ++m) {
                        ProjectiveCharacter ch;
                        ch.degree = 1;
                        for (long x = 0; x < p; ++x)
                            ch.values.push_back(Cyclotomic::root_of_unity(p, (m * kinv) % p * x));
                        out.push_back(std::move(ch));
                    }
                    return out;
                }
                return twisted_b_chars(G.p(), u, k);
            }
            throw std::logic_error("chars_for: centralizer at a non-canonical representative");
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<ProjectiveCharacter> centralizer_characters(const Group& G, Elt g,
                                                        const Cochain2& alpha,
                                                        const Cocycle3& omega) {
    Centralizer cent = G.centralizer(g);
    Cochain2 expected = transgress_alpha(omega, g, cent);
    if (!(alpha == expected))
        throw std::invalid_argument("centralizer_characters: alpha is not the transgression at g");
    return chars_for(cent, g, expected, omega);
}

Simples enumerate_simples(const Group& G, const Cocycle3& omega) {
    if (!omega.group().same_structure(G))
        throw std::invalid_argument("enumerate_simples: cocycle lives on a different group");
    Simples out{G, omega, {}, {}};
    const auto& classes = G.conjugacy_classes();
    long dim_sq = 0;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const ConjClass& cls = classes[ci];
        Centralizer cent = G.centralizer(cls.rep);
        Cochain2 alpha = transgress_alpha(omega, cls.rep, cent);
        auto chars = chars_for(cent, cls.rep, alpha, omega);
        long class_size = static_cast<long>(cls.members.size());
        for (size_t t = 0; t < chars.size(); ++t) {
            SimpleLabel label;
            label.class_index = static_cast<int>(ci);
            label.rep = cls.rep;
            label.char_ordinal = static_cast<int>(t);
            label.class_size = class_size;
            label.degree = chars[t].degree;
            label.dimension = class_size * chars[t].degree;
            dim_sq += label.dimension * label.dimension;
            out.labels.push_back(label);
        }
        out.classes.push_back(ClassSimples{std::move(cent), std::move(alpha), std::move(chars)});
    }
    if (dim_sq != G.order() * G.order())
        throw std::logic_error("enumerate_simples: sum of squared dimensions != |G|^2");
    return out;
}

}  // namespace drinfeld
