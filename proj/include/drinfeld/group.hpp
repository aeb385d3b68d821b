// Finite groups of the families in scope: the nonabelian semidirect products
// Z_q x|_n Z_p (p | q-1, the generator of Z_p acting on Z_q as multiplication
// by an n of multiplicative order p), cyclic groups, and direct products.
// Elements are dense indices 0..order-1; the identity is always index 0.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace drinfeld {

using Elt = std::int64_t;

struct ConjClass {
    Elt rep;
    std::vector<Elt> members;       // ascending element index
    std::vector<Elt> conjugators;   // conjugators[i] * rep * conjugators[i]^-1 == members[i]
};

class Centralizer;

class Group {
public:
    enum class Kind { Metacyclic, Cyclic, Product };

    // Z_q x|_n Z_p. When n is omitted, the smallest integer > 1 of
    // multiplicative order exactly p mod q is chosen. Throws
    // std::invalid_argument on invalid (p, q, n).
    static Group metacyclic(long p, long q, std::optional<long> n = std::nullopt);
    static Group cyclic(long n);
    static Group product(const Group& a, const Group& b);
    // Parses "pq:5,11" | "pq:5,11,n=3" | "cyclic:35" | "prod:(pq:3,7)x(pq:3,13)".
    static Group parse_spec(const std::string& spec);

    Kind kind() const;
    long order() const;
    std::string spec_string() const;

    // Metacyclic accessors (throw std::logic_error for other kinds).
    long p() const;
    long q() const;
    long n() const;
    const Group& left() const;   // Product only
    const Group& right() const;

    Elt identity() const { return 0; }
    Elt compose(Elt x, Elt y) const;
    Elt inverse(Elt x) const;
    Elt conjugate(Elt g, Elt x) const { return compose(compose(g, x), inverse(g)); }
    bool commute(Elt x, Elt y) const { return compose(x, y) == compose(y, x); }
    long element_order(Elt x) const;

    // Metacyclic coordinates: a^i b^j <-> index i*p + j.
    Elt metacyclic_element(long i, long j) const;
    long coord_a(Elt x) const;
    long coord_b(Elt x) const;
    // Product coordinates: index x1*|right| + x2.
    Elt pair_element(Elt x1, Elt x2) const;
    Elt pair_left(Elt x) const;
    Elt pair_right(Elt x) const;

    std::string element_str(Elt x) const;

    const std::vector<ConjClass>& conjugacy_classes() const;
    int class_of(Elt x) const;
    Centralizer centralizer(Elt g) const;

    bool same_structure(const Group& o) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// A centralizer C_G(g), exposed as a group of its own (the whole group, a
// cyclic subgroup with a fixed generator, or a product of centralizers)
// together with coordinate maps between it and G.
class Centralizer {
public:
    enum class Kind { Whole, CyclicGenerated, Product };

    Kind kind() const { return kind_; }
    const Group& ambient() const { return ambient_; }
    const Group& local() const { return local_; }
    long order() const { return local_.order(); }

    bool contains(Elt g) const;
    Elt to_local(Elt g) const;      // throws std::domain_error if g is outside
    Elt from_local(Elt x) const;

    std::vector<Elt> generators() const;   // ambient elements
    std::vector<Elt> elements() const;     // ambient elements, sorted

    const Centralizer& factor_left() const;   // Product only
    const Centralizer& factor_right() const;

private:
    friend class Group;
    Centralizer(Kind k, Group ambient, Group local)
        : kind_(k), ambient_(std::move(ambient)), local_(std::move(local)) {}

    Kind kind_;
    Group ambient_;
    Group local_;
    Elt generator_ = 0;                       // CyclicGenerated
    std::vector<Elt> powers_;                 // generator^x, x = 0..m-1
    std::shared_ptr<const Centralizer> left_, right_;  // Product
};

bool is_prime(long n);
// Multiplicative order of a mod m; throws std::domain_error if gcd(a,m) != 1.
long multiplicative_order(long a, long m);

}  // namespace drinfeld
