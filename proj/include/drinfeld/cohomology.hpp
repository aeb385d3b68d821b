// Cochains and cocycles with root-of-unity values, stored as exponents of
// zeta_N for a fixed modulus N. Covers the explicit generator of
// H^3(Z_p, C^x), its inflation to Z_q x| Z_p, products of inflations on
// direct products, the transgressed 2-cocycles alpha_g on centralizers,
// their trivializations mu, and the orbit counts on H^3 used by the
// classification of pointed categories of dimension pq.

#pragma once

#include <optional>
#include <vector>

#include "drinfeld/cyclotomic.hpp"
#include "drinfeld/group.hpp"

namespace drinfeld {

class Cocycle3 {
public:
    enum class Kind { Trivial, Kappa, Inflated, ProductInflated };

    static Cocycle3 trivial(const Group& G);
    // kappa^u on Z_p, values in p-th roots of unity inside zeta_{p^2}:
    // kappa(j,k,l) = zeta_{p^2}^{u*[l]*([j]+[k]-[j+k])}. p must be an odd prime.
    static Cocycle3 kappa(long p, long u);
    // Inflation along the quotient a^i b^j -> j of a metacyclic group.
    // c must live on Z_p with p matching G.p().
    static Cocycle3 inflate(const Cocycle3& c, const Group& G);
    // omega_{uv} on Gq x Gr: product of the two inflations. Both factors
    // must be metacyclic with the same p.
    static Cocycle3 product_cocycle(const Group& Gq, const Group& Gr, long u, long v);

    Kind kind() const { return kind_; }
    const Group& group() const { return G_; }
    long modulus() const { return modulus_; }
    long p() const { return p_; }
    long u() const { return u_; }
    long v() const { return v_; }

    Cocycle3 power(long w) const;     // omega^w
    Cocycle3 factor_left() const;     // ProductInflated/Trivial-on-product only
    Cocycle3 factor_right() const;

    long eval_exp(Elt x, Elt y, Elt z) const;
    Cyclotomic eval(Elt x, Elt y, Elt z) const;

    // d(omega) exponent at (g,h,k,l); identically 0 for a 3-cocycle.
    long coboundary_exp(Elt g, Elt h, Elt k, Elt l) const;
    // Exhaustive check when order^4 is small, deterministic sampling otherwise.
    bool check_cocycle(long exhaustive_order_bound = 25, int samples = 10000,
                       unsigned seed = 20240901) const;
    bool is_normalized_sample(int samples = 1000, unsigned seed = 7) const;

private:
    Cocycle3(Kind k, Group G, long modulus) : kind_(k), G_(std::move(G)), modulus_(modulus) {}
    Kind kind_;
    Group G_;
    long modulus_;
    long p_ = 0, u_ = 0, v_ = 0;
};

// 2-cochain on a centralizer's local group, as an exponent table.
class Cochain2 {
public:
    Cochain2(Group local, long modulus, std::vector<long> table);

    const Group& local() const { return local_; }
    long modulus() const { return modulus_; }
    long eval_exp(Elt x, Elt y) const { return table_[x * local_.order() + y]; }
    Cyclotomic eval(Elt x, Elt y) const;

    bool is_trivial() const;      // identically zero exponents
    bool is_normalized() const;
    // d(alpha)(x,y,z) = alpha(y,z) - alpha(xy,z) + alpha(x,yz) - alpha(x,y); zero iff 2-cocycle.
    bool check_cocycle(long exhaustive_order_bound = 300, int samples = 10000,
                       unsigned seed = 20240902) const;
    bool operator==(const Cochain2& o) const;

private:
    Group local_;
    long modulus_;
    std::vector<long> table_;
};

class Cochain1 {
public:
    Cochain1(Group local, long modulus, std::vector<long> table);

    const Group& local() const { return local_; }
    long modulus() const { return modulus_; }
    long eval_exp(Elt x) const { return table_[x]; }
    Cyclotomic eval(Elt x) const;
    // (d mu)(x,y) = mu(x) + mu(y) - mu(xy)
    long coboundary_exp(Elt x, Elt y) const;

private:
    Group local_;
    long modulus_;
    std::vector<long> table_;
};

// alpha_g(x,y) = omega(g,x,y) * omega^{-1}(x,g,y) * omega(x,y,g), restricted
// to the centralizer of g (as the table over C.local()).
Cochain2 transgress_alpha(const Cocycle3& omega, Elt g, const Centralizer& cent);
Cochain2 transgress_alpha(const Cocycle3& omega, Elt g);

struct MuContext {
    long u, k, p;  // the closed form mu(b^x) = zeta_{p^2}^{k*u*[x]}
};

// Solves d(mu) = alpha on a cyclic group over exponents mod alpha.modulus().
// With a context, uses the closed form; otherwise a linear pass on the
// generator. Throws std::domain_error when alpha is not a coboundary over
// the allowed value group.
Cochain1 solve_mu(const Cochain2& alpha, std::optional<MuContext> ctx = std::nullopt);

struct H3Orbits {
    long p = 0;
    std::optional<long> q;
    long orbits_p = 0;                          // 3 for odd prime p, 2 for p = 2
    std::optional<long> orbits_q;
    std::optional<long> orbits_combined;        // 9, or 6 when p = 2
    std::optional<long> classification_total;   // p+9 | 9 | 12 (needs q)
    std::vector<std::vector<long>> orbit_sets_p;  // orbits of x -> t^2 x on Z_p
};

// Orbits of Z_p (and Z_p x Z_q) under x -> t^2 x, plus the classification
// totals for pointed categories of dimension pq. Throws
// std::invalid_argument when p (or q) is not prime.
H3Orbits h3_orbit_count(long p, std::optional<long> q = std::nullopt);

}  // namespace drinfeld
