#include "drinfeld/cohomology.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace drinfeld {

namespace {

// u * [l] * ([j]+[k]-[j+k]) mod p^2, all representatives in {0,...,p-1}.
long kappa_exp(long p, long u, long j, long k, long l) {
    long carry = j + k - ((j + k) % p);  // 0 or p
    return mod_long(u * l % (p * p) * carry, p * p);
}

}  // namespace

Cocycle3 Cocycle3::trivial(const Group& G) {
    return Cocycle3(Kind::Trivial, G, 1);
}

Cocycle3 Cocycle3::kappa(long p, long u) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("kappa: p must be an odd prime");
    Cocycle3 c(Kind::Kappa, Group::cyclic(p), p * p);
    c.p_ = p;
    c.u_ = mod_long(u, p);
    return c;
}

Cocycle3 Cocycle3::inflate(const Cocycle3& c, const Group& G) {
    if (G.kind() != Group::Kind::Metacyclic)
        throw std::invalid_argument("inflate: group has no canonical Z_p quotient");
    if (c.kind_ == Kind::Trivial) return trivial(G);
    if (c.kind_ != Kind::Kappa || c.p_ != G.p())
        throw std::invalid_argument("inflate: cocycle does not live on the Z_p quotient");
    Cocycle3 out(Kind::Inflated, G, c.modulus_);
    out.p_ = c.p_;
    out.u_ = c.u_;
    return out;
}

Cocycle3 Cocycle3::product_cocycle(const Group& Gq, const Group& Gr, long u, long v) {
    if (Gq.kind() != Group::Kind::Metacyclic || Gr.kind() != Group::Kind::Metacyclic)
        throw std::invalid_argument("product_cocycle: both factors must be metacyclic");
    if (Gq.p() != Gr.p())
        throw std::invalid_argument("product_cocycle: factors have different p");
    long p = Gq.p();
    Cocycle3 out(Kind::ProductInflated, Group::product(Gq, Gr), p * p);
    out.p_ = p;
    out.u_ = mod_long(u, p);
    out.v_ = mod_long(v, p);
    return out;
}

Cocycle3 Cocycle3::power(long w) const {
    Cocycle3 out = *this;
    if (kind_ == Kind::Trivial) return out;
    out.u_ = mod_long(u_ * w, p_);
    out.v_ = mod_long(v_ * w, p_);
    return out;
}

Cocycle3 Cocycle3::factor_left() const {
    if (kind_ == Kind::Trivial && G_.kind() == Group::Kind::Product)
        return trivial(G_.left());
    if (kind_ != Kind::ProductInflated) throw std::logic_error("factor_left: not a product cocycle");
    Cocycle3 out(Kind::Inflated, G_.left(), modulus_);
    out.p_ = p_;
    out.u_ = u_;
    return out;
}

Cocycle3 Cocycle3::factor_right() const {
    if (kind_ == Kind::Trivial && G_.kind() == Group::Kind::Product)
        return trivial(G_.right());
    if (kind_ != Kind::ProductInflated) throw std::logic_error("factor_right: not a product cocycle");
    Cocycle3 out(Kind::Inflated, G_.right(), modulus_);
    out.p_ = p_;
    out.u_ = v_;
    return out;
}

long Cocycle3::eval_exp(Elt x, Elt y, Elt z) const {
    switch (kind_) {
        case Kind::Trivial:
            return 0;
        case Kind::Kappa:
            return kappa_exp(p_, u_, x, y, z);
        case Kind::Inflated:
            return kappa_exp(p_, u_, G_.coord_b(x), G_.coord_b(y), G_.coord_b(z));
        case Kind::ProductInflated: {
            const Group& L = G_.left();
            const Group& R = G_.right();
            long e1 = kappa_exp(p_, u_, L.coord_b(G_.pair_left(x)), L.coord_b(G_.pair_left(y)),
                                L.coord_b(G_.pair_left(z)));
            long e2 = kappa_exp(p_, v_, R.coord_b(G_.pair_right(x)), R.coord_b(G_.pair_right(y)),
                                R.coord_b(G_.pair_right(z)));
            return mod_long(e1 + e2, modulus_);
        }
    }
    throw std::logic_error("unreachable");
}

Cyclotomic Cocycle3::eval(Elt x, Elt y, Elt z) const {
    return Cyclotomic::root_of_unity(modulus_, eval_exp(x, y, z));
}

long Cocycle3::coboundary_exp(Elt g, Elt h, Elt k, Elt l) const {
    long e = eval_exp(h, k, l);
    e -= eval_exp(G_.compose(g, h), k, l);
    e += eval_exp(g, G_.compose(h, k), l);
    e -= eval_exp(g, h, G_.compose(k, l));
    e += eval_exp(g, h, k);
    return mod_long(e, modulus_);
}

bool Cocycle3::check_cocycle(long exhaustive_order_bound, int samples, unsigned seed) const {
    long m = G_.order();
    if (m <= exhaustive_order_bound) {
        for (Elt g = 0; g < m; ++g)
            for (Elt h = 0; h < m; ++h)
                for (Elt k = 0; k < m; ++k)
                    for (Elt l = 0; l < m; ++l)
                        if (coboundary_exp(g, h, k, l) != 0) return false;
        return true;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Elt> pick(0, m - 1);
    for (int s = 0; s < samples; ++s)
        if (coboundary_exp(pick(rng), pick(rng), pick(rng), pick(rng)) != 0) return false;
    return true;
}

bool Cocycle3::is_normalized_sample(int samples, unsigned seed) const {
    long m = G_.order();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Elt> pick(0, m - 1);
    for (int s = 0; s < samples; ++s) {
        Elt x = pick(rng), y = pick(rng);
        if (eval_exp(0, x, y) != 0 || eval_exp(x, 0, y) != 0 || eval_exp(x, y, 0) != 0)
            return false;
    }
    return true;
}

Cochain2::Cochain2(Group local, long modulus, std::vector<long> table)
    : local_(std::move(local)), modulus_(modulus), table_(std::move(table)) {
    if (static_cast<long>(table_.size()) != local_.order() * local_.order())
        throw std::invalid_argument("Cochain2: table size mismatch");
}

Cyclotomic Cochain2::eval(Elt x, Elt y) const {
    return Cyclotomic::root_of_unity(modulus_, eval_exp(x, y));
}

bool Cochain2::is_trivial() const {
    return std::all_of(table_.begin(), table_.end(), [](long e) { return e == 0; });
}

bool Cochain2::is_normalized() const {
    for (Elt x = 0; x < local_.order(); ++x)
        if (eval_exp(0, x) != 0 || eval_exp(x, 0) != 0) return false;
    return true;
}

bool Cochain2::check_cocycle(long exhaustive_order_bound, int samples, unsigned seed) const {
    long m = local_.order();
    auto d = [&](Elt x, Elt y, Elt z) {
        long e = eval_exp(y, z);
        e -= eval_exp(local_.compose(x, y), z);
        e += eval_exp(x, local_.compose(y, z));
        e -= eval_exp(x, y);
        return mod_long(e, modulus_);
    };
    if (is_trivial()) return true;
    if (m <= exhaustive_order_bound) {
        for (Elt x = 0; x < m; ++x)
            for (Elt y = 0; y < m; ++y)
                for (Elt z = 0; z < m; ++z)
                    if (d(x, y, z) != 0) return false;
        return true;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Elt> pick(0, m - 1);
    for (int s = 0; s < samples; ++s)
        if (d(pick(rng), pick(rng), pick(rng)) != 0) return false;
    return true;
}

bool Cochain2::operator==(const Cochain2& o) const {
    return local_.same_structure(o.local_) && modulus_ == o.modulus_ && table_ == o.table_;
}

Cochain1::Cochain1(Group local, long modulus, std::vector<long> table)
    : local_(std::move(local)), modulus_(modulus), table_(std::move(table)) {
    if (static_cast<long>(table_.size()) != local_.order())
        throw std::invalid_argument("Cochain1: table size mismatch");
}

Cyclotomic Cochain1::eval(Elt x) const {
    return Cyclotomic::root_of_unity(modulus_, eval_exp(x));
}

long Cochain1::coboundary_exp(Elt x, Elt y) const {
    return mod_long(eval_exp(x) + eval_exp(y) - eval_exp(local_.compose(x, y)), modulus_);
}

Cochain2 transgress_alpha(const Cocycle3& omega, Elt g, const Centralizer& cent) {
    const Group& L = cent.local();
    long m = L.order();
    long N = omega.modulus();
    std::vector<long> table(m * m);
    for (Elt x = 0; x < m; ++x) {
        Elt X = cent.from_local(x);
        for (Elt y = 0; y < m; ++y) {
            Elt Y = cent.from_local(y);
            long e = omega.eval_exp(g, X, Y) - omega.eval_exp(X, g, Y) + omega.eval_exp(X, Y, g);
            table[x * m + y] = mod_long(e, N);
        }
    }
    return Cochain2(L, N, std::move(table));
}

Cochain2 transgress_alpha(const Cocycle3& omega, Elt g) {
    return transgress_alpha(omega, g, omega.group().centralizer(g));
}

Cochain1 solve_mu(const Cochain2& alpha, std::optional<MuContext> ctx) {
    const Group& L = alpha.local();
    if (L.kind() != Group::Kind::Cyclic)
        throw std::invalid_argument("solve_mu: domain must be cyclic");
    long m = L.order();
    long N = alpha.modulus();
    std::vector<long> mu(m);
    if (ctx) {
        long p2 = ctx->p * ctx->p;
        if (N != p2) throw std::invalid_argument("solve_mu: context requires modulus p^2");
        for (long x = 0; x < m; ++x) mu[x] = mod_long(ctx->k * ctx->u * x, p2);
    } else {
        // mu(x) = c*x - sum_{s<x} alpha(g^s, g), with m*c = sum over the full
        // cycle; solvable over Z_N iff gcd(m, N) divides that sum.
        long total = 0;
        for (long s = 0; s < m; ++s) total = mod_long(total + alpha.eval_exp(s, 1 % m), N);
        long g = gcd_long(m, N);
        if (total % g != 0)
            throw std::domain_error("solve_mu: alpha is not a coboundary over mu_N");
        long c = (total / g) % (N / g) * mod_inverse((m / g) % (N / g), N / g) % (N / g);
        long prefix = 0;
        for (long x = 0; x < m; ++x) {
            mu[x] = mod_long(c * x - prefix, N);
            prefix = mod_long(prefix + alpha.eval_exp(x, 1 % m), N);
        }
    }
    Cochain1 out(L, N, std::move(mu));
    for (Elt x = 0; x < m; ++x)
        for (Elt y = 0; y < m; ++y)
            if (out.coboundary_exp(x, y) != alpha.eval_exp(x, y))
                throw std::domain_error("solve_mu: could not trivialize alpha");
    return out;
}

namespace {

std::vector<std::vector<long>> square_action_orbits(long p) {
    std::vector<std::vector<long>> orbits;
    std::vector<char> seen(p, 0);
    for (long x = 0; x < p; ++x) {
        if (seen[x]) continue;
        std::set<long> orbit{x};
        for (long t = 1; t < p; ++t)
            if (gcd_long(t, p) == 1) orbit.insert(t * t % p * x % p);
        for (long y : orbit) seen[y] = 1;
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

}  // namespace

H3Orbits h3_orbit_count(long p, std::optional<long> q) {
    if (!is_prime(p)) throw std::invalid_argument("h3_orbit_count: p must be prime");
    H3Orbits out;
    out.p = p;
    out.orbit_sets_p = square_action_orbits(p);
    out.orbits_p = static_cast<long>(out.orbit_sets_p.size());
    if (q) {
        if (!is_prime(*q)) throw std::invalid_argument("h3_orbit_count: q must be prime");
        out.q = q;
        out.orbits_q = static_cast<long>(square_action_orbits(*q).size());
        out.orbits_combined = out.orbits_p * *out.orbits_q;
        if (p == 2)
            out.classification_total = 12;
        else
            out.classification_total = ((*q - 1) % p == 0) ? p + 9 : 9;
    }
    return out;
}

}  // namespace drinfeld
