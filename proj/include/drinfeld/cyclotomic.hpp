// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value is a finite sum of rational multiples of roots of unity,
// kept in a canonical form: the exponents are restricted to a basis of
// Q(zeta_N) made of roots of unity (the tensor product over the prime
// powers p^a || N of the power bases {zeta_{p^a}^j : 0 <= j < phi(p^a)}),
// and the conductor is always reduced to the smallest possible level.
// Two values are equal iff their conductors and term lists coincide.

#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace drinfeld {

using Rational = mpq_class;

class Cyclotomic {
public:
    // exponent -> nonzero coefficient, sorted by exponent
    using TermList = std::vector<std::pair<long, Rational>>;

    Cyclotomic() : n_(1) {}  // zero

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return from_rational(1); }
    static Cyclotomic from_rational(const Rational& r);
    // exp(2*pi*i*k/n); k is taken mod n. Throws std::invalid_argument if n < 1.
    static Cyclotomic root_of_unity(long n, long k);
    // Canonicalizes an arbitrary exponent->coefficient list at level n.
    static Cyclotomic from_terms(long n, const TermList& raw);

    long conductor() const { return n_; }
    const TermList& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Throws std::domain_error when the value is not rational.
    Rational rational_value() const;
    bool is_integer() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    Cyclotomic scale(const Rational& r) const;

    // Field automorphism zeta_N -> zeta_N^t (t taken mod the conductor).
    // Throws std::domain_error when gcd(t, conductor) != 1.
    Cyclotomic galois(long t) const;
    Cyclotomic conjugate() const;
    Cyclotomic pow(unsigned long e) const;

    std::complex<double> to_complex() const;
    std::string str() const;

    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Total order compatible with equality, for use as a map key.
    bool operator<(const Cyclotomic& o) const;

private:
    long n_;
    TermList terms_;
};

// gcd/lcm/modular helpers shared across the library.
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_long(long a, long m);          // result in [0, m)
long mod_pow(long base, long exp, long m);
long mod_inverse(long a, long m);       // throws std::domain_error if gcd(a,m) != 1

}  // namespace drinfeld
