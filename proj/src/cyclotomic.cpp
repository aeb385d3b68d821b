#include "drinfeld/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drinfeld {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_long(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mod_pow(long base, long exp, long m) {
    base = mod_long(base, m);
    long acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = (acc * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return acc;
}

long mod_inverse(long a, long m) {
    long t = 0, new_t = 1;
    long r = m, new_r = mod_long(a, m);
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_long(t, m);
}

namespace {

struct PrimePower {
    long p;
    long pk;      // p^a
    long cofac;   // n / p^a
    long inv;     // cofac^{-1} mod pk
    long phi;     // phi(p^a)
};

// Prime-power split of n together with the CRT data used to move between
// exponents mod n and per-prime-power exponents.
std::vector<PrimePower> split_conductor(long n) {
    std::vector<PrimePower> out;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        long pk = 1;
        while (m % p == 0) { m /= p; pk *= p; }
        out.push_back({p, pk, 0, 0, pk / p * (p - 1)});
    }
    if (m > 1) out.push_back({m, m, 0, 0, m - 1});
    for (auto& pp : out) {
        pp.cofac = n / pp.pk;
        pp.inv = mod_inverse(pp.cofac, pp.pk);
    }
    return out;
}

}  // namespace

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
    Cyclotomic x;
    if (r != 0) x.terms_.emplace_back(0, r);
    return x;
}

Cyclotomic Cyclotomic::from_terms(long n, const TermList& raw) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    const auto pps = split_conductor(n);

    // Rewrite every exponent into the root-of-unity basis. Per prime power
    // p^a, exponents f < phi(p^a) are basis elements; otherwise
    //   zeta^f = -(zeta^r + zeta^{r+p^{a-1}} + ... + zeta^{r+(p-2)p^{a-1}}),
    // with r = f - phi(p^a), which lands inside the basis range in one step.
    std::map<long, Rational> acc;
    std::vector<std::vector<long>> factor_exps;   // per prime power, local exponents
    for (const auto& [e_raw, c] : raw) {
        if (c == 0) continue;
        long e = mod_long(e_raw, n);
        factor_exps.assign(pps.size(), {});
        int sign = 1;
        for (size_t i = 0; i < pps.size(); ++i) {
            const auto& pp = pps[i];
            long f = (pp.inv * (e % pp.pk)) % pp.pk;
            if (f < pp.phi) {
                factor_exps[i] = {f};
            } else {
                sign = -sign;
                long r = f - pp.phi;
                long step = pp.pk / pp.p;
                auto& v = factor_exps[i];
                v.reserve(pp.p - 1);
                for (long m = 0; m + 2 <= pp.p; ++m) v.push_back(r + m * step);
            }
        }
        // Cartesian expansion, recombining exponents e' = sum cofac_i * f_i mod n.
        std::vector<size_t> idx(pps.size(), 0);
        while (true) {
            long ee = 0;
            for (size_t i = 0; i < pps.size(); ++i)
                ee = mod_long(ee + pps[i].cofac % n * factor_exps[i][idx[i]], n);
            auto& slot = acc[ee];
            if (sign > 0) slot += c; else slot -= c;
            size_t i = 0;
            for (; i < pps.size(); ++i) {
                if (++idx[i] < factor_exps[i].size()) break;
                idx[i] = 0;
            }
            if (i == pps.size()) break;
        }
        if (pps.empty()) {  // n == 1
            acc[0] += c;
        }
    }

    Cyclotomic x;
    x.n_ = n;
    long g = n;
    for (auto& [e, c] : acc) {
        if (c == 0) continue;
        x.terms_.emplace_back(e, std::move(c));
        g = gcd_long(g, e);
    }
    if (x.terms_.empty()) {
        x.n_ = 1;
        return x;
    }
    if (g > 1) {
        x.n_ = n / g;
        for (auto& [e, c] : x.terms_) e /= g;
    }
    return x;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
    return from_terms(n, {{mod_long(k, n), Rational(1)}});
}

bool Cyclotomic::is_rational() const {
    return terms_.empty() || (n_ == 1 && terms_.size() == 1);
}

Rational Cyclotomic::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("value is not rational");
    return terms_[0].second;
}

bool Cyclotomic::is_integer() const {
    if (!is_rational()) return false;
    return rational_value().get_den() == 1;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    // Promotion from level m to level lcm multiplies exponents by lcm/m and
    // stays inside the canonical basis, so a merge needs no rewriting.
    long n = lcm_long(n_, o.n_);
    long sa = n / n_, sb = n / o.n_;
    std::map<long, Rational> acc;
    for (const auto& [e, c] : terms_) acc[e * sa] += c;
    for (const auto& [e, c] : o.terms_) acc[e * sb] += c;

    Cyclotomic x;
    x.n_ = n;
    long g = n;
    for (auto& [e, c] : acc) {
        if (c == 0) continue;
        x.terms_.emplace_back(e, std::move(c));
        g = gcd_long(g, e);
    }
    if (x.terms_.empty()) { x.n_ = 1; return x; }
    if (g > 1) {
        x.n_ = n / g;
        for (auto& [e, c] : x.terms_) e /= g;
    }
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& [e, c] : x.terms_) c = -c;
    return x;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (terms_.empty() || o.terms_.empty()) return zero();
    long n = lcm_long(n_, o.n_);
    long sa = n / n_, sb = n / o.n_;
    TermList raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            raw.emplace_back(mod_long(ea * sa + eb * sb, n), ca * cb);
    return from_terms(n, raw);
}

Cyclotomic Cyclotomic::scale(const Rational& r) const {
    if (r == 0) return zero();
    Cyclotomic x = *this;
    for (auto& [e, c] : x.terms_) c *= r;
    return x;
}

Cyclotomic Cyclotomic::galois(long t) const {
    long tm = mod_long(t, n_);
    if (gcd_long(tm, n_) != 1)
        throw std::domain_error("galois: exponent not coprime to conductor");
    TermList raw;
    raw.reserve(terms_.size());
    for (const auto& [e, c] : terms_) raw.emplace_back(mod_long(e * tm, n_), c);
    return from_terms(n_, raw);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(n_ - 1); }

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic acc = one(), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    for (const auto& [e, c] : terms_) {
        double arg = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(n_);
        z += c.get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

std::string Cyclotomic::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "z" << n_;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
        int c = cmp(terms_[i].second, o.terms_[i].second);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace drinfeld
