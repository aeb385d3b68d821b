#include "drinfeld/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "drinfeld/cyclotomic.hpp"

namespace drinfeld {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long multiplicative_order(long a, long m) {
    if (gcd_long(mod_long(a, m), m) != 1)
        throw std::domain_error("multiplicative_order: not a unit");
    long x = mod_long(a, m), acc = x, ord = 1;
    while (acc != 1 % m) {
        acc = (acc * x) % m;
        ++ord;
    }
    return ord;
}

struct Group::Impl {
    Kind kind;
    long order = 0;
    long p = 0, q = 0, n = 0;                 // Metacyclic (or Cyclic: order in n)
    std::vector<long> npow;                   // n^j mod q, j = 0..p-1
    std::shared_ptr<const Group> left, right; // Product
    std::vector<ConjClass> classes;
    std::vector<int> class_index;
};

Group::Kind Group::kind() const { return impl_->kind; }
long Group::order() const { return impl_->order; }

long Group::p() const {
    if (impl_->kind != Kind::Metacyclic) throw std::logic_error("p(): not metacyclic");
    return impl_->p;
}
long Group::q() const {
    if (impl_->kind != Kind::Metacyclic) throw std::logic_error("q(): not metacyclic");
    return impl_->q;
}
long Group::n() const {
    if (impl_->kind != Kind::Metacyclic) throw std::logic_error("n(): not metacyclic");
    return impl_->n;
}
const Group& Group::left() const {
    if (impl_->kind != Kind::Product) throw std::logic_error("left(): not a product");
    return *impl_->left;
}
const Group& Group::right() const {
    if (impl_->kind != Kind::Product) throw std::logic_error("right(): not a product");
    return *impl_->right;
}

Elt Group::metacyclic_element(long i, long j) const {
    return mod_long(i, impl_->q) * impl_->p + mod_long(j, impl_->p);
}
long Group::coord_a(Elt x) const { return x / impl_->p; }
long Group::coord_b(Elt x) const { return x % impl_->p; }

Elt Group::pair_element(Elt x1, Elt x2) const { return x1 * impl_->right->order() + x2; }
Elt Group::pair_left(Elt x) const { return x / impl_->right->order(); }
Elt Group::pair_right(Elt x) const { return x % impl_->right->order(); }

Elt Group::compose(Elt x, Elt y) const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Cyclic:
            return (x + y) % im.order;
        case Kind::Metacyclic: {
            // (a^i1 b^j1)(a^i2 b^j2) = a^{i1 + i2 n^{j1}} b^{j1+j2}
            long i1 = x / im.p, j1 = x % im.p;
            long i2 = y / im.p, j2 = y % im.p;
            long i = (i1 + i2 * im.npow[j1]) % im.q;
            long j = (j1 + j2) % im.p;
            return i * im.p + j;
        }
        case Kind::Product: {
            long r = im.right->order();
            return im.left->compose(x / r, y / r) * r + im.right->compose(x % r, y % r);
        }
    }
    throw std::logic_error("unreachable");
}

Elt Group::inverse(Elt x) const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Cyclic:
            return (im.order - x) % im.order;
        case Kind::Metacyclic: {
            long i = x / im.p, j = x % im.p;
            long jinv = (im.p - j) % im.p;
            long i2 = mod_long(-i * im.npow[jinv], im.q);
            return i2 * im.p + jinv;
        }
        case Kind::Product: {
            long r = im.right->order();
            return im.left->inverse(x / r) * r + im.right->inverse(x % r);
        }
    }
    throw std::logic_error("unreachable");
}

long Group::element_order(Elt x) const {
    long ord = 1;
    Elt acc = x;
    while (acc != identity()) {
        acc = compose(acc, x);
        ++ord;
    }
    return ord;
}

std::string Group::element_str(Elt x) const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Cyclic:
            if (x == 0) return "1";
            if (x == 1) return "g";
            return "g^" + std::to_string(x);
        case Kind::Metacyclic: {
            long i = x / im.p, j = x % im.p;
            if (i == 0 && j == 0) return "1";
            std::string s;
            if (i == 1) s = "a";
            else if (i > 1) s = "a^" + std::to_string(i);
            if (j >= 1) {
                if (!s.empty()) s += "*";
                s += (j == 1) ? "b" : "b^" + std::to_string(j);
            }
            return s;
        }
        case Kind::Product: {
            long r = im.right->order();
            return "(" + im.left->element_str(x / r) + "," + im.right->element_str(x % r) + ")";
        }
    }
    throw std::logic_error("unreachable");
}

const std::vector<ConjClass>& Group::conjugacy_classes() const { return impl_->classes; }
int Group::class_of(Elt x) const { return impl_->class_index[x]; }

namespace {

void sort_class(ConjClass& c) {
    std::vector<size_t> idx(c.members.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return c.members[a] < c.members[b]; });
    ConjClass out;
    out.rep = c.rep;
    for (size_t i : idx) {
        out.members.push_back(c.members[i]);
        out.conjugators.push_back(c.conjugators[i]);
    }
    c = std::move(out);
}

}  // namespace

Group Group::metacyclic(long p, long q, std::optional<long> n_opt) {
    if (!is_prime(p) || !is_prime(q))
        throw std::invalid_argument("metacyclic: p and q must be prime");
    if (q % 2 == 0 || p == q)
        throw std::invalid_argument("metacyclic: require q odd and p != q");
    if ((q - 1) % p != 0)
        throw std::invalid_argument("metacyclic: p does not divide q-1");
    long n;
    if (n_opt) {
        n = mod_long(*n_opt, q);
        if (n <= 1 || multiplicative_order(n, q) != p)
            throw std::invalid_argument("metacyclic: n has wrong multiplicative order");
    } else {
        n = 0;
        for (long c = 2; c < q; ++c) {
            if (mod_pow(c, p, q) == 1 && c != 1) { n = c; break; }
        }
        if (n == 0) throw std::logic_error("metacyclic: no action generator found");
    }

    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Metacyclic;
    impl->p = p;
    impl->q = q;
    impl->n = n;
    impl->order = p * q;
    impl->npow.resize(p);
    impl->npow[0] = 1;
    for (long j = 1; j < p; ++j) impl->npow[j] = (impl->npow[j - 1] * n) % q;

    // Classes: identity, then a-classes by minimal orbit member of
    // multiplication-by-n on Z_q \ {0}, then b^k, k = 1..p-1.
    impl->classes.push_back({0, {0}, {0}});
    std::vector<char> seen(q, 0);
    seen[0] = 1;
    for (long l = 1; l < q; ++l) {
        if (seen[l]) continue;
        ConjClass c;
        c.rep = l * p;
        long m = l;
        for (long s = 0; s < p; ++s) {
            seen[m] = 1;
            c.members.push_back(m * p);          // a^{l n^s}
            c.conjugators.push_back(0 * p + s);  // b^s
            m = (m * n) % q;
        }
        sort_class(c);
        impl->classes.push_back(std::move(c));
    }
    for (long k = 1; k < p; ++k) {
        ConjClass c;
        c.rep = 0 * p + k;  // b^k
        long inv = mod_inverse(mod_long(1 - impl->npow[k], q), q);
        for (long y = 0; y < q; ++y) {
            c.members.push_back(y * p + k);                    // a^y b^k
            c.conjugators.push_back(((y * inv) % q) * p + 0);  // a^{y/(1-n^k)}
        }
        impl->classes.push_back(std::move(c));
    }

    impl->class_index.assign(impl->order, -1);
    for (size_t ci = 0; ci < impl->classes.size(); ++ci)
        for (Elt m : impl->classes[ci].members) impl->class_index[m] = static_cast<int>(ci);

    return Group(std::move(impl));
}

Group Group::cyclic(long n) {
    if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Cyclic;
    impl->order = n;
    impl->n = n;
    for (long x = 0; x < n; ++x) impl->classes.push_back({x, {x}, {0}});
    impl->class_index.resize(n);
    std::iota(impl->class_index.begin(), impl->class_index.end(), 0);
    return Group(std::move(impl));
}

Group Group::product(const Group& a, const Group& b) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Product;
    impl->left = std::make_shared<Group>(a);
    impl->right = std::make_shared<Group>(b);
    impl->order = a.order() * b.order();
    long r = b.order();
    for (const auto& c1 : a.conjugacy_classes()) {
        for (const auto& c2 : b.conjugacy_classes()) {
            ConjClass c;
            c.rep = c1.rep * r + c2.rep;
            for (size_t i = 0; i < c1.members.size(); ++i)
                for (size_t j = 0; j < c2.members.size(); ++j) {
                    c.members.push_back(c1.members[i] * r + c2.members[j]);
                    c.conjugators.push_back(c1.conjugators[i] * r + c2.conjugators[j]);
                }
            impl->classes.push_back(std::move(c));
        }
    }
    impl->class_index.assign(impl->order, -1);
    for (size_t ci = 0; ci < impl->classes.size(); ++ci)
        for (Elt m : impl->classes[ci].members) impl->class_index[m] = static_cast<int>(ci);
    return Group(std::move(impl));
}

std::string Group::spec_string() const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Cyclic:
            return "cyclic:" + std::to_string(im.order);
        case Kind::Metacyclic:
            return "pq:" + std::to_string(im.p) + "," + std::to_string(im.q) +
                   ",n=" + std::to_string(im.n);
        case Kind::Product:
            return "prod:(" + im.left->spec_string() + ")x(" + im.right->spec_string() + ")";
    }
    throw std::logic_error("unreachable");
}

namespace {

Group parse_spec_at(const std::string& s, size_t& pos);

long parse_long(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("group spec: expected integer in '" + s + "'");
    return std::stol(s.substr(start, pos - start));
}

void expect(const std::string& s, size_t& pos, const std::string& tok) {
    if (s.compare(pos, tok.size(), tok) != 0)
        throw std::invalid_argument("group spec: expected '" + tok + "' in '" + s + "'");
    pos += tok.size();
}

Group parse_spec_at(const std::string& s, size_t& pos) {
    if (s.compare(pos, 3, "pq:") == 0) {
        pos += 3;
        long p = parse_long(s, pos);
        expect(s, pos, ",");
        long q = parse_long(s, pos);
        std::optional<long> n;
        if (s.compare(pos, 3, ",n=") == 0) {
            pos += 3;
            n = parse_long(s, pos);
        }
        return Group::metacyclic(p, q, n);
    }
    if (s.compare(pos, 7, "cyclic:") == 0) {
        pos += 7;
        return Group::cyclic(parse_long(s, pos));
    }
    if (s.compare(pos, 5, "prod:") == 0) {
        pos += 5;
        expect(s, pos, "(");
        Group a = parse_spec_at(s, pos);
        expect(s, pos, ")x(");
        Group b = parse_spec_at(s, pos);
        expect(s, pos, ")");
        return Group::product(a, b);
    }
    throw std::invalid_argument("group spec: unknown form '" + s + "'");
}

}  // namespace

Group Group::parse_spec(const std::string& spec) {
    size_t pos = 0;
    Group g = parse_spec_at(spec, pos);
    if (pos != spec.size())
        throw std::invalid_argument("group spec: trailing characters in '" + spec + "'");
    return g;
}

bool Group::same_structure(const Group& o) const {
    if (impl_ == o.impl_) return true;
    if (kind() != o.kind() || order() != o.order()) return false;
    switch (kind()) {
        case Kind::Cyclic: return true;
        case Kind::Metacyclic: return p() == o.p() && q() == o.q() && n() == o.n();
        case Kind::Product:
            return left().same_structure(o.left()) && right().same_structure(o.right());
    }
    return false;
}

Centralizer Group::centralizer(Elt g) const {
    if (g == identity() || kind() == Kind::Cyclic) {
        Centralizer c(Centralizer::Kind::Whole, *this, *this);
        return c;
    }
    if (kind() == Kind::Product) {
        Centralizer cl = left().centralizer(pair_left(g));
        Centralizer cr = right().centralizer(pair_right(g));
        Centralizer c(Centralizer::Kind::Product, *this,
                      Group::product(cl.local(), cr.local()));
        c.left_ = std::make_shared<Centralizer>(std::move(cl));
        c.right_ = std::make_shared<Centralizer>(std::move(cr));
        return c;
    }
    // Metacyclic, g != 1: the centralizer is cyclic. Collect it by a direct
    // commutation scan, then anchor it at its smallest non-identity member
    // (a for <a>, b for <b>).
    std::vector<Elt> members;
    for (Elt x = 0; x < order(); ++x)
        if (commute(x, g)) members.push_back(x);
    Elt gen = members[0] == identity() ? members[1] : members[0];
    long m = static_cast<long>(members.size());
    Centralizer c(Centralizer::Kind::CyclicGenerated, *this, Group::cyclic(m));
    c.generator_ = gen;
    c.powers_.reserve(m);
    Elt acc = identity();
    for (long x = 0; x < m; ++x) {
        c.powers_.push_back(acc);
        acc = compose(acc, gen);
    }
    if (acc != identity() ||
        std::set<Elt>(c.powers_.begin(), c.powers_.end()) != std::set<Elt>(members.begin(), members.end()))
        throw std::logic_error("centralizer: not cyclic on its smallest generator");
    return c;
}

bool Centralizer::contains(Elt g) const {
    switch (kind_) {
        case Kind::Whole: return g >= 0 && g < ambient_.order();
        case Kind::CyclicGenerated:
            return std::find(powers_.begin(), powers_.end(), g) != powers_.end();
        case Kind::Product:
            return left_->contains(ambient_.pair_left(g)) &&
                   right_->contains(ambient_.pair_right(g));
    }
    return false;
}

Elt Centralizer::to_local(Elt g) const {
    switch (kind_) {
        case Kind::Whole: return g;
        case Kind::CyclicGenerated: {
            auto it = std::find(powers_.begin(), powers_.end(), g);
            if (it == powers_.end())
                throw std::domain_error("to_local: element outside centralizer");
            return static_cast<Elt>(it - powers_.begin());
        }
        case Kind::Product: {
            Elt l = left_->to_local(ambient_.pair_left(g));
            Elt r = right_->to_local(ambient_.pair_right(g));
            return l * right_->order() + r;
        }
    }
    throw std::logic_error("unreachable");
}

Elt Centralizer::from_local(Elt x) const {
    switch (kind_) {
        case Kind::Whole: return x;
        case Kind::CyclicGenerated: return powers_[x];
        case Kind::Product: {
            Elt l = left_->from_local(x / right_->order());
            Elt r = right_->from_local(x % right_->order());
            return ambient_.pair_element(l, r);
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Elt> Centralizer::generators() const {
    switch (kind_) {
        case Kind::Whole:
            switch (ambient_.kind()) {
                case Group::Kind::Cyclic: return {ambient_.order() > 1 ? 1 : 0};
                case Group::Kind::Metacyclic:
                    return {ambient_.metacyclic_element(1, 0), ambient_.metacyclic_element(0, 1)};
                case Group::Kind::Product: {
                    std::vector<Elt> gen;
                    for (Elt g : ambient_.left().centralizer(0).generators())
                        gen.push_back(ambient_.pair_element(g, 0));
                    for (Elt g : ambient_.right().centralizer(0).generators())
                        gen.push_back(ambient_.pair_element(0, g));
                    return gen;
                }
            }
            break;
        case Kind::CyclicGenerated:
            return {generator_};
        case Kind::Product: {
            std::vector<Elt> gen;
            for (Elt g : left_->generators()) gen.push_back(ambient_.pair_element(g, 0));
            for (Elt g : right_->generators()) gen.push_back(ambient_.pair_element(0, g));
            return gen;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Elt> Centralizer::elements() const {
    std::vector<Elt> out;
    out.reserve(order());
    for (Elt x = 0; x < order(); ++x) out.push_back(from_local(x));
    std::sort(out.begin(), out.end());
    return out;
}

const Centralizer& Centralizer::factor_left() const {
    if (kind_ != Kind::Product) throw std::logic_error("factor_left: not a product");
    return *left_;
}
const Centralizer& Centralizer::factor_right() const {
    if (kind_ != Kind::Product) throw std::logic_error("factor_right: not a product");
    return *right_;
}

}  // namespace drinfeld
