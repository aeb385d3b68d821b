#include "drinfeld/modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace drinfeld {

namespace {

struct Interner {
    std::map<Cyclotomic, std::int32_t> index;
    std::vector<Cyclotomic>* pool;

    std::int32_t intern(const Cyclotomic& v) {
        auto [it, fresh] = index.try_emplace(v, static_cast<std::int32_t>(pool->size()));
        if (fresh) pool->push_back(v);
        return it->second;
    }
};

// Character values at a fixed working level N: (exponent, integer coefficient).
using Compact = std::vector<std::pair<long, long>>;

Compact to_compact(const Cyclotomic& v, long N) {
    if (N % v.conductor() != 0) throw std::logic_error("to_compact: conductor does not divide N");
    long s = N / v.conductor();
    Compact out;
    out.reserve(v.terms().size());
    for (const auto& [e, c] : v.terms()) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
            throw std::logic_error("to_compact: coefficient not a small integer");
        out.emplace_back(e * s, c.get_num().get_si());
    }
    return out;
}

// Side data of one conjugacy class for the S sum: conjugated character
// tables (row role) and per-local-class sums of conjugated characters
// (column role).
struct ClassSide {
    const ClassSimples* cs = nullptr;
    const ConjClass* cls = nullptr;
    long cent_order = 1;
    long label_offset = 0;
    std::vector<std::vector<Compact>> chi_conj;        // [char][local elt]
    std::vector<int> local_class_of;                   // [local elt]
    std::vector<long> cent_factor;                     // [local class] |L| / |class|
    std::vector<std::vector<Compact>> eta_class_sums;  // [char][local class]
};

struct HTerm {
    Elt h_local;
    int lclass;
    long factor;
};

long working_conductor(const Simples& simples) {
    long N = simples.omega.modulus();
    for (const auto& c : simples.classes) N = lcm_long(N, c.cent.order());
    return N;
}

std::vector<long> twist_of(const Cocycle3& omega) {
    switch (omega.kind()) {
        case Cocycle3::Kind::Trivial: return {};
        case Cocycle3::Kind::Kappa:
        case Cocycle3::Kind::Inflated: return {omega.u()};
        case Cocycle3::Kind::ProductInflated: return {omega.u(), omega.v()};
    }
    return {};
}

}  // namespace

std::vector<Cyclotomic> t_values(const Simples& simples) {
    std::vector<Cyclotomic> out;
    out.reserve(simples.labels.size());
    for (const auto& label : simples.labels) {
        const ClassSimples& cs = simples.classes[label.class_index];
        const ProjectiveCharacter& chi = cs.chars[label.char_ordinal];
        Cyclotomic v = chi.values[cs.cent.to_local(label.rep)];
        out.push_back(v.scale(Rational(1, chi.degree)));
    }
    return out;
}

ModularData compute_modular_data(const Simples& simples, int threads) {
    const Group& G = simples.G;
    const long N = working_conductor(simples);
    const long rank = simples.rank();

    ModularData md;
    md.meta.group_spec = G.spec_string();
    md.meta.twist = twist_of(simples.omega);
    md.meta.group_order = G.order();
    md.meta.conductor = N;
    md.rank = rank;
    md.labels.reserve(rank);
    for (const auto& l : simples.labels)
        md.labels.push_back(LabelInfo{G.element_str(l.rep), l.class_index, l.char_ordinal,
                                      l.class_size, l.degree, l.dimension});

    Interner interner{{}, &md.pool};

    md.T.reserve(rank);
    for (const Cyclotomic& v : t_values(simples)) md.T.push_back(interner.intern(v));

    // Per-class side data.
    const auto& classes = G.conjugacy_classes();
    std::vector<ClassSide> side(classes.size());
    {
        long offset = 0;
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            ClassSide& sd = side[ci];
            sd.cs = &simples.classes[ci];
            sd.cls = &classes[ci];
            sd.cent_order = sd.cs->cent.order();
            sd.label_offset = offset;
            offset += static_cast<long>(sd.cs->chars.size());

            const Group& L = sd.cs->cent.local();
            const auto& lclasses = L.conjugacy_classes();
            sd.local_class_of.resize(L.order());
            for (Elt x = 0; x < L.order(); ++x) sd.local_class_of[x] = L.class_of(x);
            sd.cent_factor.resize(lclasses.size());
            for (size_t lc = 0; lc < lclasses.size(); ++lc)
                sd.cent_factor[lc] = L.order() / static_cast<long>(lclasses[lc].members.size());

            sd.chi_conj.resize(sd.cs->chars.size());
            sd.eta_class_sums.resize(sd.cs->chars.size());
            for (size_t t = 0; t < sd.cs->chars.size(); ++t) {
                const auto& vals = sd.cs->chars[t].values;
                std::vector<Cyclotomic> conj(vals.size());
                sd.chi_conj[t].resize(vals.size());
                for (size_t x = 0; x < vals.size(); ++x) {
                    conj[x] = vals[x].conjugate();
                    sd.chi_conj[t][x] = to_compact(conj[x], N);
                }
                sd.eta_class_sums[t].resize(lclasses.size());
                for (size_t lc = 0; lc < lclasses.size(); ++lc) {
                    Cyclotomic sum = Cyclotomic::zero();
                    for (Elt m : lclasses[lc].members) sum += conj[m];
                    sd.eta_class_sums[t][lc] = to_compact(sum, N);
                }
            }
        }
    }

    md.S.assign(rank * rank, 0);

    std::vector<HTerm> valid;
    std::vector<Cyclotomic> block;
    for (size_t ca = 0; ca < classes.size(); ++ca) {
        const ClassSide& A = side[ca];
        const Elt a = A.cls->rep;
        for (size_t cb = 0; cb < classes.size(); ++cb) {
            const ClassSide& B = side[cb];

            valid.clear();
            for (size_t m = 0; m < B.cls->members.size(); ++m) {
                Elt h = B.cls->members[m];
                if (!G.commute(a, h)) continue;
                Elt gh = B.cls->conjugators[m];
                Elt a1 = G.compose(G.compose(G.inverse(gh), a), gh);
                Elt la = B.cs->cent.to_local(a1);
                int lc = B.local_class_of[la];
                valid.push_back(HTerm{A.cs->cent.to_local(h), lc, B.cent_factor[lc]});
            }

            const long nA = static_cast<long>(A.cs->chars.size());
            const long nB = static_cast<long>(B.cs->chars.size());
            block.assign(nA * nB, Cyclotomic::zero());

            Rational denom(A.cent_order * B.cent_order);
            auto run_range = [&](long lo, long hi) {
                std::vector<long long> acc(N, 0);
                std::vector<long> touched;
                Cyclotomic::TermList terms;
                for (long idx = lo; idx < hi; ++idx) {
                    long ti = idx / nB, tj = idx % nB;
                    const auto& chi_tab = A.chi_conj[ti];
                    const auto& eta_sums = B.eta_class_sums[tj];
                    for (const HTerm& ht : valid) {
                        const Compact& cv = chi_tab[ht.h_local];
                        const Compact& sv = eta_sums[ht.lclass];
                        for (const auto& [e1, c1] : cv) {
                            long long w = static_cast<long long>(c1) * ht.factor;
                            for (const auto& [e2, c2] : sv) {
                                long e = e1 + e2;
                                if (e >= N) e -= N;
                                if (acc[e] == 0 && c2 != 0) touched.push_back(e);
                                acc[e] += w * c2;
                            }
                        }
                    }
                    terms.clear();
                    std::sort(touched.begin(), touched.end());
                    for (long e : touched) {
                        if (acc[e] == 0) continue;
                        Rational r(static_cast<long>(acc[e]));
                        r /= denom;
                        terms.emplace_back(e, r);
                        acc[e] = 0;
                    }
                    touched.clear();
                    block[idx] = Cyclotomic::from_terms(N, terms);
                }
            };

            const long total = nA * nB;
            if (threads > 1 && total >= 64 && !valid.empty()) {
                int nt = std::min<long>(threads, total);
                std::vector<std::thread> pool_threads;
                long chunk = (total + nt - 1) / nt;
                for (int t = 0; t < nt; ++t) {
                    long lo = t * chunk, hi = std::min(total, lo + chunk);
                    if (lo >= hi) break;
                    pool_threads.emplace_back(run_range, lo, hi);
                }
                for (auto& th : pool_threads) th.join();
            } else if (!valid.empty()) {
                run_range(0, total);
            }

            for (long ti = 0; ti < nA; ++ti)
                for (long tj = 0; tj < nB; ++tj)
                    md.S[(A.label_offset + ti) * rank + (B.label_offset + tj)] =
                        interner.intern(block[ti * nB + tj]);
        }
    }
    return md;
}

ModularData compute_modular_data(const Group& G, const Cocycle3& omega, int threads) {
    return compute_modular_data(enumerate_simples(G, omega), threads);
}

ModularData kronecker(const ModularData& a, const ModularData& b) {
    ModularData md;
    md.meta.group_spec = "prod:(" + a.meta.group_spec + ")x(" + b.meta.group_spec + ")";
    md.meta.twist = a.meta.twist;
    md.meta.twist.insert(md.meta.twist.end(), b.meta.twist.begin(), b.meta.twist.end());
    md.meta.group_order = a.meta.group_order * b.meta.group_order;
    md.meta.conductor = lcm_long(a.meta.conductor, b.meta.conductor);
    md.rank = a.rank * b.rank;

    // Per-class character counts on each side, to give product labels the
    // ordinals they would get in the direct enumeration of the product group.
    auto chars_per_class = [](const ModularData& m) {
        std::map<int, long> counts;
        for (const auto& l : m.labels) ++counts[l.class_index];
        return counts;
    };
    auto counts_b = chars_per_class(b);
    long nclasses_b = static_cast<long>(counts_b.size());

    md.labels.reserve(md.rank);
    for (const auto& l1 : a.labels) {
        for (const auto& l2 : b.labels) {
            LabelInfo l;
            l.class_rep = "(" + l1.class_rep + "," + l2.class_rep + ")";
            l.class_index = l1.class_index * nclasses_b + l2.class_index;
            l.char_ordinal =
                l1.char_ordinal * static_cast<int>(counts_b[l2.class_index]) + l2.char_ordinal;
            l.class_size = l1.class_size * l2.class_size;
            l.degree = l1.degree * l2.degree;
            l.dimension = l1.dimension * l2.dimension;
            md.labels.push_back(std::move(l));
        }
    }

    Interner interner{{}, &md.pool};
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> prod_cache;
    auto product_id = [&](std::int32_t i, std::int32_t j) {
        auto it = prod_cache.find({i, j});
        if (it != prod_cache.end()) return it->second;
        std::int32_t id = interner.intern(a.pool[i] * b.pool[j]);
        prod_cache.emplace(std::make_pair(i, j), id);
        return id;
    };

    md.T.reserve(md.rank);
    for (long i1 = 0; i1 < a.rank; ++i1)
        for (long i2 = 0; i2 < b.rank; ++i2) md.T.push_back(product_id(a.T[i1], b.T[i2]));

    md.S.resize(md.rank * md.rank);
    for (long i1 = 0; i1 < a.rank; ++i1)
        for (long i2 = 0; i2 < b.rank; ++i2) {
            long row = i1 * b.rank + i2;
            for (long j1 = 0; j1 < a.rank; ++j1)
                for (long j2 = 0; j2 < b.rank; ++j2)
                    md.S[row * md.rank + (j1 * b.rank + j2)] =
                        product_id(a.s_id(i1, j1), b.s_id(i2, j2));
        }
    return md;
}

std::vector<long> kronecker_to_direct_map(const ModularData& kron) {
    std::vector<long> order(kron.rank);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](long x, long y) {
        const LabelInfo& lx = kron.labels[x];
        const LabelInfo& ly = kron.labels[y];
        if (lx.class_index != ly.class_index) return lx.class_index < ly.class_index;
        return lx.char_ordinal < ly.char_ordinal;
    });
    std::vector<long> map(kron.rank);
    for (long pos = 0; pos < kron.rank; ++pos) map[order[pos]] = pos;
    return map;
}

namespace {

// Accumulates sums of pairwise products of values at a fixed level N,
// canonicalizing once at the end.
struct EntryAccum {
    long N;
    std::vector<Rational> acc;
    std::vector<long> touched;

    explicit EntryAccum(long n) : N(n), acc(n) {}

    void add_product(const Cyclotomic& x, const Cyclotomic& y, const Rational& scale) {
        long sx = N / x.conductor(), sy = N / y.conductor();
        for (const auto& [ex, cx] : x.terms()) {
            for (const auto& [ey, cy] : y.terms()) {
                long e = ex * sx + ey * sy;
                e %= N;
                if (acc[e] == 0) touched.push_back(e);
                if (scale == 1) acc[e] += cx * cy;
                else acc[e] += cx * cy * scale;
            }
        }
    }

    Cyclotomic take() {
        Cyclotomic::TermList terms;
        std::sort(touched.begin(), touched.end());
        for (long e : touched) {
            if (acc[e] != 0) terms.emplace_back(e, acc[e]);
            acc[e] = 0;
        }
        touched.clear();
        return Cyclotomic::from_terms(N, terms);
    }
};

std::string fmt_entry(long i, long j) {
    std::ostringstream os;
    os << "entry (" << i << "," << j << ")";
    return os.str();
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass || c.skipped; });
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.skipped ? "[skip] " : (c.pass ? "[ok]   " : "[FAIL] ")) << c.name;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

long verlinde(const ModularData& md, long i, long j, long k) {
    const long r = md.rank;
    EntryAccum acc(md.meta.conductor);
    for (long x = 0; x < r; ++x) {
        const Cyclotomic& s0 = md.s_at(0, x);
        if (!s0.is_rational() || s0.rational_value() <= 0)
            throw VerificationError("verlinde: S[0][x] is not a positive rational");
        Cyclotomic ij = md.s_at(i, x) * md.s_at(j, x);
        acc.add_product(ij, md.s_at(k, x).conjugate(), 1 / s0.rational_value());
    }
    Cyclotomic nval = acc.take();
    if (!nval.is_rational())
        throw VerificationError("verlinde: N_{ij}^k is not rational");
    Rational rv = nval.rational_value();
    if (rv.get_den() != 1 || rv < 0)
        throw VerificationError("verlinde: N_{ij}^k = " + rv.get_str() +
                                " is not a nonnegative integer");
    return static_cast<long>(rv.get_num().get_si());
}

VerifyReport verify_modular(const ModularData& md, const VerifyOptions& opts) {
    VerifyReport report;
    const long r = md.rank;
    const long N = md.meta.conductor;
    const bool big = r > opts.full_rank_bound;

    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back(CheckResult{name, pass, false, detail});
    };
    auto add_skip = [&](const std::string& name) {
        report.checks.push_back(
            CheckResult{name, false, true, "skipped at rank " + std::to_string(r)});
    };

    // (i) symmetry
    {
        bool ok = true;
        std::string detail;
        for (long i = 0; i < r && ok; ++i)
            for (long j = i + 1; j < r; ++j)
                if (md.s_id(i, j) != md.s_id(j, i)) {
                    ok = false;
                    detail = fmt_entry(i, j);
                    break;
                }
        add("(i) S symmetric", ok, detail);
    }

    std::vector<Cyclotomic> conj_pool(md.pool.size());
    for (size_t v = 0; v < md.pool.size(); ++v) conj_pool[v] = md.pool[v].conjugate();

    // (ii) unitarity
    if (big) {
        add_skip("(ii) S unitary");
    } else {
        bool ok = true;
        std::string detail;
        EntryAccum acc(N);
        for (long i = 0; i < r && ok; ++i) {
            for (long j = i; j < r && ok; ++j) {
                for (long x = 0; x < r; ++x)
                    acc.add_product(md.s_at(i, x), conj_pool[md.s_id(j, x)], 1);
                Cyclotomic v = acc.take();
                Cyclotomic expect = (i == j) ? Cyclotomic::one() : Cyclotomic::zero();
                if (v != expect) { ok = false; detail = fmt_entry(i, j); }
            }
        }
        add("(ii) S unitary", ok, detail);
    }

    // (iii) S^2 is a permutation C, C^2 = 1, C(0) = 0
    std::vector<long> cperm;
    bool perm_ok = false;
    if (big) {
        add_skip("(iii) S^2 permutation, C^2 = 1, C(0) = 0");
    } else {
        perm_ok = true;
        std::string detail;
        cperm.assign(r, -1);
        EntryAccum acc(N);
        for (long i = 0; i < r && perm_ok; ++i) {
            for (long j = 0; j < r && perm_ok; ++j) {
                for (long x = 0; x < r; ++x) acc.add_product(md.s_at(i, x), md.s_at(x, j), 1);
                Cyclotomic v = acc.take();
                if (v.is_zero()) continue;
                if (v != Cyclotomic::one() || cperm[i] != -1) {
                    perm_ok = false;
                    detail = fmt_entry(i, j);
                    break;
                }
                cperm[i] = j;
            }
            if (perm_ok && cperm[i] == -1) {
                perm_ok = false;
                detail = "row " + std::to_string(i) + " has no unit entry";
            }
        }
        if (perm_ok) {
            for (long i = 0; i < r; ++i)
                if (cperm[cperm[i]] != i) { perm_ok = false; detail = "C^2 != 1"; break; }
            if (perm_ok && cperm[0] != 0) { perm_ok = false; detail = "C(0) != 0"; }
        }
        add("(iii) S^2 permutation, C^2 = 1, C(0) = 0", perm_ok, detail);
    }

    // (iv) (S diag(T))^3 = lambda S^2 with lambda * conj(lambda) = 1
    if (big) {
        add_skip("(iv) (S T)^3 = lambda S^2, |lambda| = 1");
    } else if (!perm_ok) {
        add("(iv) (S T)^3 = lambda S^2, |lambda| = 1", false, "prerequisite (iii) failed");
    } else {
        // A = S T S, then M3 = A T S T entrywise; compare with lambda at the
        // permutation positions.
        std::vector<Cyclotomic> A(r * r);
        {
            EntryAccum acc(N);
            for (long i = 0; i < r; ++i)
                for (long j = 0; j < r; ++j) {
                    for (long x = 0; x < r; ++x)
                        acc.add_product(md.s_at(i, x) * md.t_at(x), md.s_at(x, j), 1);
                    A[i * r + j] = acc.take();
                }
        }
        bool ok = true;
        std::string detail;
        Cyclotomic lambda;
        {
            EntryAccum acc(N);
            for (long x = 0; x < r; ++x)
                acc.add_product(A[0 * r + x] * md.t_at(x), md.s_at(x, 0) * md.t_at(0), 1);
            lambda = acc.take();  // C[0][0] = 1
        }
        if (lambda.is_zero() || (lambda * lambda.conjugate()) != Cyclotomic::one()) {
            ok = false;
            detail = "lambda * conj(lambda) != 1";
        }
        EntryAccum acc(N);
        for (long i = 0; i < r && ok; ++i)
            for (long j = 0; j < r && ok; ++j) {
                for (long x = 0; x < r; ++x)
                    acc.add_product(A[i * r + x] * md.t_at(x), md.s_at(x, j) * md.t_at(j), 1);
                Cyclotomic v = acc.take();
                Cyclotomic expect = (cperm[i] == j) ? lambda : Cyclotomic::zero();
                if (v != expect) { ok = false; detail = fmt_entry(i, j); }
            }
        add("(iv) (S T)^3 = lambda S^2, |lambda| = 1", ok, detail);
    }

    // (v) T[0] = 1
    add("(v) T[0] = 1", md.t_at(0) == Cyclotomic::one());

    // (vi) Verlinde coefficients
    {
        bool ok = true;
        std::string detail;
        auto probe = [&](long i, long j, long k) {
            try {
                verlinde(md, i, j, k);
                return true;
            } catch (const VerificationError& e) {
                detail = "N(" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(k) + "): " + e.what();
                return false;
            }
        };
        if (r <= opts.verlinde_full_bound) {
            for (long i = 0; i < r && ok; ++i)
                for (long j = 0; j < r && ok; ++j)
                    for (long k = 0; k < r && ok; ++k) ok = probe(i, j, k);
            add("(vi) Verlinde coefficients (full tensor)", ok, detail);
        } else {
            std::mt19937 rng(opts.seed);
            std::uniform_int_distribution<long> pick(0, r - 1);
            for (int s = 0; s < opts.verlinde_samples && ok; ++s)
                ok = probe(pick(rng), pick(rng), pick(rng));
            add("(vi) Verlinde coefficients (" + std::to_string(opts.verlinde_samples) +
                    " sampled triples)",
                ok, detail);
        }
    }

    // (vii) unit row = dimensions / |G|
    {
        bool ok = true;
        std::string detail;
        for (long i = 0; i < r && ok; ++i) {
            const Cyclotomic& v = md.s_at(0, i);
            Rational expect(md.labels[i].dimension, md.meta.group_order);
            expect.canonicalize();
            if (!v.is_rational() || v.rational_value() != expect || expect <= 0) {
                ok = false;
                detail = "index " + std::to_string(i);
            }
        }
        add("(vii) S[0][i]*|G| = dimensions", ok, detail);
    }

    return report;
}

}  // namespace drinfeld
