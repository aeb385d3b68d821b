#include "drinfeld/equiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "drinfeld/simples.hpp"

namespace drinfeld {

Permutation::Permutation(std::vector<long> image) : img_(std::move(image)) {
    std::vector<char> seen(img_.size(), 0);
    for (long v : img_) {
        if (v < 0 || v >= static_cast<long>(img_.size()) || seen[v])
            throw std::invalid_argument("Permutation: image is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(long n) {
    std::vector<long> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<long> img(img_.size());
    for (long i = 0; i < size(); ++i) img[img_[i]] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<long> img(img_.size());
    for (long i = 0; i < size(); ++i) img[i] = o.img_[img_[i]];
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (long i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

namespace {

// Both matrices relabeled into one shared value id space, so that entry
// comparisons across the two data sets are integer comparisons.
struct JointView {
    long rank;
    std::vector<int> S1, T1, S2, T2;
};

JointView joint_view(const ModularData& a, const ModularData& b) {
    JointView jv;
    jv.rank = a.rank;
    std::map<Cyclotomic, int> ids;
    auto remap = [&](const ModularData& md, const std::vector<std::int32_t>& src,
                     std::vector<int>& dst) {
        std::vector<int> pool_map(md.pool.size());
        for (size_t i = 0; i < md.pool.size(); ++i) {
            auto [it, fresh] = ids.try_emplace(md.pool[i], static_cast<int>(ids.size()));
            pool_map[i] = it->second;
        }
        dst.resize(src.size());
        for (size_t i = 0; i < src.size(); ++i) dst[i] = pool_map[src[i]];
    };
    remap(a, a.S, jv.S1);
    remap(a, a.T, jv.T1);
    remap(b, b.S, jv.S2);
    remap(b, b.T, jv.T2);
    return jv;
}

// Jointly refine vertex colors on both sides; returns false as soon as the
// color class sizes disagree (no equivalence possible).
bool refine_colors(const JointView& jv, std::vector<int>& col1, std::vector<int>& col2) {
    const long r = jv.rank;
    using Key = std::vector<long>;

    auto assign = [&](std::vector<Key>& k1, std::vector<Key>& k2) {
        std::map<Key, int> palette;
        for (long i = 0; i < r; ++i) palette.try_emplace(k1[i], 0);
        for (long i = 0; i < r; ++i) palette.try_emplace(k2[i], 0);
        int next = 0;
        for (auto& [k, id] : palette) id = next++;
        std::map<int, long> n1, n2;
        for (long i = 0; i < r; ++i) {
            col1[i] = palette[k1[i]];
            col2[i] = palette[k2[i]];
            ++n1[col1[i]];
            ++n2[col2[i]];
        }
        return n1 == n2;
    };

    // Initial invariant: index 0 pinned, T, unit row, diagonal, and the row
    // multiset of (entry, T of column).
    {
        std::vector<Key> k1(r), k2(r);
        auto initial = [&](const std::vector<int>& S, const std::vector<int>& T,
                           std::vector<Key>& keys) {
            for (long i = 0; i < r; ++i) {
                Key k;
                k.push_back(i == 0 ? 0 : 1);
                k.push_back(T[i]);
                k.push_back(S[0 * r + i]);
                k.push_back(S[i * r + i]);
                std::vector<long> row;
                row.reserve(r);
                for (long j = 0; j < r; ++j)
                    row.push_back((static_cast<long>(S[i * r + j]) << 32) | T[j]);
                std::sort(row.begin(), row.end());
                k.insert(k.end(), row.begin(), row.end());
                keys[i] = std::move(k);
            }
        };
        initial(jv.S1, jv.T1, k1);
        initial(jv.S2, jv.T2, k2);
        if (!assign(k1, k2)) return false;
    }

    // Iterated refinement on (color, sorted multiset of (color_j, entry)).
    for (;;) {
        int before = 1 + *std::max_element(col1.begin(), col1.end());
        std::vector<Key> k1(r), k2(r);
        auto step = [&](const std::vector<int>& S, const std::vector<int>& col,
                        std::vector<Key>& keys) {
            for (long i = 0; i < r; ++i) {
                Key k;
                k.push_back(col[i]);
                std::vector<long> row;
                row.reserve(r);
                for (long j = 0; j < r; ++j)
                    row.push_back((static_cast<long>(col[j]) << 32) | S[i * r + j]);
                std::sort(row.begin(), row.end());
                k.insert(k.end(), row.begin(), row.end());
                keys[i] = std::move(k);
            }
        };
        step(jv.S1, col1, k1);
        step(jv.S2, col2, k2);
        if (!assign(k1, k2)) return false;
        int after = 1 + *std::max_element(col1.begin(), col1.end());
        if (after == before) return true;
    }
}

bool full_check(const JointView& jv, const std::vector<long>& img) {
    const long r = jv.rank;
    for (long i = 0; i < r; ++i) {
        if (jv.T2[img[i]] != jv.T1[i]) return false;
        for (long j = 0; j < r; ++j)
            if (jv.S2[img[i] * r + img[j]] != jv.S1[i * r + j]) return false;
    }
    return img[0] == 0;
}

}  // namespace

std::optional<Permutation> find_equivalence(const ModularData& md1, const ModularData& md2) {
    if (md1.rank != md2.rank)
        throw std::invalid_argument("find_equivalence: rank mismatch");
    const long r = md1.rank;
    JointView jv = joint_view(md1, md2);

    std::vector<int> col1(r), col2(r);
    if (!refine_colors(jv, col1, col2)) return std::nullopt;

    // Candidate targets per color, in index order.
    std::map<int, std::vector<long>> cells2;
    for (long j = 0; j < r; ++j) cells2[col2[j]].push_back(j);
    std::map<int, long> cell_size;
    for (auto& [c, v] : cells2) cell_size[c] = static_cast<long>(v.size());

    // Process smallest cells first, index order inside a cell.
    std::vector<long> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](long x, long y) {
        long sx = cell_size[col1[x]], sy = cell_size[col1[y]];
        if (sx != sy) return sx < sy;
        return x < y;
    });

    std::vector<long> img(r, -1);
    std::vector<char> used(r, 0);
    std::vector<long> assigned;  // source indices in assignment order

    auto consistent = [&](long i, long j) {
        if (jv.T2[j] != jv.T1[i]) return false;
        if (jv.S2[j * r + j] != jv.S1[i * r + i]) return false;
        for (long i2 : assigned) {
            long j2 = img[i2];
            if (jv.S2[j * r + j2] != jv.S1[i * r + i2]) return false;
            if (jv.S2[j2 * r + j] != jv.S1[i2 * r + i]) return false;
        }
        return true;
    };

    long depth = 0;
    std::vector<size_t> cursor(r + 1, 0);
    while (true) {
        if (depth == r) {
            if (full_check(jv, img)) return Permutation(img);
            // Treat a failed full check as a contradiction and keep searching.
            --depth;
            long i = order[depth];
            used[img[i]] = 0;
            img[i] = -1;
            assigned.pop_back();
            continue;
        }
        long i = order[depth];
        const auto& cand = cells2[col1[i]];
        bool advanced = false;
        for (size_t& c = cursor[depth]; c < cand.size(); ++c) {
            long j = cand[c];
            if (used[j] || !consistent(i, j)) continue;
            img[i] = j;
            used[j] = 1;
            assigned.push_back(i);
            ++cursor[depth];
            ++depth;
            cursor[depth] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) return std::nullopt;
        --depth;
        long prev = order[depth];
        used[img[prev]] = 0;
        img[prev] = -1;
        assigned.pop_back();
    }
}

Permutation galois_permutation(const ModularData& md, long t) {
    const long r = md.rank;
    const long N = md.meta.conductor;
    if (gcd_long(mod_long(t, N), N) != 1)
        throw std::domain_error("galois_permutation: gcd(t, conductor) != 1");

    // sigma_t maps the value pool into itself when the permutation exists.
    std::map<Cyclotomic, std::int32_t> pool_index;
    for (size_t i = 0; i < md.pool.size(); ++i) pool_index.emplace(md.pool[i], i);
    std::vector<std::int32_t> sigma_id(md.pool.size());
    for (size_t i = 0; i < md.pool.size(); ++i) {
        Cyclotomic image = md.pool[i].galois(t);
        auto it = pool_index.find(image);
        if (it == pool_index.end())
            throw GaloisError("galois_permutation: sigma(S) entry is not an S entry");
        sigma_id[i] = it->second;
    }

    std::map<std::vector<std::int32_t>, std::vector<long>> columns;
    for (long j = 0; j < r; ++j) {
        std::vector<std::int32_t> col(r);
        for (long i = 0; i < r; ++i) col[i] = md.s_id(i, j);
        columns[std::move(col)].push_back(j);
    }

    std::vector<long> img(r, -1);
    for (long j = 0; j < r; ++j) {
        std::vector<std::int32_t> scol(r);
        for (long i = 0; i < r; ++i) scol[i] = sigma_id[md.s_id(i, j)];
        auto it = columns.find(scol);
        if (it == columns.end())
            throw GaloisError("galois_permutation: no candidate column for " + std::to_string(j));
        if (it->second.size() != 1)
            throw GaloisError("galois_permutation: ambiguous column for " + std::to_string(j));
        img[j] = it->second[0];
    }
    Permutation perm{img};

    // sigma^2(T[i]) = T[sigma-hat(i)]
    long t2 = mod_long(mod_long(t, N) * mod_long(t, N), N);
    for (long i = 0; i < r; ++i) {
        if (md.t_at(i).galois(t2) != md.t_at(perm(i)))
            throw GaloisError("galois_permutation: sigma^2(T) identity fails at " +
                              std::to_string(i));
    }
    return perm;
}

RelabelReport galois_twist_relabel(const Group& G, long u, long t, int threads) {
    if (G.kind() != Group::Kind::Metacyclic)
        throw std::invalid_argument("galois_twist_relabel: group must be metacyclic");
    long p = G.p();
    if (gcd_long(mod_long(t, p), p) != 1)
        throw std::domain_error("galois_twist_relabel: t must be a unit mod p");
    long v = mod_long(u * t, p);

    Simples su = enumerate_simples(G, Cocycle3::inflate(Cocycle3::kappa(p, u), G));
    Simples sv = enumerate_simples(G, Cocycle3::inflate(Cocycle3::kappa(p, v), G));

    // (g, chi) -> (g, sigma_t chi), located by exact value-table match.
    std::vector<long> offset_u(su.classes.size()), offset_v(sv.classes.size());
    {
        long off = 0;
        for (size_t c = 0; c < su.classes.size(); ++c) {
            offset_u[c] = off;
            off += static_cast<long>(su.classes[c].chars.size());
        }
        off = 0;
        for (size_t c = 0; c < sv.classes.size(); ++c) {
            offset_v[c] = off;
            off += static_cast<long>(sv.classes[c].chars.size());
        }
    }
    std::vector<long> img(su.rank(), -1);
    for (size_t c = 0; c < su.classes.size(); ++c) {
        const auto& chars_u = su.classes[c].chars;
        const auto& chars_v = sv.classes[c].chars;
        for (size_t i = 0; i < chars_u.size(); ++i) {
            std::vector<Cyclotomic> twisted(chars_u[i].values.size());
            for (size_t x = 0; x < twisted.size(); ++x)
                twisted[x] = chars_u[i].values[x].galois(t);
            long found = -1;
            for (size_t j = 0; j < chars_v.size(); ++j) {
                if (chars_v[j].values == twisted) {
                    if (found != -1)
                        throw GaloisError("galois_twist_relabel: ambiguous character match");
                    found = static_cast<long>(j);
                }
            }
            if (found == -1)
                throw GaloisError("galois_twist_relabel: sigma(chi) not found among target simples");
            img[offset_u[c] + i] = offset_v[c] + found;
        }
    }

    RelabelReport rep;
    rep.perm = Permutation(img);
    rep.v = v;

    ModularData mu = compute_modular_data(su, threads);
    ModularData mv = compute_modular_data(sv, threads);
    rep.rank = mu.rank;

    std::vector<Cyclotomic> sigma_pool(mu.pool.size());
    for (size_t i = 0; i < mu.pool.size(); ++i) sigma_pool[i] = mu.pool[i].galois(t);

    rep.s_identity = true;
    for (long i = 0; i < mu.rank && rep.s_identity; ++i)
        for (long j = 0; j < mu.rank; ++j)
            if (mv.s_at(rep.perm(i), rep.perm(j)) != sigma_pool[mu.s_id(i, j)]) {
                rep.s_identity = false;
                break;
            }
    rep.t_identity = true;
    for (long i = 0; i < mu.rank; ++i)
        if (mv.t_at(rep.perm(i)) != mu.t_at(i).galois(t)) {
            rep.t_identity = false;
            break;
        }
    return rep;
}

CocycleOrbits cocycle_galois_orbits(long p, bool pairs) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("cocycle_galois_orbits: p must be an odd prime");
    CocycleOrbits out;
    out.p = p;
    out.pairs = pairs;
    if (!pairs) {
        std::vector<char> seen(p, 0);
        for (long x = 0; x < p; ++x) {
            if (seen[x]) continue;
            std::set<long> orbit;
            for (long t = 1; t < p; ++t) orbit.insert(t * x % p);
            std::vector<std::array<long, 2>> o;
            for (long y : orbit) {
                seen[y] = 1;
                o.push_back({y, -1});
            }
            out.orbits.push_back(std::move(o));
        }
        return out;
    }
    std::vector<char> seen(p * p, 0);
    for (long x = 0; x < p * p; ++x) {
        if (seen[x]) continue;
        long xu = x / p, xv = x % p;
        std::set<long> orbit;
        for (long t = 1; t < p; ++t) orbit.insert((t * xu % p) * p + (t * xv % p));
        std::vector<std::array<long, 2>> o;
        for (long y : orbit) {
            seen[y] = 1;
            o.push_back({y / p, y % p});
        }
        out.orbits.push_back(std::move(o));
    }
    return out;
}

}  // namespace drinfeld
