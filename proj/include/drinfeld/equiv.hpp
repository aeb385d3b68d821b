// Permutation-equivalence of modular data, Galois permutations of simples,
// Galois twist relabelings, and Galois orbits of cocycle parameters.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "drinfeld/modular.hpp"

namespace drinfeld {

struct GaloisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<long> image);
    static Permutation identity(long n);

    long size() const { return static_cast<long>(img_.size()); }
    long operator()(long i) const { return img_[i]; }
    const std::vector<long>& image() const { return img_; }

    Permutation inverse() const;
    // (a.then(b))(i) = b(a(i))
    Permutation then(const Permutation& o) const;
    bool is_identity() const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    std::vector<long> img_;
};

// A permutation pi with S2[pi(i)][pi(j)] = S1[i][j], T2[pi(i)] = T1[i] and
// pi(0) = 0, or nullopt. Partition refinement on exact entry values followed
// by backtracking; any witness is re-verified on all entries before being
// returned. Throws std::invalid_argument on rank mismatch.
std::optional<Permutation> find_equivalence(const ModularData& md1, const ModularData& md2);

// The unique sigma-hat with sigma_t(S[i][j]) = S[i][sigma-hat(j)]; also
// enforces sigma_t^2(T[i]) = T[sigma-hat(i)]. Throws GaloisError when no or
// multiple candidate columns match, and std::domain_error when
// gcd(t, conductor) != 1.
Permutation galois_permutation(const ModularData& md, long t);

struct RelabelReport {
    Permutation perm;
    long rank = 0;
    long v = 0;          // u * t mod p
    bool s_identity = false;
    bool t_identity = false;
};

// The label bijection (g, chi) -> (g, sigma_t chi) between the simples of
// (G, omega^u) and (G, omega^{ut mod p}), verified entrywise on both
// displayed identities. Throws GaloisError when some sigma_t(chi) is missing
// from the target enumeration.
RelabelReport galois_twist_relabel(const Group& G, long u, long t, int threads = 1);

struct CocycleOrbits {
    long p = 0;
    bool pairs = false;
    // Orbits in canonical order (sorted by minimal element); single-parameter
    // orbits use v = -1 in each pair.
    std::vector<std::vector<std::array<long, 2>>> orbits;
    long count() const { return static_cast<long>(orbits.size()); }
};

// Orbits of u in Z_p (or (u,v) in Z_p^2) under simultaneous multiplication
// by units t in Z_p^x.
CocycleOrbits cocycle_galois_orbits(long p, bool pairs);

}  // namespace drinfeld
