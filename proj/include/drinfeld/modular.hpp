// Modular data (S, T) of D_omega(G)-Mod over exact cyclotomic numbers.
//
// S[(a,chi)][(b,eta)] = 1/(|C(a)||C(b)|) *
//     sum over g in G with a(gbg^-1) = (gbg^-1)a of
//         conj(chi(g b g^-1)) * conj(eta(g^-1 a g)),
// T[(g,chi)] = chi(g)/chi(1).
//
// Matrices store indices into a per-dataset pool of distinct canonical
// values, so large Kronecker products stay small in memory and entrywise
// equality is an integer comparison.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/cohomology.hpp"
#include "drinfeld/cyclotomic.hpp"
#include "drinfeld/group.hpp"
#include "drinfeld/simples.hpp"

namespace drinfeld {

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LabelInfo {
    std::string class_rep;
    int class_index = -1;
    int char_ordinal = 0;
    long class_size = 1;
    long degree = 1;
    long dimension = 1;
};

struct MDMeta {
    std::string group_spec;
    std::vector<long> twist;  // {} | {u} | {u, v}
    long group_order = 1;
    long conductor = 1;
};

class ModularData {
public:
    MDMeta meta;
    long rank = 0;
    std::vector<LabelInfo> labels;
    std::vector<Cyclotomic> pool;
    std::vector<std::int32_t> S;  // rank*rank pool indices, row-major
    std::vector<std::int32_t> T;  // rank pool indices

    std::int32_t s_id(long i, long j) const { return S[i * rank + j]; }
    const Cyclotomic& s_at(long i, long j) const { return pool[s_id(i, j)]; }
    const Cyclotomic& t_at(long i) const { return pool[T[i]]; }
};

// T entries alone (cheap; no S matrix).
std::vector<Cyclotomic> t_values(const Simples& simples);

ModularData compute_modular_data(const Simples& simples, int threads = 1);
ModularData compute_modular_data(const Group& G, const Cocycle3& omega, int threads = 1);

ModularData kronecker(const ModularData& a, const ModularData& b);

// Permutation sending the Kronecker label (i1,i2) (flattened i1*rank(b)+i2)
// to the position of the same (class pair, character pair) in the direct
// enumeration on the product group.
std::vector<long> kronecker_to_direct_map(const ModularData& kron);

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string summary() const;
};

struct VerifyOptions {
    long full_rank_bound = 100;    // O(rank^3) checks run only up to this rank
    long verlinde_full_bound = 30; // full fusion tensor up to this rank
    int verlinde_samples = 200;
    unsigned seed = 20240903;
};

// The seven exact checks: (i) S symmetric; (ii) S unitary; (iii) S^2 a
// permutation C with C^2 = 1, C(0) = 0; (iv) (S diag(T))^3 = lambda S^2 with
// lambda conj(lambda) = 1; (v) T[0] = 1; (vi) Verlinde coefficients are
// nonnegative integers; (vii) S[0][i]*|G| equals the label dimensions.
VerifyReport verify_modular(const ModularData& md, const VerifyOptions& opts = {});

// N_{ij}^k; throws VerificationError when the result is not a nonnegative
// integer.
long verlinde(const ModularData& md, long i, long j, long k);

}  // namespace drinfeld
