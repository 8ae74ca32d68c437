#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tclo/curve.hpp"

namespace tclo {

// Global syzygy of total degree k among the ideal generators: components
// s_1..s_n in R with deg s_i = k - d_i and sum s_i f_i = 0 in R.
struct SyzygyVec {
    long degree = 0;
    std::vector<HomPoly> comps;
};

bool is_syzygy(const IdealGens& ideal, const SyzygyVec& s);

// A syzygy is primary when its components have no common zero on the curve;
// it then generates a rank-one subsheaf with locally free quotient.
bool is_primary_syzygy(const IdealGens& ideal, const SyzygyVec& s);

// Canonical basis of the degree-k syzygy space, the kernel of
// (+) R_{k-d_i} -> R_k. Deterministic: reduced echelon form over the
// concatenated component coordinates.
std::vector<SyzygyVec> syzygy_space(const IdealGens& ideal, long k);

// dim of the degree-k syzygy space without materializing a kernel basis.
long syzygy_dim(const IdealGens& ideal, long k);

// Least k <= k_max with a nonzero syzygy, if any. The dimension is
// nondecreasing in k, so this is the start of the nonzero range.
std::optional<long> minimal_syzygy_degree(const IdealGens& ideal, long k_max);

// The pairwise syzygies f_j e_i - f_i e_j (i < j), each of total degree
// d_i + d_j.
std::vector<SyzygyVec> koszul_syzygies(const IdealGens& ideal);

// Basis of the subspace of the degree-k syzygy space spanned by the
// monomial multiples of the pairwise syzygies, and its dimension.
std::vector<SyzygyVec> koszul_basis(const IdealGens& ideal, long k);
long koszul_dim(const IdealGens& ideal, long k);

// Search the degree-k syzygy space for a primary syzygy: first the canonical
// basis vectors, then exhaustive enumeration when the space is small over a
// finite field, then seeded random combinations. Deterministic for a fixed
// seed. Returns nullopt if nothing primary was found; *exhaustive (when
// requested) reports whether that outcome proves absence.
std::optional<SyzygyVec> find_primary_syzygy(const IdealGens& ideal, long k,
                                             std::uint64_t seed = 0, unsigned trials = 64,
                                             bool* exhaustive = nullptr);

} // namespace tclo
