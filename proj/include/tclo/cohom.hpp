#pragma once

#include <optional>
#include <utility>

#include "tclo/syzygy.hpp"

namespace tclo {

// Cohomology of the twists O(t) on the curve: h^0 is the graded dimension,
// h^1 comes from duality against the canonical twist delta - 3.
long h0_line(const CurveRing& ring, long t);
long h1_line(const CurveRing& ring, long t);

// The degree of the rank-(n-1) syzygy sheaf twisted by m, against the
// hyperplane degree delta of the curve.
long syzygy_sheaf_degree(const IdealGens& ideal, long m);

long h0_syzygy(const IdealGens& ideal, long m);

// From the Euler characteristic: h^0 - h^1 = deg + rank (1 - g).
long h1_syzygy(const IdealGens& ideal, long m);

// First pair of generators with no common zero on the curve, i.e. whose
// affine pieces cover it; Cech computations for H^1 run on such a pair.
std::optional<std::pair<std::size_t, std::size_t>> covering_pair(const IdealGens& ideal);

// Vanishing of the class [h / (p^a q^b)] in H^1(O(t)), t = deg h - a deg p
// - b deg q, computed on the cover by D(p) and D(q): the class is a
// coboundary exactly when h lies in (p^a, q^b) in R. Requires p, q without
// common zeros on the curve.
bool cech_class_vanishes(const CurveRing& ring, const HomPoly& h,
                         const HomPoly& p, unsigned a, const HomPoly& q, unsigned b);

// The obstruction class of an element f0 of degree m against the ideal: the
// connecting image of f0 in H^1 of the twisted syzygy sheaf. It vanishes
// exactly when f0 lies in the ideal (degree-m piece), and its image in the
// quotient line bundle of a primary syzygy is computable on a two-set cover.
struct ForcingClass {
    IdealGens ideal;
    HomPoly f0;
    long twist = 0; // deg f0
};

ForcingClass make_forcing_class(const IdealGens& ideal, const HomPoly& f0);

bool forcing_class_zero(const ForcingClass& c);

// Image of the forcing class in the quotient O(m + k - sum d) of the syzygy
// sheaf by the line subbundle a primary syzygy of total degree k spans.
// On a covering pair (i, j) the image is [-f0 g_l / (f_i f_j)] with l the
// remaining index, so it vanishes exactly when f0 g_l lies in (f_i, f_j).
// Three generators only; throws validation_error when no pair of the
// generators covers the curve.
bool quotient_class_vanishes(const ForcingClass& c, const SyzygyVec& primary);

} // namespace tclo
