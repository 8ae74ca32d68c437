#pragma once

#include <gmpxx.h>

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tclo/cohom.hpp"

namespace tclo {

inline constexpr long kNoBound = std::numeric_limits<long>::max();

enum class Verdict { InIdeal, InClosure, NotInClosure, Unknown };

// How far a certificate reaches:
//  - DefiniteForGivenP: proved over the given field (positive characteristic
//    or characteristic zero, whichever the input uses).
//  - Char0OrLargeP: proved in characteristic zero; transfers to almost all
//    positive characteristics, but not to the given small p.
//  - Char0Only: proved in characteristic zero, no transfer claimed.
//  - AlsoPlusClosure: definite, and the element even lies in the graded
//    plus closure (positive characteristic) resp. the ideal's closure in
//    characteristic zero.
//  - FrobeniusClosure: definite via Frobenius closure, which sits inside
//    the tight closure.
enum class Caveat { DefiniteForGivenP, Char0OrLargeP, Char0Only, AlsoPlusClosure, FrobeniusClosure };

enum class StabilityKind { Unknown, Decomposable, NotSemistable, Semistable, StronglySemistable };

std::string verdict_str(Verdict v);
std::string caveat_str(Caveat c);
std::string stability_str(StabilityKind k);

// Whether a certificate with this caveat settles the question over fs.
bool caveat_definite(Caveat c, const FieldSpec& fs);

// One fired rule. Degree-window rules carry the inclusive range [lo, hi]
// of element degrees they cover (hi == kNoBound meaning unbounded);
// element-scoped certificates use lo == hi == the element's degree.
struct Certificate {
    std::string rule;
    std::string statement;
    Verdict verdict = Verdict::Unknown;
    Caveat caveat = Caveat::DefiniteForGivenP;
    long lo = 0;
    long hi = kNoBound;
    std::optional<SyzygyVec> syzygy;
    std::vector<HomPoly> witnesses;
    std::map<std::string, std::string> data;

    bool covers(long m) const { return lo <= m && m <= hi; }
    bool definite(const FieldSpec& fs) const { return caveat_definite(caveat, fs); }
};

struct StabilityCertificate {
    StabilityKind kind = StabilityKind::Unknown;
    std::string rule;
    std::string statement;
    std::optional<SyzygyVec> syzygy;
    std::map<std::string, std::string> data;
};

struct SlopeBound {
    mpq_class value;
    std::string source;
};

// Exact bounds on the extremal slopes of the dual syzygy sheaf, normalized
// so that inclusion holds for degrees m >= mu_max/delta and exclusion needs
// m*delta < mu_min. mu is the average (sum d_i * delta)/(n-1).
struct SlopeBounds {
    mpq_class mu;
    std::optional<SlopeBound> max_upper;
    std::optional<SlopeBound> max_lower;
    std::optional<SlopeBound> min_upper;
    std::optional<SlopeBound> min_lower;
};

// Shared ideal-level analysis the rule functions consume: the syzygy
// dimension sweep dims[k] for k = 0..k_top, the least degree with a nonzero
// syzygy, and every primary syzygy found (ascending degree), together with
// whether the per-degree primary search was exhaustive.
struct RuleContext {
    const IdealGens* ideal = nullptr;
    long k_top = -1;
    std::vector<long> dims;
    std::optional<long> minimal_degree;
    std::vector<SyzygyVec> primaries;
    std::map<long, bool> exhaustive;

    const CurveRing& ring() const { return ideal->ring(); }
    long sum_d() const { return ideal->sum_degrees(); }

    const SyzygyVec* primary_at(long k) const;
    // The primary syzygy with the widest decision window: smallest
    // max(k, sum_d - k), ties resolved toward k <= sum_d/2.
    const SyzygyVec* best_primary() const;
};

struct RuleOutcome {
    std::vector<Certificate> certs;
    std::vector<std::string> notes;
};

SlopeBounds slope_bounds(const RuleContext& ctx);

// Destabilizing/decomposing syzygies below half degree, strong semistability
// from a primary syzygy at half degree, semistability from an empty syzygy
// space at the boundary degree, and the power-ideal lookups.
StabilityCertificate semistability_certificate(const RuleContext& ctx);

// Degree windows from each primary syzygy of degree k: inclusion for
// m >= max(k, sum_d - k) (definite, with graded plus closure at p > 0),
// and closure = ideal for m < min(k, sum_d - k) (char 0 or p >> 0).
RuleOutcome primary_syzygy_rules(const RuleContext& ctx);

// In characteristic zero a semistable syzygy sheaf pins the closure down to
// ideal + everything of degree >= sum_d/2, both directions.
RuleOutcome semistable_closure_rule(const RuleContext& ctx, const StabilityCertificate& st);

// An empty syzygy space at degree k at most sum_d/2 + (g-1)/delta bounds
// mu_max and gives inclusion for m >= sum_d - k + (g-1)/delta (char 0).
RuleOutcome inclusion_bound_no_syzygy(const RuleContext& ctx);

// An empty syzygy space at degree k makes the dual twists ample for
// m < k - 3g/(2 delta) + 1/delta (three generators; char 0), so the closure
// adds nothing there.
RuleOutcome exclusion_bound_no_syzygy(const RuleContext& ctx);

// Exclusion for m*delta < mu_min via the slope criterion (char 0 or p >> 0).
RuleOutcome slope_exclusion_rule(const RuleContext& ctx, const SlopeBounds& sb);

// Unconditional degree bounds: inclusion from m >= min(2 max d_i, sum d_i),
// exclusion (closure = ideal) for m <= min d_i.
RuleOutcome smith_bounds(const IdealGens& ideal);

// Two generators form a system of parameters: closure = ideal + degrees
// >= d_1 + d_2 (definite above, char 0 or p >> 0 below).
RuleOutcome parameter_closure(const RuleContext& ctx);

// Special rules for (c1 x^a, c2 y^a, c3 z^a): semistable range delta >= 3a-1
// with its closure description, Frobenius closure inclusion for p >= delta-3,
// diagonal-curve pullback syzygies, the strong-semistability obstruction from
// Frobenius heights, the ample-syzygy exclusion for a = 3 on small diagonal
// curves, and the split elliptic lookup for a = 2, delta = 3.
RuleOutcome xa_rules(const RuleContext& ctx);

// For (c1 x^a, c2 y^a, c3 z^a) on a diagonal curve: rewrites the q-th power
// of the curve equation (q the least characteristic power with
// delta q >= a; q = 1 needs no positive characteristic) as an explicit
// primary syzygy of total degree delta q with monomial components.
// Nullopt when the ideal or the curve does not have the required shape.
std::optional<SyzygyVec> xa_pullback_syzygy(const IdealGens& ideal);

// Element decision against a primary syzygy of degree k: the short exact
// sequence 0 -> O(m-k) -> Syz(m) -> O(m+k-sum_d) -> 0 and the image of the
// forcing class in the quotient split the middle degrees. Notes record a
// degraded run (no covering pair).
RuleOutcome exact_sequence_decide(const ForcingClass& fc, const SyzygyVec& primary);

// Rank-2 ampleness for an extension 0 -> O_sub -> G -> O_quot -> 0 with the
// given twist degrees on the curve: ample iff the extension does not split,
// the quotient degree is positive, the sub degree is nonnegative, and
// p (sub + quot) > 2g - 2. Positive characteristic only.
bool hm_ampleness_rule(const CurveRing& ring, long sub_degree, long quot_degree,
                       bool nonsplit, unsigned long p);

// Builds the curve F = sum f_i g_i from tuples with deg f_i + deg g_i
// constant = k, V(f) = V(g) = empty in the plane and F smooth; g is then a
// primary syzygy for (f_1..f_n) of degree k = sum_d/2 and the closure of the
// ideal is ideal + R_{>= k}. Throws validation_error when the data does not
// qualify.
struct BastelResult {
    CurveRing ring;
    IdealGens ideal;
    SyzygyVec syzygy;
    long k = 0;
    std::vector<Certificate> certs;
};

BastelResult bastel_construct(const FieldSpec& fs, const std::vector<HomPoly>& f,
                              const std::vector<HomPoly>& g);

} // namespace tclo
