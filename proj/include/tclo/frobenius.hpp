#pragma once

#include <optional>
#include <vector>

#include "tclo/curve.hpp"

namespace tclo {

// Budget knobs for the Frobenius probes. A degree is priced by the number of
// plane monomials in that degree; anything above `budget` is skipped rather
// than attempted, so a probe on huge inputs degrades to "not tested" instead
// of stalling.
struct OracleOptions {
    long e_max = 3;             // test f^(p^e) against the bracket for e <= e_max
    long pull_e_max = 2;        // Frobenius pullbacks tried for exclusion evidence
    long budget = 25000;        // max monomial count of any degree touched
    bool enabled = true;
};

// Outcome of the Frobenius closure probe. A hit (in_frobenius_closure) is a
// positive certificate: f^(p^e) lies in the e-th bracket ideal, witnessed by
// an explicit representation. A miss carries no negative information; it only
// records how far the search went.
struct OracleReport {
    bool in_frobenius_closure = false;
    long e = -1;                // witnessing exponent on a hit (0 means f in I)
    unsigned long long q = 1;   // p^e for that exponent
    std::vector<HomPoly> witnesses;
    long e_tested = -1;         // largest exponent actually tested (-1: none)
    bool budget_capped = false; // true when the degree budget stopped the loop
};

// The e-th bracket ideal (f1^q, ..., fn^q), q = p^e. Raising each generator
// to the q-th power preserves the zero set, so the result is again primary.
IdealGens frobenius_bracket(const IdealGens& ideal, unsigned long long q);

// Does f0^q lie in (f1^q, ..., fn^q)? Optionally returns the witnesses of the
// representation f0^q = sum w_i f_i^q in the coordinate ring.
bool frobenius_power_membership(const IdealGens& ideal, const HomPoly& f0,
                                unsigned long long q,
                                std::vector<HomPoly>* witnesses = nullptr);

// Searches e = 0, 1, ..., e_max for f0^(p^e) in the e-th bracket ideal.
// e = 0 is plain ideal membership and works in any characteristic; e >= 1
// needs positive characteristic. First hit wins.
OracleReport frobenius_closure_probe(const IdealGens& ideal, const HomPoly& f0,
                                     const OracleOptions& opts = {});

// The membership problem transported along e Frobenius pullbacks: the bracket
// ideal together with f0^q reduced to normal form, q = p^e. Requires positive
// characteristic and e >= 1. Exclusion transfers back: if f0 lay in the tight
// closure, so would f0^q in the closure of the bracket.
struct PullbackProblem {
    IdealGens ideal;
    HomPoly element;
    unsigned long long q = 1;
};
PullbackProblem frobenius_pullback_problem(const IdealGens& ideal,
                                           const HomPoly& f0, long e);

} // namespace tclo
