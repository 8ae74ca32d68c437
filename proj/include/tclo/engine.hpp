#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tclo/criteria.hpp"
#include "tclo/frobenius.hpp"

namespace tclo {

// Everything the rules need to know about one primary ideal on one curve:
// the syzygy dimension table, the primary syzygies found, the semistability
// analysis, the slope window, and the assembled degree-window certificates.
// Built once per ideal; element decisions and degree tables read from it.
struct IdealContext {
    explicit IdealContext(IdealGens i) : ideal(std::move(i)) {}

    IdealGens ideal;
    std::uint64_t seed = 0;

    long k_top = -1;                    // dims[0..k_top] are computed
    std::vector<long> dims;             // dim Syz(total degree k)
    std::optional<long> minimal_degree; // least k with a nonzero syzygy
    std::vector<SyzygyVec> primaries;   // one primary syzygy per degree found
    std::map<long, bool> exhaustive;    // per hunted degree: search was complete

    StabilityCertificate stability;
    SlopeBounds slopes;
    std::vector<Certificate> window_certs; // ideal-level degree windows
    std::vector<std::string> notes;

    const CurveRing& ring() const { return ideal.ring(); }
    long sum_d() const { return ideal.sum_degrees(); }

    // View for the rule layer (non-owning pointer into this context).
    RuleContext rule_view() const;

    // Primary syzygy with the best inclusion window max(k, sum_d - k),
    // ties to the smaller degree. Null when none was found.
    const SyzygyVec* best_primary() const;

    // Primary syzygy usable in the two-line-bundle decision: the largest
    // degree k found with 2k <= sum_d. Null when none qualifies.
    const SyzygyVec* route_primary() const;
};

IdealContext build_context(const IdealGens& ideal, std::uint64_t seed = 0);

// Verdict for one element, with every certificate that applied to it.
// `rule` names the certificate the headline verdict comes from.
struct Decision {
    Verdict verdict = Verdict::Unknown;
    Caveat caveat = Caveat::DefiniteForGivenP;
    std::string rule;
    long degree = 0;
    std::vector<Certificate> certs;
    std::vector<std::string> notes;
    bool oracle_ran = false;
    OracleReport oracle;
};

Decision decide_element(const IdealContext& ctx, const HomPoly& f0,
                        const OracleOptions& oracle = {});

// Status of one graded piece R_m against the closure:
//   AllIn       every element of degree m lies in the closure
//   IffIdeal    closure meets degree m in exactly the ideal
//   ElementWise no blanket answer, but the per-element test applies
//   Unknown     nothing above applies
enum class DegreeStatus { AllIn, IffIdeal, ElementWise, Unknown };
std::string degree_status_str(DegreeStatus s);

struct DegreeRow {
    long m = 0;
    DegreeStatus status = DegreeStatus::Unknown;
    std::string rule;     // certificate behind the status, empty for Unknown
    std::string caveat;   // caveat of that certificate, empty when not blanket
    long ring_dim = -1;   // dim R_m (-1: not computed)
    long ideal_dim = -1;  // dim I_m (-1: not computed)
};

std::vector<DegreeRow> degree_profile(const IdealContext& ctx, long lo, long hi);

// Recomputes the mathematical content behind a certificate from scratch and
// checks it against the stored claim. Element-bound certificates need the
// element they were issued for.
bool reverify_certificate(const IdealContext& ctx, const Certificate& cert,
                          const HomPoly* element = nullptr);

} // namespace tclo
