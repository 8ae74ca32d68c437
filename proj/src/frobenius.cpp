#include "tclo/frobenius.hpp"

#include "tclo/errors.hpp"

namespace tclo {

IdealGens frobenius_bracket(const IdealGens& ideal, unsigned long long q) {
    if (q == 0) throw usage_error("bracket ideal: the power must be positive");
    if (q == 1) return ideal;
    const CurveRing& ring = ideal.ring();
    std::vector<HomPoly> gens;
    gens.reserve(ideal.count());
    for (std::size_t i = 0; i < ideal.count(); ++i)
        gens.push_back(ring.normal_form(ideal.gens()[i].pow(q)));
    return IdealGens::make(ring, gens);
}

bool frobenius_power_membership(const IdealGens& ideal, const HomPoly& f0,
                                unsigned long long q,
                                std::vector<HomPoly>* witnesses) {
    const CurveRing& ring = ideal.ring();
    IdealGens bracket = frobenius_bracket(ideal, q);
    HomPoly fq = ring.normal_form(q == 1 ? f0 : f0.pow(q));
    Membership mem = ideal_membership(bracket, fq);
    if (witnesses) *witnesses = mem.witnesses;
    return mem.in_ideal;
}

OracleReport frobenius_closure_probe(const IdealGens& ideal, const HomPoly& f0,
                                     const OracleOptions& opts) {
    OracleReport rep;
    if (!opts.enabled) return rep;
    const CurveRing& ring = ideal.ring();
    unsigned long p = ring.field().characteristic();
    HomPoly f = ring.normal_form(f0);
    long m = f.degree();

    unsigned long long q = 1;
    for (long e = 0; e <= opts.e_max; ++e) {
        if (e > 0) {
            if (p == 0) break;
            if (q > (1ULL << 40) / p) {
                rep.budget_capped = true;
                break;
            }
            q *= p;
        }
        unsigned long long deg = static_cast<unsigned long long>(m) * q;
        if (deg > (1ULL << 31) || monomial_count(static_cast<long>(deg)) > opts.budget) {
            rep.budget_capped = true;
            break;
        }
        std::vector<HomPoly> wit;
        if (frobenius_power_membership(ideal, f, q, &wit)) {
            rep.in_frobenius_closure = true;
            rep.e = e;
            rep.q = q;
            rep.witnesses = std::move(wit);
            rep.e_tested = e;
            return rep;
        }
        rep.e_tested = e;
    }
    return rep;
}

PullbackProblem frobenius_pullback_problem(const IdealGens& ideal,
                                           const HomPoly& f0, long e) {
    const CurveRing& ring = ideal.ring();
    unsigned long p = ring.field().characteristic();
    if (p == 0)
        throw validation_error("Frobenius pullback needs positive characteristic");
    if (e < 1) throw usage_error("Frobenius pullback needs e >= 1");
    unsigned long long q = 1;
    for (long i = 0; i < e; ++i) q *= p;
    return PullbackProblem{frobenius_bracket(ideal, q),
                           ring.normal_form(f0.pow(q)), q};
}

} // namespace tclo
