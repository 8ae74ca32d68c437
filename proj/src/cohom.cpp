#include "tclo/cohom.hpp"

#include "tclo/errors.hpp"

namespace tclo {

long h0_line(const CurveRing& ring, long t) { return ring.dim(t); }

long h1_line(const CurveRing& ring, long t) { return ring.dim(ring.delta() - 3 - t); }

long syzygy_sheaf_degree(const IdealGens& ideal, long m) {
    long n = static_cast<long>(ideal.count());
    return ((n - 1) * m - ideal.sum_degrees()) * ideal.ring().delta();
}

long h0_syzygy(const IdealGens& ideal, long m) { return syzygy_dim(ideal, m); }

long h1_syzygy(const IdealGens& ideal, long m) {
    long rank = static_cast<long>(ideal.count()) - 1;
    long chi = syzygy_sheaf_degree(ideal, m) + rank * (1 - ideal.ring().genus());
    return h0_syzygy(ideal, m) - chi;
}

std::optional<std::pair<std::size_t, std::size_t>> covering_pair(const IdealGens& ideal) {
    const CurveRing& R = ideal.ring();
    for (std::size_t i = 0; i < ideal.count(); ++i)
        for (std::size_t j = i + 1; j < ideal.count(); ++j)
            if (projective_zeroset_empty(R.field(),
                                         {ideal.gens()[i], ideal.gens()[j], R.poly()}))
                return std::make_pair(i, j);
    return std::nullopt;
}

bool cech_class_vanishes(const CurveRing& ring, const HomPoly& h,
                         const HomPoly& p, unsigned a, const HomPoly& q, unsigned b) {
    if (a == 0 || b == 0)
        throw usage_error("Cech denominators need positive exponents");
    if (!projective_zeroset_empty(ring.field(), {p, q, ring.poly()}))
        throw validation_error("Cech cover is not a cover: the denominators share a zero "
                               "on the curve");
    auto pair_ideal = IdealGens::make(ring, {p.pow(a), q.pow(b)});
    return ideal_membership(pair_ideal, h).in_ideal;
}

ForcingClass make_forcing_class(const IdealGens& ideal, const HomPoly& f0) {
    if (f0.field() != ideal.ring().field())
        throw usage_error("element field mismatch");
    if (f0.is_zero() || f0.degree() < 1)
        throw validation_error("the element must be homogeneous of degree >= 1 and nonzero");
    HomPoly nf = ideal.ring().normal_form(f0);
    if (nf.is_zero())
        throw validation_error("the element vanishes on the curve");
    return ForcingClass{ideal, std::move(nf), f0.degree()};
}

bool forcing_class_zero(const ForcingClass& c) {
    return ideal_membership(c.ideal, c.f0).in_ideal;
}

bool quotient_class_vanishes(const ForcingClass& c, const SyzygyVec& primary) {
    const IdealGens& I = c.ideal;
    const CurveRing& R = I.ring();
    if (I.count() != 3)
        throw usage_error("quotient-class test expects exactly three generators");
    if (!is_syzygy(I, primary) || !is_primary_syzygy(I, primary))
        throw usage_error("quotient-class test needs a primary syzygy of the ideal");
    auto pair = covering_pair(I);
    if (!pair)
        throw validation_error("no two generators cover the curve; the quotient-class test "
                               "needs a covering pair");
    auto [i, j] = *pair;
    std::size_t l = 3 - i - j;
    auto pair_ideal = IdealGens::make(R, {I.gens()[i], I.gens()[j]});
    HomPoly numerator = R.mul(c.f0, primary.comps[l]);
    if (numerator.is_zero()) return true;
    return ideal_membership(pair_ideal, numerator).in_ideal;
}

} // namespace tclo
