#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tclo/linalg.hpp"
#include "tclo/poly.hpp"

namespace tclo {

// Decides whether homogeneous polynomials have no common zero in the
// projective plane over an algebraic closure. Exact: fast paths for unit
// constants, too few equations, and coordinate powers; otherwise a single
// rank test of the ideal's graded piece at the regularity bound
// (sum of the three largest degrees minus two).
bool projective_zeroset_empty(const FieldSpec& fs, const std::vector<HomPoly>& polys);

// Graded coordinate ring R = K[x,y,z]/(F) of a smooth plane curve.
// Canonical representatives are remainders of division by F in graded lex
// order with x > y > z; the standard monomials of degree m (those not
// divisible by the leading monomial of F) form a basis of R_m.
class CurveRing {
public:
    // Validates that F is nonzero of degree >= 1 and defines a smooth curve.
    static CurveRing make(const FieldSpec& fs, const HomPoly& F);

    const FieldSpec& field() const { return fs_; }
    const HomPoly& poly() const { return F_; }
    long delta() const { return delta_; }
    long genus() const { return (delta_ - 1) * (delta_ - 2) / 2; }

    // dim_K R_m.
    long dim(long m) const {
        if (m < 0) return 0;
        return monomial_count(m) - monomial_count(m - delta_);
    }

    // Canonical representative of h modulo F (remainder of division by F).
    HomPoly normal_form(const HomPoly& h) const;
    bool is_normal_form(const HomPoly& h) const;

    // Product reduced to normal form.
    HomPoly mul(const HomPoly& a, const HomPoly& b) const;

    // Degree-m standard monomials, in the order used by coordinates().
    std::vector<Monomial> std_monomials(long m) const;

    // Coordinates of a normal-form element of R_m w.r.t. std_monomials(m).
    CoordVector coordinates(const HomPoly& h) const;
    HomPoly from_coordinates(long m, const CoordVector& coords) const;

    bool operator==(const CurveRing& o) const { return fs_ == o.fs_ && F_ == o.F_; }

private:
    CurveRing(const FieldSpec& fs, HomPoly F, long delta)
        : fs_(fs), F_(std::move(F)), delta_(delta) {}

    FieldSpec fs_;
    HomPoly F_;
    long delta_ = 0;
};

// Parse-and-validate convenience used by the CLI and tests.
CurveRing smooth_plane_curve(const FieldSpec& fs, const std::string& text);

// Homogeneous generators f_1..f_n of an ideal that is primary for the
// irrelevant maximal ideal (x, y, z): they have no common zero on the curve.
class IdealGens {
public:
    static IdealGens make(const CurveRing& ring, std::vector<HomPoly> gens);

    const CurveRing& ring() const { return ring_; }
    const std::vector<HomPoly>& gens() const { return gens_; }
    std::size_t count() const { return gens_.size(); }
    long degree(std::size_t i) const { return gens_[i].degree(); }
    const std::vector<long>& degrees() const { return degrees_; }
    long sum_degrees() const { return sum_degrees_; }
    long max_degree() const { return max_degree_; }
    long min_degree() const { return min_degree_; }

private:
    IdealGens(CurveRing ring, std::vector<HomPoly> gens, std::vector<long> degrees)
        : ring_(std::move(ring)), gens_(std::move(gens)), degrees_(std::move(degrees)) {
        for (auto d : degrees_) sum_degrees_ += d;
        max_degree_ = *std::max_element(degrees_.begin(), degrees_.end());
        min_degree_ = *std::min_element(degrees_.begin(), degrees_.end());
    }

    CurveRing ring_;
    std::vector<HomPoly> gens_;
    std::vector<long> degrees_;
    long sum_degrees_ = 0;
    long max_degree_ = 0;
    long min_degree_ = 0;
};

// Row space of the degree-m piece of the ideal inside R_m, in standard
// monomial coordinates.
RowBasis ideal_graded_piece(const IdealGens& ideal, long m);

long ideal_piece_dim(const IdealGens& ideal, long m);

struct Membership {
    bool in_ideal = false;
    // Coefficients h_i with f = sum h_i f_i in R, one per generator;
    // empty when not in the ideal.
    std::vector<HomPoly> witnesses;
};

// Membership of a homogeneous element in the ideal, with witnesses.
Membership ideal_membership(const IdealGens& ideal, const HomPoly& f);

} // namespace tclo
