#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tclo/scalar.hpp"

namespace tclo {

/// Monomial x^i y^j z^k in the three curve variables.
struct Monomial {
    std::uint32_t i = 0, j = 0, k = 0;

    long degree() const { return static_cast<long>(i) + j + k; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic order with x > y > z; larger means later here,
    /// so glex-descending enumeration is ascending in this comparison.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        if (a.i != b.i) return b.i <=> a.i;
        return b.j <=> a.j;
    }

    bool divides(const Monomial& m) const { return i <= m.i && j <= m.j && k <= m.k; }
    Monomial operator*(const Monomial& m) const { return {i + m.i, j + m.j, k + m.k}; }
    /// Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const { return {i - m.i, j - m.j, k - m.k}; }

    std::string str() const;
};

/// Number of degree-d monomials, C(d+2, 2); zero for negative d.
long monomial_count(long d);

/// All monomials of degree d in glex-descending order (x^d first). Deterministic.
std::vector<Monomial> monomial_basis(long d);

/// Position of m within monomial_basis(m.degree()).
std::size_t monomial_index(const Monomial& m);

/// Inverse of monomial_index for degree d.
Monomial monomial_at(long d, std::size_t index);

/// Homogeneous polynomial over a fixed field, canonical form: terms sorted
/// glex-descending, no zero coefficients. The zero polynomial keeps a nominal degree.
class HomPoly {
public:
    HomPoly() : fs_(), deg_(0) {}
    HomPoly(FieldSpec fs, long degree) : fs_(fs), deg_(degree) {}

    static HomPoly monomial(const FieldSpec& fs, const Monomial& m, const Scalar& c);
    static HomPoly variable(const FieldSpec& fs, char v, std::uint32_t power = 1);

    const FieldSpec& field() const { return fs_; }
    long degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::vector<std::pair<Monomial, Scalar>>& terms() const { return terms_; }

    /// Glex-largest monomial with nonzero coefficient; throws on zero polynomial.
    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;

    Scalar coefficient(const Monomial& m) const;

    HomPoly operator-() const;
    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }

    HomPoly operator*(const HomPoly& o) const;
    HomPoly operator*(const Scalar& c) const;
    HomPoly times_monomial(const Monomial& m) const;

    /// n-th power, n >= 0 (degree scales accordingly).
    HomPoly pow(unsigned long n) const;

    /// Partial derivative along v in {'x','y','z'}; homogeneous of one degree less.
    HomPoly derivative(char v) const;

    /// Dense coefficients over monomial_basis(degree()).
    std::vector<Scalar> dense_coordinates() const;
    static HomPoly from_dense(const FieldSpec& fs, long degree, const std::vector<Scalar>& coords);

    /// If the support is a single term c * v^e of one variable, report (v, e).
    std::optional<std::pair<char, std::uint32_t>> single_variable_power() const;

    bool operator==(const HomPoly& o) const;
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    /// Canonical text form (round-trips through parse_poly).
    std::string str() const;

private:
    void add_term(const Monomial& m, const Scalar& c);
    void normalize();

    FieldSpec fs_;
    long deg_;
    std::vector<std::pair<Monomial, Scalar>> terms_;
};

std::ostream& operator<<(std::ostream& os, const HomPoly& p);

/// Parse the polynomial grammar: signed sum of terms `c*x^i*y^j*z^k`, `*` and
/// `^1` optional, coefficients integers or fractions a/b. Throws usage_error
/// with the offending position on malformed input, and lists the offending
/// monomials if the terms are not all of one degree.
HomPoly parse_poly(const std::string& text, const FieldSpec& fs);

} // namespace tclo
