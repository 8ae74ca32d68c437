#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "tclo/errors.hpp"

namespace tclo {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p, p < 2^31.
class FieldSpec {
public:
    /// Rationals.
    FieldSpec() : p_(0) {}

    /// Prime field F_p. Throws usage_error unless p is a prime below 2^31.
    explicit FieldSpec(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    std::string describe() const;

private:
    std::uint32_t p_;
};

/// Field element in canonical form: residue in [0, p) over F_p, reduced fraction over Q.
///
/// Arithmetic is exact; combining scalars from different fields throws usage_error.
class Scalar {
public:
    Scalar() : fs_(), r_(0) {}

    static Scalar zero(const FieldSpec& fs) { return from_int(fs, 0); }
    static Scalar one(const FieldSpec& fs) { return from_int(fs, 1); }
    static Scalar from_int(const FieldSpec& fs, long long n);
    static Scalar from_mpq(const FieldSpec& fs, const mpq_class& q);

    const FieldSpec& field() const { return fs_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical residue; only meaningful over a prime field.
    long long residue() const { return r_; }
    /// Reduced fraction; only meaningful over the rationals.
    const mpq_class& rational() const { return q_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Multiplicative inverse; throws usage_error on zero.
    Scalar inverse() const;

    /// n-th power, n >= 0.
    Scalar pow(unsigned long long n) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total bit size of the canonical representation (pivot selection over Q).
    std::size_t bit_size() const;

    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;

    FieldSpec fs_;
    long long r_;   // residue over F_p
    mpq_class q_;   // value over Q
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Deterministic primality test, exact for all 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

} // namespace tclo
