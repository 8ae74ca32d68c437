#include "tclo/scalar.hpp"

#include <ostream>

namespace tclo {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Miller-Rabin with bases 2, 3, 5, 7 is exact below 3,215,031,751 > 2^31.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
    if (p == 0) return;
    if (p >= (1u << 31))
        throw usage_error("characteristic must be below 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw usage_error("characteristic must be prime, got " + std::to_string(p));
}

std::string FieldSpec::describe() const {
    return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::from_int(const FieldSpec& fs, long long n) {
    Scalar s;
    s.fs_ = fs;
    if (fs.is_prime_field()) {
        long long p = fs.characteristic();
        s.r_ = n % p;
        if (s.r_ < 0) s.r_ += p;
    } else {
        s.q_ = mpq_class(static_cast<long>(n));
    }
    return s;
}

Scalar Scalar::from_mpq(const FieldSpec& fs, const mpq_class& q) {
    Scalar s;
    s.fs_ = fs;
    if (fs.is_prime_field()) {
        long long p = fs.characteristic();
        unsigned long pu = static_cast<unsigned long>(p);
        mpz_class den = q.get_den() % pu;
        if (den == 0)
            throw usage_error("denominator vanishes in F_" + std::to_string(p));
        long long num = mpz_class(q.get_num() % pu).get_si();
        if (num < 0) num += p;
        long long d = den.get_si();
        if (d < 0) d += p;
        s.r_ = num;
        return s * Scalar::from_int(fs, d).inverse();
    }
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return fs_.is_prime_field() ? r_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
    return fs_.is_prime_field() ? r_ == 1 : q_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(fs_ == o.fs_))
        throw usage_error("mixed-field operands: " + fs_.describe() + " vs " + o.fs_.describe());
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (fs_.is_prime_field()) {
        if (s.r_ != 0) s.r_ = fs_.characteristic() - s.r_;
    } else {
        s.q_ = -s.q_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (fs_.is_prime_field()) {
        r_ += o.r_;
        long long p = fs_.characteristic();
        if (r_ >= p) r_ -= p;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (fs_.is_prime_field()) {
        r_ -= o.r_;
        if (r_ < 0) r_ += fs_.characteristic();
    } else {
        q_ -= o.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (fs_.is_prime_field()) {
        // p < 2^31, so the product fits in a signed 64-bit word.
        r_ = (r_ * o.r_) % fs_.characteristic();
    } else {
        q_ *= o.q_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw usage_error("inverse of zero");
    Scalar s(*this);
    if (fs_.is_prime_field()) {
        long long p = fs_.characteristic();
        long long t = 0, new_t = 1, r = p, new_r = r_;
        while (new_r != 0) {
            long long q = r / new_r;
            t -= q * new_t; std::swap(t, new_t);
            r -= q * new_r; std::swap(r, new_r);
        }
        if (t < 0) t += p;
        s.r_ = t;
    } else {
        s.q_ = 1 / q_;
    }
    return s;
}

Scalar Scalar::pow(unsigned long long n) const {
    Scalar r = Scalar::one(fs_);
    Scalar b(*this);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(fs_ == o.fs_)) return false;
    return fs_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

std::size_t Scalar::bit_size() const {
    if (fs_.is_prime_field()) return 32;
    return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
}

std::string Scalar::str() const {
    if (fs_.is_prime_field()) return std::to_string(r_);
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

} // namespace tclo
