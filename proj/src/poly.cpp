#include "tclo/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace tclo {

std::string Monomial::str() const {
    if (degree() == 0) return "1";
    std::string s;
    auto app = [&s](char v, std::uint32_t e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app('x', i);
    app('y', j);
    app('z', k);
    return s;
}

long monomial_count(long d) {
    return d < 0 ? 0 : (d + 2) * (d + 1) / 2;
}

std::vector<Monomial> monomial_basis(long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    out.reserve(monomial_count(d));
    for (long i = d; i >= 0; --i)
        for (long j = d - i; j >= 0; --j)
            out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(d - i - j)});
    return out;
}

std::size_t monomial_index(const Monomial& m) {
    long d = m.degree();
    long u = d - m.i;
    return static_cast<std::size_t>(u * (u + 1) / 2 + (u - m.j));
}

Monomial monomial_at(long d, std::size_t index) {
    long u = 0;
    while ((u + 1) * (u + 2) / 2 <= static_cast<long>(index)) ++u;
    long in_block = static_cast<long>(index) - u * (u + 1) / 2;
    long i = d - u, j = u - in_block;
    return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
            static_cast<std::uint32_t>(d - i - j)};
}

HomPoly HomPoly::monomial(const FieldSpec& fs, const Monomial& m, const Scalar& c) {
    HomPoly p(fs, m.degree());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

HomPoly HomPoly::variable(const FieldSpec& fs, char v, std::uint32_t power) {
    Monomial m;
    switch (v) {
        case 'x': m.i = power; break;
        case 'y': m.j = power; break;
        case 'z': m.k = power; break;
        default: throw usage_error(std::string("unknown variable '") + v + "'");
    }
    return monomial(fs, m, Scalar::one(fs));
}

const Monomial& HomPoly::leading_monomial() const {
    if (terms_.empty()) throw usage_error("leading monomial of zero polynomial");
    return terms_.front().first;
}

const Scalar& HomPoly::leading_coefficient() const {
    if (terms_.empty()) throw usage_error("leading coefficient of zero polynomial");
    return terms_.front().second;
}

Scalar HomPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, const Monomial& mm) { return t.first < mm; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Scalar::zero(fs_);
}

HomPoly HomPoly::operator-() const {
    HomPoly p(*this);
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (!(fs_ == o.fs_)) throw usage_error("mixed-field polynomials");
    if (!is_zero() && !o.is_zero() && deg_ != o.deg_)
        throw usage_error("degree mismatch in polynomial sum: " + std::to_string(deg_) +
                          " vs " + std::to_string(o.deg_));
    if (is_zero()) deg_ = o.deg_;
    std::vector<std::pair<Monomial, Scalar>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Scalar c = a->second + b->second;
            if (!c.is_zero()) merged.push_back({a->first, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    return *this += -o;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (!(fs_ == o.fs_)) throw usage_error("mixed-field polynomials");
    HomPoly p(fs_, deg_ + o.deg_);
    if (is_zero() || o.is_zero()) return p;
    std::map<Monomial, Scalar> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            auto [it, fresh] = acc.try_emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    for (const auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

HomPoly HomPoly::operator*(const Scalar& c) const {
    HomPoly p(fs_, deg_);
    if (c.is_zero()) return p;
    p.terms_ = terms_;
    for (auto& [m, cc] : p.terms_) cc *= c;
    return p;
}

HomPoly HomPoly::times_monomial(const Monomial& m) const {
    HomPoly p(fs_, deg_ + m.degree());
    p.terms_ = terms_;
    for (auto& [mm, c] : p.terms_) mm = mm * m;
    return p;
}

HomPoly HomPoly::pow(unsigned long n) const {
    HomPoly r = HomPoly::monomial(fs_, Monomial{}, Scalar::one(fs_));
    HomPoly b(*this);
    unsigned long e = n;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    if (r.is_zero() || n == 0) r.deg_ = static_cast<long>(deg_ * n);
    return r;
}

HomPoly HomPoly::derivative(char v) const {
    HomPoly p(fs_, deg_ - 1);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = v == 'x' ? m.i : v == 'y' ? m.j : m.k;
        if (e == 0) continue;
        Scalar cc = c * Scalar::from_int(fs_, e);
        if (cc.is_zero()) continue;
        Monomial mm = m;
        (v == 'x' ? mm.i : v == 'y' ? mm.j : mm.k) -= 1;
        p.terms_.push_back({mm, cc});
    }
    return p;
}

std::vector<Scalar> HomPoly::dense_coordinates() const {
    std::vector<Scalar> out(monomial_count(deg_), Scalar::zero(fs_));
    for (const auto& [m, c] : terms_) out[monomial_index(m)] = c;
    return out;
}

HomPoly HomPoly::from_dense(const FieldSpec& fs, long degree, const std::vector<Scalar>& coords) {
    HomPoly p(fs, degree);
    for (std::size_t t = 0; t < coords.size(); ++t)
        if (!coords[t].is_zero()) p.terms_.push_back({monomial_at(degree, t), coords[t]});
    return p;
}

std::optional<std::pair<char, std::uint32_t>> HomPoly::single_variable_power() const {
    if (terms_.size() != 1) return std::nullopt;
    const Monomial& m = terms_.front().first;
    int used = (m.i > 0) + (m.j > 0) + (m.k > 0);
    if (used != 1) return std::nullopt;
    if (m.i > 0) return std::make_pair('x', m.i);
    if (m.j > 0) return std::make_pair('y', m.j);
    return std::make_pair('z', m.k);
}

bool HomPoly::operator==(const HomPoly& o) const {
    return fs_ == o.fs_ && terms_ == o.terms_ && (is_zero() || deg_ == o.deg_);
}

std::string HomPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs.front() == '-';
        if (neg) cs.erase(0, 1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (m.degree() == 0) {
            os << cs;
        } else if (cs == "1") {
            os << m.str();
        } else {
            os << cs << "*" << m.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomPoly& p) {
    return os << p.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    const FieldSpec& fs;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw usage_error("polynomial parse error at position " + std::to_string(pos) + ": " +
                          msg + " in \"" + s + "\"");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return mpz_class(s.substr(start, pos - start));
    }

    std::uint32_t parse_exponent() {
        mpz_class e = parse_integer();
        if (e < 0 || e > 1000000) fail("exponent out of range");
        return static_cast<std::uint32_t>(e.get_ui());
    }

    // term := factor (['*'] factor)* ; factor := number['/'number] | var['^'exp]
    std::pair<Monomial, Scalar> parse_term() {
        Monomial m;
        Scalar c = Scalar::one(fs);
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char ch = s[pos];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                mpz_class num = parse_integer();
                mpz_class den = 1;
                if (eat('/')) den = parse_integer();
                if (den == 0) fail("zero denominator");
                c *= Scalar::from_mpq(fs, mpq_class(num, den));
                any = true;
            } else if (ch == 'x' || ch == 'y' || ch == 'z') {
                ++pos;
                std::uint32_t e = 1;
                if (eat('^')) e = parse_exponent();
                (ch == 'x' ? m.i : ch == 'y' ? m.j : m.k) += e;
                any = true;
            } else if (ch == '*') {
                ++pos;
                continue;
            } else {
                break;
            }
        }
        if (!any) fail("expected a term");
        return {m, c};
    }

    HomPoly parse() {
        std::map<Monomial, Scalar> acc;
        bool first = true;
        long degree = -1;
        std::vector<std::string> degree_witnesses;
        while (true) {
            skip_ws();
            if (pos >= s.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            bool neg = false;
            if (eat('+')) {
            } else if (eat('-')) {
                neg = true;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            auto [m, c] = parse_term();
            if (neg) c = -c;
            if (degree == -1 || m.degree() == degree) {
                if (degree == -1) degree = m.degree();
            } else {
                degree_witnesses.push_back(m.str() + " (degree " + std::to_string(m.degree()) +
                                           " vs " + std::to_string(degree) + ")");
            }
            auto [it, fresh] = acc.try_emplace(m, c);
            if (!fresh) it->second += c;
            first = false;
        }
        if (!degree_witnesses.empty()) {
            std::string msg = "polynomial is not homogeneous; offending monomials:";
            for (const auto& w : degree_witnesses) msg += " " + w;
            throw usage_error(msg + " in \"" + s + "\"");
        }
        HomPoly p(fs, degree);
        std::vector<Scalar> coords(monomial_count(degree), Scalar::zero(fs));
        for (const auto& [m, c] : acc) coords[monomial_index(m)] = c;
        return HomPoly::from_dense(fs, degree, coords);
    }
};

} // namespace

HomPoly parse_poly(const std::string& text, const FieldSpec& fs) {
    PolyParser p{text, fs};
    HomPoly out = p.parse();
    return out;
}

} // namespace tclo
