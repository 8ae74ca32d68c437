#include "tclo/syzygy.hpp"

#include <random>

#include "tclo/errors.hpp"

namespace tclo {

bool is_syzygy(const IdealGens& ideal, const SyzygyVec& s) {
    const CurveRing& R = ideal.ring();
    if (s.comps.size() != ideal.count()) return false;
    HomPoly acc(R.field(), s.degree);
    for (std::size_t i = 0; i < ideal.count(); ++i) {
        const HomPoly& c = s.comps[i];
        if (!c.is_zero() && c.degree() != s.degree - ideal.degree(i)) return false;
        acc += R.normal_form(c * ideal.gens()[i]);
    }
    return acc.is_zero();
}

bool is_primary_syzygy(const IdealGens& ideal, const SyzygyVec& s) {
    std::vector<HomPoly> sys = s.comps;
    sys.push_back(ideal.ring().poly());
    return projective_zeroset_empty(ideal.ring().field(), sys);
}

std::vector<SyzygyVec> syzygy_space(const IdealGens& ideal, long k) {
    const CurveRing& R = ideal.ring();
    const FieldSpec& fs = R.field();

    std::vector<std::vector<Monomial>> comp_basis;
    std::vector<std::size_t> offset;
    std::size_t domain = 0;
    for (std::size_t i = 0; i < ideal.count(); ++i) {
        comp_basis.push_back(R.std_monomials(k - ideal.degree(i)));
        offset.push_back(domain);
        domain += comp_basis.back().size();
    }
    auto target = R.std_monomials(k);

    Matrix map(fs, target.size(), domain);
    for (std::size_t i = 0; i < ideal.count(); ++i)
        for (std::size_t b = 0; b < comp_basis[i].size(); ++b) {
            HomPoly img = R.normal_form(ideal.gens()[i].times_monomial(comp_basis[i][b]));
            for (const auto& [mono, coeff] : img.terms()) {
                auto it = std::lower_bound(target.begin(), target.end(), mono);
                map.at(static_cast<std::size_t>(it - target.begin()), offset[i] + b) = coeff;
            }
        }

    std::vector<SyzygyVec> out;
    for (const auto& v : kernel_basis(map)) {
        SyzygyVec s;
        s.degree = k;
        for (std::size_t i = 0; i < ideal.count(); ++i) {
            CoordVector slice(v.begin() + offset[i],
                              v.begin() + offset[i] + comp_basis[i].size());
            s.comps.push_back(R.from_coordinates(k - ideal.degree(i), slice));
        }
        out.push_back(std::move(s));
    }
    return out;
}

long syzygy_dim(const IdealGens& ideal, long k) {
    long domain = 0;
    for (std::size_t i = 0; i < ideal.count(); ++i)
        domain += ideal.ring().dim(k - ideal.degree(i));
    return domain - ideal_piece_dim(ideal, k);
}

std::optional<long> minimal_syzygy_degree(const IdealGens& ideal, long k_max) {
    for (long k = ideal.min_degree(); k <= k_max; ++k)
        if (syzygy_dim(ideal, k) > 0) return k;
    return std::nullopt;
}

std::vector<SyzygyVec> koszul_syzygies(const IdealGens& ideal) {
    const CurveRing& R = ideal.ring();
    std::vector<SyzygyVec> out;
    for (std::size_t i = 0; i < ideal.count(); ++i)
        for (std::size_t j = i + 1; j < ideal.count(); ++j) {
            SyzygyVec s;
            s.degree = ideal.degree(i) + ideal.degree(j);
            for (std::size_t l = 0; l < ideal.count(); ++l)
                s.comps.push_back(HomPoly(R.field(), s.degree - ideal.degree(l)));
            s.comps[i] = ideal.gens()[j];
            s.comps[j] = -ideal.gens()[i];
            out.push_back(std::move(s));
        }
    return out;
}

std::vector<SyzygyVec> koszul_basis(const IdealGens& ideal, long k) {
    const CurveRing& R = ideal.ring();
    const FieldSpec& fs = R.field();

    std::vector<std::size_t> offset;
    std::size_t domain = 0;
    for (std::size_t i = 0; i < ideal.count(); ++i) {
        offset.push_back(domain);
        domain += static_cast<std::size_t>(std::max(0L, R.dim(k - ideal.degree(i))));
    }

    std::vector<CoordVector> rows;
    for (const auto& kos : koszul_syzygies(ideal)) {
        long md = k - kos.degree;
        if (md < 0) continue;
        for (const auto& mono : R.std_monomials(md)) {
            CoordVector row(domain, Scalar::zero(fs));
            for (std::size_t l = 0; l < ideal.count(); ++l) {
                if (kos.comps[l].is_zero()) continue;
                HomPoly c = R.normal_form(kos.comps[l].times_monomial(mono));
                CoordVector coords = R.coordinates(c);
                for (std::size_t t = 0; t < coords.size(); ++t) row[offset[l] + t] = coords[t];
            }
            rows.push_back(std::move(row));
        }
    }

    std::vector<SyzygyVec> out;
    if (rows.empty()) return out;
    for (const auto& v : rref_rows(Matrix::from_rows(fs, domain, rows)).rows) {
        SyzygyVec s;
        s.degree = k;
        for (std::size_t i = 0; i < ideal.count(); ++i) {
            std::size_t len = static_cast<std::size_t>(std::max(0L, R.dim(k - ideal.degree(i))));
            CoordVector slice(v.begin() + static_cast<long>(offset[i]),
                              v.begin() + static_cast<long>(offset[i] + len));
            s.comps.push_back(R.from_coordinates(k - ideal.degree(i), slice));
        }
        out.push_back(std::move(s));
    }
    return out;
}

long koszul_dim(const IdealGens& ideal, long k) {
    return static_cast<long>(koszul_basis(ideal, k).size());
}

namespace {

SyzygyVec combine(const IdealGens& ideal, const std::vector<SyzygyVec>& basis,
                  const std::vector<Scalar>& coeffs) {
    SyzygyVec s;
    s.degree = basis.front().degree;
    for (std::size_t i = 0; i < ideal.count(); ++i) {
        HomPoly c(ideal.ring().field(), s.degree - ideal.degree(i));
        for (std::size_t t = 0; t < basis.size(); ++t)
            if (!coeffs[t].is_zero()) c += basis[t].comps[i] * coeffs[t];
        s.comps.push_back(std::move(c));
    }
    return s;
}

} // namespace

std::optional<SyzygyVec> find_primary_syzygy(const IdealGens& ideal, long k,
                                             std::uint64_t seed, unsigned trials,
                                             bool* exhaustive) {
    if (exhaustive) *exhaustive = true;
    auto basis = syzygy_space(ideal, k);
    if (basis.empty()) return std::nullopt;
    for (const auto& s : basis)
        if (is_primary_syzygy(ideal, s)) return s;
    if (basis.size() == 1) return std::nullopt; // span is scalar multiples only

    const FieldSpec& fs = ideal.ring().field();

    if (fs.is_prime_field()) {
        // Exhaust small spaces: scaling does not change the zero set, so one
        // representative per projective class suffices, but enumerating all
        // tuples keeps the loop simple when p^dim is tiny.
        double total = 1;
        for (std::size_t t = 0; t < basis.size() && total <= 20000; ++t)
            total *= fs.characteristic();
        if (total <= 20000) {
            std::vector<long long> digits(basis.size(), 0);
            std::vector<Scalar> coeffs(basis.size(), Scalar::zero(fs));
            while (true) {
                std::size_t d = 0;
                while (d < digits.size() && ++digits[d] == fs.characteristic())
                    digits[d++] = 0;
                if (d == digits.size()) break;
                for (std::size_t t = 0; t < digits.size(); ++t)
                    coeffs[t] = Scalar::from_int(fs, digits[t]);
                SyzygyVec s = combine(ideal, basis, coeffs);
                if (is_primary_syzygy(ideal, s)) return s;
            }
            return std::nullopt; // exhaustive: no primary syzygy in this degree
        }
    }

    if (exhaustive) *exhaustive = false;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k + 1)));
    for (unsigned trial = 0; trial < trials; ++trial) {
        std::vector<Scalar> coeffs;
        bool nonzero = false;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            long long c;
            if (fs.is_prime_field()) {
                std::uniform_int_distribution<long long> dist(0, fs.characteristic() - 1);
                c = dist(rng);
            } else {
                std::uniform_int_distribution<long long> dist(-9, 9);
                c = dist(rng);
            }
            nonzero = nonzero || c != 0;
            coeffs.push_back(Scalar::from_int(fs, c));
        }
        if (!nonzero) continue;
        SyzygyVec s = combine(ideal, basis, coeffs);
        if (is_primary_syzygy(ideal, s)) return s;
    }
    return std::nullopt;
}

} // namespace tclo
