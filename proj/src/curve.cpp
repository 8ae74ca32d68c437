#include "tclo/curve.hpp"

#include <map>
#include <stdexcept>

#include "tclo/errors.hpp"

namespace tclo {

namespace {

SparseCol sparse_from_indices(const HomPoly& p, const std::vector<Monomial>& basis) {
    SparseCol col;
    col.entries.reserve(p.term_count());
    for (const auto& [mono, c] : p.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), mono);
        if (it == basis.end() || *it != mono)
            throw std::logic_error("monomial outside the coordinate basis");
        col.entries.push_back({static_cast<std::size_t>(it - basis.begin()), c});
    }
    return col;
}

} // namespace

bool projective_zeroset_empty(const FieldSpec& fs, const std::vector<HomPoly>& polys) {
    std::vector<const HomPoly*> live;
    for (const auto& p : polys) {
        if (p.field() != fs) throw usage_error("zero-set test: polynomial field mismatch");
        if (p.is_zero()) continue;
        if (p.degree() == 0) return true; // nonzero constant
        live.push_back(&p);
    }
    // Fewer than three forms of positive degree always share a zero in the
    // plane over an algebraic closure.
    if (live.size() < 3) return false;

    bool px = false, py = false, pz = false;
    for (const auto* p : live)
        if (auto sv = p->single_variable_power()) {
            if (sv->first == 'x') px = true;
            else if (sv->first == 'y') py = true;
            else pz = true;
        }
    if (px && py && pz) return true;

    // The forms have no common projective zero exactly when their ideal
    // contains every form of degree N = (sum of three largest degrees) - 2:
    // one exact rank computation at that degree decides.
    std::vector<long> degs;
    degs.reserve(live.size());
    for (const auto* p : live) degs.push_back(p->degree());
    std::sort(degs.begin(), degs.end(), std::greater<long>());
    long N = degs[0] + degs[1] + degs[2] - 2;
    std::size_t target = static_cast<std::size_t>(monomial_count(N));

    std::vector<SparseCol> cols;
    const auto full = monomial_basis(N);
    for (const auto* p : live)
        for (const auto& mono : monomial_basis(N - p->degree()))
            cols.push_back(sparse_from_indices(p->times_monomial(mono), full));
    return rank_sparse(fs, target, cols) == target;
}

CurveRing CurveRing::make(const FieldSpec& fs, const HomPoly& F) {
    if (F.field() != fs) throw usage_error("curve polynomial field mismatch");
    if (F.is_zero()) throw validation_error("curve polynomial must be nonzero");
    if (F.degree() < 1) throw validation_error("curve polynomial must have degree >= 1");
    HomPoly Fx = F.derivative('x');
    HomPoly Fy = F.derivative('y');
    HomPoly Fz = F.derivative('z');
    if (!projective_zeroset_empty(fs, {F, Fx, Fy, Fz})) {
        if (Fx.is_zero() && Fy.is_zero() && Fz.is_zero())
            throw validation_error(
                "curve is singular: every partial derivative vanishes identically "
                "(characteristic " + std::to_string(fs.characteristic()) +
                " divides all exponents)");
        throw validation_error(
            "curve is singular: the polynomial and its partial derivatives share a projective zero");
    }
    return CurveRing(fs, F, F.degree());
}

HomPoly CurveRing::normal_form(const HomPoly& h) const {
    if (h.field() != fs_) throw usage_error("normal form: element field mismatch");
    if (h.is_zero() || h.degree() < delta_) return h;

    const Monomial& lt = F_.leading_monomial();
    const Scalar& lc = F_.leading_coefficient();
    const auto& fterms = F_.terms();

    // Division by F in graded lex order. Map order is glex-descending, so the
    // sweep starts at the leading term; each reduction erases its key and only
    // inserts glex-smaller keys, so resuming just past the erased key visits
    // every entry that can still be reducible.
    std::map<Monomial, Scalar> work(h.terms().begin(), h.terms().end());
    auto it = work.begin();
    while (it != work.end()) {
        if (it->second.is_zero()) {
            it = work.erase(it);
            continue;
        }
        if (!lt.divides(it->first)) {
            ++it;
            continue;
        }
        Monomial key = it->first;
        Monomial q = key / lt;
        Scalar c = it->second / lc;
        work.erase(it);
        for (std::size_t t = 1; t < fterms.size(); ++t) {
            Scalar v = c * fterms[t].second;
            auto [pos, inserted] = work.try_emplace(fterms[t].first * q, -v);
            if (!inserted) pos->second -= v;
        }
        it = work.upper_bound(key);
    }

    HomPoly out(fs_, h.degree());
    for (const auto& [mono, coeff] : work)
        if (!coeff.is_zero()) out += HomPoly::monomial(fs_, mono, coeff);
    return out;
}

bool CurveRing::is_normal_form(const HomPoly& h) const {
    const Monomial& lt = F_.leading_monomial();
    for (const auto& [mono, coeff] : h.terms())
        if (lt.divides(mono)) return false;
    return true;
}

HomPoly CurveRing::mul(const HomPoly& a, const HomPoly& b) const {
    return normal_form(a * b);
}

std::vector<Monomial> CurveRing::std_monomials(long m) const {
    std::vector<Monomial> out;
    if (m < 0) return out;
    out.reserve(static_cast<std::size_t>(dim(m)));
    const Monomial& lt = F_.leading_monomial();
    for (const auto& mono : monomial_basis(m))
        if (!lt.divides(mono)) out.push_back(mono);
    return out;
}

CoordVector CurveRing::coordinates(const HomPoly& h) const {
    if (h.field() != fs_) throw usage_error("coordinates: element field mismatch");
    if (!is_normal_form(h)) throw usage_error("coordinates require a normal-form element");
    auto basis = std_monomials(h.degree());
    CoordVector out(basis.size(), Scalar::zero(fs_));
    for (const auto& [mono, coeff] : h.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), mono);
        if (it == basis.end() || *it != mono)
            throw std::logic_error("normal-form term outside the standard basis");
        out[static_cast<std::size_t>(it - basis.begin())] = coeff;
    }
    return out;
}

HomPoly CurveRing::from_coordinates(long m, const CoordVector& coords) const {
    auto basis = std_monomials(m);
    if (coords.size() != basis.size())
        throw usage_error("from_coordinates: coordinate length mismatch");
    HomPoly out(fs_, m);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) out += HomPoly::monomial(fs_, basis[i], coords[i]);
    return out;
}

CurveRing smooth_plane_curve(const FieldSpec& fs, const std::string& text) {
    return CurveRing::make(fs, parse_poly(text, fs));
}

IdealGens IdealGens::make(const CurveRing& ring, std::vector<HomPoly> gens) {
    if (gens.empty()) throw validation_error("the ideal needs at least one generator");
    std::vector<HomPoly> nf;
    std::vector<long> degrees;
    nf.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.field() != ring.field()) throw usage_error("generator field mismatch");
        if (g.degree() < 1)
            throw validation_error("generators must be homogeneous of degree >= 1");
        HomPoly r = ring.normal_form(g);
        if (r.is_zero())
            throw validation_error("generator " + g.str() + " vanishes on the curve");
        nf.push_back(std::move(r));
        degrees.push_back(g.degree());
    }
    std::vector<HomPoly> sys = nf;
    sys.push_back(ring.poly());
    if (!projective_zeroset_empty(ring.field(), sys))
        throw validation_error(
            "the ideal is not primary for (x, y, z): its generators share a projective zero "
            "on the curve");
    return IdealGens(ring, std::move(nf), std::move(degrees));
}

namespace {

// Sparse columns of the multiplication map (+) R_{m-d_i} -> R_m restricted to
// the ideal generators, in standard monomial coordinates. Column order:
// generators outermost, degree-(m-d_i) monomials glex-descending within.
std::vector<SparseCol> ideal_piece_columns(const IdealGens& ideal, long m,
                                           const std::vector<Monomial>& basis) {
    const CurveRing& R = ideal.ring();
    std::vector<SparseCol> cols;
    for (const auto& f : ideal.gens()) {
        if (m < f.degree()) continue;
        for (const auto& mono : monomial_basis(m - f.degree()))
            cols.push_back(sparse_from_indices(R.normal_form(f.times_monomial(mono)), basis));
    }
    return cols;
}

} // namespace

RowBasis ideal_graded_piece(const IdealGens& ideal, long m) {
    const CurveRing& R = ideal.ring();
    auto basis = R.std_monomials(m);
    auto cols = ideal_piece_columns(ideal, m, basis);
    std::vector<CoordVector> rows;
    rows.reserve(cols.size());
    for (const auto& col : cols) {
        CoordVector r(basis.size(), Scalar::zero(R.field()));
        for (const auto& [i, v] : col.entries) r[i] = v;
        rows.push_back(std::move(r));
    }
    return rref_rows(Matrix::from_rows(R.field(), basis.size(), rows));
}

long ideal_piece_dim(const IdealGens& ideal, long m) {
    const CurveRing& R = ideal.ring();
    auto basis = R.std_monomials(m);
    auto cols = ideal_piece_columns(ideal, m, basis);
    return static_cast<long>(rank_sparse(R.field(), basis.size(), cols));
}

Membership ideal_membership(const IdealGens& ideal, const HomPoly& f) {
    const CurveRing& R = ideal.ring();
    if (f.field() != R.field()) throw usage_error("membership: element field mismatch");
    long m = f.degree();
    HomPoly nf = R.normal_form(f);

    Membership out;
    if (nf.is_zero()) {
        out.in_ideal = true;
        for (std::size_t i = 0; i < ideal.count(); ++i)
            out.witnesses.push_back(HomPoly(R.field(), m - ideal.degree(i)));
        return out;
    }

    auto basis = R.std_monomials(m);
    auto cols = ideal_piece_columns(ideal, m, basis);
    auto sol = solve_sparse(R.field(), basis.size(), cols, R.coordinates(nf));
    if (!sol) return out;

    out.in_ideal = true;
    std::size_t pos = 0;
    HomPoly check = nf;
    for (std::size_t i = 0; i < ideal.count(); ++i) {
        long di = ideal.degree(i);
        HomPoly h(R.field(), m - di);
        if (m >= di) {
            for (const auto& mono : monomial_basis(m - di)) {
                const Scalar& c = (*sol)[pos++];
                if (!c.is_zero()) h += HomPoly::monomial(R.field(), mono, c);
            }
        }
        check -= R.normal_form(h * ideal.gens()[i]);
        out.witnesses.push_back(std::move(h));
    }
    if (!R.normal_form(check).is_zero())
        throw std::logic_error("membership witness failed its recombination check");
    return out;
}

} // namespace tclo
