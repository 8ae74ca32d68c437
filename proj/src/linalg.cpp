#include "tclo/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace tclo {

Matrix Matrix::from_columns(FieldSpec fs, std::size_t rows, const std::vector<CoordVector>& cols) {
    Matrix m(fs, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw usage_error("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(FieldSpec fs, std::size_t cols, const std::vector<CoordVector>& rows) {
    Matrix m(fs, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw usage_error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

CoordVector Matrix::row(std::size_t r) const {
    CoordVector v(cols_, Scalar::zero(fs_));
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

CoordVector Matrix::column(std::size_t c) const {
    CoordVector v(rows_, Scalar::zero(fs_));
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

namespace {

struct FpOps {
    long long p;
    using Elem = long long;
    bool is_zero(Elem a) const { return a == 0; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem add(Elem a, Elem b) const { Elem r = a + b; return r >= p ? r - p : r; }
    Elem sub(Elem a, Elem b) const { Elem r = a - b; return r < 0 ? r + p : r; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem inv(Elem a) const {
        Elem t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            Elem q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        return t < 0 ? t + p : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    // F_p pivot rule: first nonzero.
    bool better_pivot(const Elem&, const Elem&) const { return false; }
    Elem from_scalar(const Scalar& s) const { return s.residue(); }
    Scalar to_scalar(const FieldSpec& fs, const Elem& e) const { return Scalar::from_int(fs, e); }
};

struct QOps {
    using Elem = mpq_class;
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    static std::size_t bits(const Elem& a) {
        return mpz_sizeinbase(a.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(a.get_den().get_mpz_t(), 2);
    }
    // Q pivot rule: smallest bit size, to limit coefficient growth.
    bool better_pivot(const Elem& cand, const Elem& cur) const { return bits(cand) < bits(cur); }
    Elem from_scalar(const Scalar& s) const { return s.rational(); }
    Scalar to_scalar(const FieldSpec& fs, const Elem& e) const { return Scalar::from_mpq(fs, e); }
};

/// Shared elimination engine. Columns are the unknowns: rank / kernel / solve
/// all treat M as a map on column coefficient vectors.
///
/// A column whose support meets the active rows in a single entry is retired
/// without arithmetic: rank(M) = 1 + rank(M minus that row and column), and in
/// kernel/solve problems the retired coordinate is recovered afterwards from
/// its defining row, in reverse retirement order. This cascades and makes
/// monomial-heavy matrices cheap before dense elimination runs on the rest.
template <class Ops>
struct Solver {
    using Elem = typename Ops::Elem;

    Ops ops;
    std::size_t nrows, ncols;
    std::vector<Elem> a; // row-major

    Elem& at(std::size_t r, std::size_t c) { return a[r * ncols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a[r * ncols + c]; }

    std::vector<char> row_active, col_active;
    std::vector<std::pair<std::size_t, std::size_t>> retired; // (row, col) in order

    void prepass() {
        row_active.assign(nrows, 1);
        col_active.assign(ncols, 1);
        retired.clear();
        std::vector<std::size_t> cnt(ncols, 0), last_row(ncols, 0);
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t c = 0; c < ncols; ++c)
                if (!ops.is_zero(at(r, c))) { ++cnt[c]; last_row[c] = r; }
        std::vector<std::size_t> stack;
        for (std::size_t c = 0; c < ncols; ++c)
            if (cnt[c] == 1) stack.push_back(c);
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            if (!col_active[c] || cnt[c] != 1) continue;
            std::size_t r = last_row[c];
            if (!row_active[r]) continue; // stale; recount below keeps cnt honest
            col_active[c] = 0;
            row_active[r] = 0;
            retired.push_back({r, c});
            for (std::size_t c2 = 0; c2 < ncols; ++c2) {
                if (!col_active[c2] || ops.is_zero(at(r, c2))) continue;
                if (--cnt[c2] == 1) {
                    for (std::size_t r2 = 0; r2 < nrows; ++r2)
                        if (row_active[r2] && !ops.is_zero(at(r2, c2))) { last_row[c2] = r2; break; }
                    stack.push_back(c2);
                }
            }
        }
    }

    // Gauss-Jordan on the active block, optionally with a right-hand side.
    // Returns pivot (row, col) pairs; after the call the active block of `a`
    // is in reduced form and rhs (if given) is transformed alongside.
    std::vector<std::pair<std::size_t, std::size_t>> reduce_active(std::vector<Elem>* rhs) {
        std::vector<std::pair<std::size_t, std::size_t>> pivots;
        std::vector<std::size_t> rows_left;
        for (std::size_t r = 0; r < nrows; ++r)
            if (row_active[r]) rows_left.push_back(r);
        std::size_t next = 0;
        for (std::size_t c = 0; c < ncols && next < rows_left.size(); ++c) {
            if (!col_active[c]) continue;
            std::size_t best = rows_left.size();
            for (std::size_t t = next; t < rows_left.size(); ++t) {
                const Elem& e = at(rows_left[t], c);
                if (ops.is_zero(e)) continue;
                if (best == rows_left.size() || ops.better_pivot(e, at(rows_left[best], c)))
                    best = t;
            }
            if (best == rows_left.size()) continue;
            std::swap(rows_left[next], rows_left[best]);
            std::size_t pr = rows_left[next];
            Elem piv_inv = ops.inv(at(pr, c));
            for (std::size_t c2 = c; c2 < ncols; ++c2)
                if (col_active[c2]) at(pr, c2) = ops.mul(at(pr, c2), piv_inv);
            if (rhs) (*rhs)[pr] = ops.mul((*rhs)[pr], piv_inv);
            for (std::size_t t = 0; t < rows_left.size(); ++t) {
                if (t == next) continue;
                std::size_t r2 = rows_left[t];
                Elem f = at(r2, c);
                if (ops.is_zero(f)) continue;
                for (std::size_t c2 = c; c2 < ncols; ++c2)
                    if (col_active[c2] && !ops.is_zero(at(pr, c2)))
                        at(r2, c2) = ops.sub(at(r2, c2), ops.mul(f, at(pr, c2)));
                if (rhs) (*rhs)[r2] = ops.sub((*rhs)[r2], ops.mul(f, (*rhs)[pr]));
                at(r2, c) = ops.zero();
            }
            pivots.push_back({pr, c});
            ++next;
        }
        return pivots;
    }

    // x must hold values for every non-retired column; fills retired ones.
    void back_substitute(std::vector<Elem>& x, const std::vector<Elem>* rhs,
                         const std::vector<Elem>& original) const {
        for (auto it = retired.rbegin(); it != retired.rend(); ++it) {
            auto [r, c] = *it;
            Elem acc = rhs ? (*rhs)[r] : ops.zero();
            for (std::size_t c2 = 0; c2 < ncols; ++c2) {
                if (c2 == c) continue;
                const Elem& m = original[r * ncols + c2];
                if (!ops.is_zero(m) && !ops.is_zero(x[c2]))
                    acc = ops.sub(acc, ops.mul(m, x[c2]));
            }
            x[c] = ops.div(acc, original[r * ncols + c]);
        }
    }
};

template <class Ops>
Solver<Ops> load(const Matrix& m, const Ops& ops) {
    Solver<Ops> s;
    s.ops = ops;
    s.nrows = m.rows();
    s.ncols = m.cols();
    s.a.resize(s.nrows * s.ncols, ops.zero());
    for (std::size_t r = 0; r < s.nrows; ++r)
        for (std::size_t c = 0; c < s.ncols; ++c)
            s.at(r, c) = ops.from_scalar(m.at(r, c));
    return s;
}

template <class Ops>
std::size_t rank_impl(const Matrix& m, const Ops& ops) {
    auto s = load(m, ops);
    s.prepass();
    auto pivots = s.reduce_active(nullptr);
    return s.retired.size() + pivots.size();
}

template <class Ops>
std::vector<CoordVector> kernel_impl(const Matrix& m, const Ops& ops) {
    auto s = load(m, ops);
    std::vector<typename Ops::Elem> original = s.a;
    s.prepass();
    auto pivots = s.reduce_active(nullptr);

    std::vector<char> is_pivot_col(s.ncols, 0);
    for (auto [r, c] : pivots) is_pivot_col[c] = 1;
    std::vector<CoordVector> out;
    for (std::size_t fc = 0; fc < s.ncols; ++fc) {
        if (!s.col_active[fc] || is_pivot_col[fc]) continue;
        std::vector<typename Ops::Elem> x(s.ncols, ops.zero());
        x[fc] = ops.one();
        for (auto [pr, pc] : pivots) x[pc] = ops.neg(s.at(pr, fc));
        s.back_substitute(x, nullptr, original);
        CoordVector v(s.ncols, Scalar::zero(m.field()));
        for (std::size_t c = 0; c < s.ncols; ++c) v[c] = ops.to_scalar(m.field(), x[c]);
        out.push_back(std::move(v));
    }
    if (out.empty()) return out;
    // Canonicalize: RREF of the kernel vectors laid out as rows.
    RowBasis rb = rref_rows(Matrix::from_rows(m.field(), m.cols(), out));
    return rb.rows;
}

template <class Ops>
std::optional<CoordVector> solve_impl(const Matrix& m, const CoordVector& v, const Ops& ops) {
    if (v.size() != m.rows()) throw usage_error("right-hand side length mismatch");
    auto s = load(m, ops);
    std::vector<typename Ops::Elem> original = s.a;
    s.prepass();
    std::vector<typename Ops::Elem> rhs(s.nrows, ops.zero());
    for (std::size_t r = 0; r < s.nrows; ++r) rhs[r] = ops.from_scalar(v[r]);
    auto pivots = s.reduce_active(&rhs);
    // Consistency over the active rows that ended without a pivot.
    std::vector<char> pivot_row(s.nrows, 0);
    for (auto [r, c] : pivots) pivot_row[r] = 1;
    for (std::size_t r = 0; r < s.nrows; ++r)
        if (s.row_active[r] && !pivot_row[r] && !s.ops.is_zero(rhs[r])) return std::nullopt;
    std::vector<typename Ops::Elem> x(s.ncols, ops.zero());
    for (auto [pr, pc] : pivots) x[pc] = rhs[pr];
    // Row operations in reduce_active only touch active rows, so rhs still
    // holds the original values on retired rows, which is what back
    // substitution needs.
    s.back_substitute(x, &rhs, original);
    CoordVector out(s.ncols, Scalar::zero(m.field()));
    for (std::size_t c = 0; c < s.ncols; ++c) out[c] = ops.to_scalar(m.field(), x[c]);
    return out;
}

template <class Ops>
RowBasis rref_impl(const Matrix& m, const Ops& ops) {
    auto s = load(m, ops);
    s.row_active.assign(s.nrows, 1);
    s.col_active.assign(s.ncols, 1);
    auto pivots = s.reduce_active(nullptr);
    std::sort(pivots.begin(), pivots.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    RowBasis rb;
    for (auto [r, c] : pivots) {
        CoordVector row(s.ncols, Scalar::zero(m.field()));
        for (std::size_t c2 = 0; c2 < s.ncols; ++c2) row[c2] = ops.to_scalar(m.field(), s.at(r, c2));
        rb.rows.push_back(std::move(row));
        rb.pivots.push_back(c);
    }
    return rb;
}

} // namespace

std::size_t rank(const Matrix& m) {
    if (m.field().is_prime_field())
        return rank_impl(m, FpOps{static_cast<long long>(m.field().characteristic())});
    return rank_impl(m, QOps{});
}

std::vector<CoordVector> kernel_basis(const Matrix& m) {
    if (m.field().is_prime_field())
        return kernel_impl(m, FpOps{static_cast<long long>(m.field().characteristic())});
    return kernel_impl(m, QOps{});
}

std::optional<CoordVector> solve_columns(const Matrix& m, const CoordVector& v) {
    if (m.field().is_prime_field())
        return solve_impl(m, v, FpOps{static_cast<long long>(m.field().characteristic())});
    return solve_impl(m, v, QOps{});
}

RowBasis rref_rows(const Matrix& m) {
    if (m.field().is_prime_field())
        return rref_impl(m, FpOps{static_cast<long long>(m.field().characteristic())});
    return rref_impl(m, QOps{});
}

namespace {

// Singleton-column retirement on a sparse column family; mirrors
// Solver::prepass but never touches absent entries.
struct SparsePrep {
    std::size_t nrows;
    const std::vector<SparseCol>* cols;
    std::vector<char> row_active, col_active;
    std::vector<std::pair<std::size_t, std::size_t>> retired; // (row, col)
    std::vector<std::vector<std::size_t>> row_cols;

    void run() {
        std::size_t ncols = cols->size();
        row_active.assign(nrows, 1);
        col_active.assign(ncols, 1);
        row_cols.assign(nrows, {});
        std::vector<std::size_t> cnt(ncols, 0);
        for (std::size_t c = 0; c < ncols; ++c) {
            cnt[c] = (*cols)[c].entries.size();
            for (const auto& [r, val] : (*cols)[c].entries) {
                if (r >= nrows) throw usage_error("sparse entry row out of range");
                row_cols[r].push_back(c);
            }
        }
        std::vector<std::size_t> stack;
        for (std::size_t c = 0; c < ncols; ++c)
            if (cnt[c] == 1) stack.push_back(c);
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            if (!col_active[c] || cnt[c] != 1) continue;
            std::size_t r = nrows;
            for (const auto& [rr, val] : (*cols)[c].entries)
                if (row_active[rr]) { r = rr; break; }
            if (r == nrows) continue;
            col_active[c] = 0;
            row_active[r] = 0;
            retired.push_back({r, c});
            for (std::size_t c2 : row_cols[r])
                if (col_active[c2] && --cnt[c2] == 1) stack.push_back(c2);
        }
    }

    Scalar value_at(std::size_t c, std::size_t r, const FieldSpec& fs) const {
        const auto& es = (*cols)[c].entries;
        auto it = std::lower_bound(es.begin(), es.end(), r,
                                   [](const auto& e, std::size_t rr) { return e.first < rr; });
        if (it != es.end() && it->first == r) return it->second;
        return Scalar::zero(fs);
    }

    // Dense residual on active rows/cols, plus the index maps back.
    Matrix residual(const FieldSpec& fs, std::vector<std::size_t>& row_of,
                    std::vector<std::size_t>& col_of) const {
        std::vector<std::size_t> row_new(nrows, SIZE_MAX);
        row_of.clear();
        col_of.clear();
        for (std::size_t r = 0; r < nrows; ++r)
            if (row_active[r]) { row_new[r] = row_of.size(); row_of.push_back(r); }
        for (std::size_t c = 0; c < cols->size(); ++c)
            if (col_active[c]) col_of.push_back(c);
        Matrix m(fs, row_of.size(), col_of.size());
        for (std::size_t cc = 0; cc < col_of.size(); ++cc)
            for (const auto& [r, val] : (*cols)[col_of[cc]].entries)
                if (row_active[r]) m.at(row_new[r], cc) = val;
        return m;
    }
};

} // namespace

std::size_t rank_sparse(const FieldSpec& fs, std::size_t rows, const std::vector<SparseCol>& cols) {
    SparsePrep p{rows, &cols, {}, {}, {}, {}};
    p.run();
    std::vector<std::size_t> row_of, col_of;
    Matrix res = p.residual(fs, row_of, col_of);
    return p.retired.size() + rank(res);
}

std::optional<CoordVector> solve_sparse(const FieldSpec& fs, std::size_t rows,
                                        const std::vector<SparseCol>& cols, const CoordVector& v) {
    if (v.size() != rows) throw usage_error("right-hand side length mismatch");
    SparsePrep p{rows, &cols, {}, {}, {}, {}};
    p.run();
    std::vector<std::size_t> row_of, col_of;
    Matrix res = p.residual(fs, row_of, col_of);
    CoordVector rhs(row_of.size(), Scalar::zero(fs));
    for (std::size_t rr = 0; rr < row_of.size(); ++rr) rhs[rr] = v[row_of[rr]];
    auto sol = solve_columns(res, rhs);
    if (!sol) return std::nullopt;
    CoordVector x(cols.size(), Scalar::zero(fs));
    for (std::size_t cc = 0; cc < col_of.size(); ++cc) x[col_of[cc]] = (*sol)[cc];
    for (auto it = p.retired.rbegin(); it != p.retired.rend(); ++it) {
        auto [r, c] = *it;
        Scalar acc = v[r];
        for (std::size_t c2 : p.row_cols[r]) {
            if (c2 == c || x[c2].is_zero()) continue;
            acc -= p.value_at(c2, r, fs) * x[c2];
        }
        x[c] = acc / p.value_at(c, r, fs);
    }
    return x;
}

std::optional<CoordVector> span_membership(const CoordVector& v, const std::vector<CoordVector>& basis) {
    if (basis.empty()) {
        for (const auto& s : v)
            if (!s.is_zero()) return std::nullopt;
        return CoordVector{};
    }
    std::size_t n = basis.front().size();
    if (n == 0) return CoordVector{};
    FieldSpec fs = basis.front().front().field();
    Matrix m(fs, n, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        if (basis[c].size() != n) throw usage_error("basis vector length mismatch");
        for (std::size_t r = 0; r < n; ++r) m.at(r, c) = basis[c][r];
    }
    return solve_columns(m, v);
}

} // namespace tclo
