#include <random>

#include "doctest.h"
#include "tclo/linalg.hpp"

using namespace tclo;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& fs, std::size_t rows,
                     std::size_t cols, int density_pct = 60) {
    Matrix m(fs, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (static_cast<int>(rng() % 100) < density_pct)
                m.at(r, c) = Scalar::from_int(fs, static_cast<long long>(rng() % 19) - 9);
    return m;
}

// Textbook row elimination, no pivot strategy, no prepass: the oracle.
std::size_t naive_rank(Matrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t cc = 0; cc < m.cols(); ++cc)
            std::swap(m.at(rank, cc), m.at(pivot, cc));
        Scalar inv = m.at(rank, c).inverse();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, c).is_zero()) continue;
            Scalar factor = m.at(r, c) * inv;
            for (std::size_t cc = c; cc < m.cols(); ++cc)
                m.at(r, cc) -= factor * m.at(rank, cc);
        }
        ++rank;
    }
    return rank;
}

CoordVector mat_apply(const Matrix& m, const CoordVector& x) {
    CoordVector out(m.rows(), Scalar::zero(m.field()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * x[c];
    return out;
}

bool all_zero(const CoordVector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("rank agrees with naive elimination and rank-nullity holds") {
    std::mt19937_64 rng(2024);
    for (const FieldSpec& fs : {FieldSpec(5), FieldSpec(101), FieldSpec()}) {
        for (int trial = 0; trial < 70; ++trial) {
            std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            Matrix m = random_matrix(rng, fs, rows, cols);
            std::size_t rk = rank(m);
            CHECK(rk == naive_rank(m));
            auto ker = kernel_basis(m);
            CHECK(rk + ker.size() == cols);
            for (const auto& k : ker) CHECK(all_zero(mat_apply(m, k)));
        }
    }
}

TEST_CASE("singleton-column prepass stays exact on sparse matrices") {
    std::mt19937_64 rng(99);
    FieldSpec fs(7);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t rows = 2 + rng() % 12, cols = 2 + rng() % 12;
        Matrix m = random_matrix(rng, fs, rows, cols, 15); // sparse: many singletons
        CHECK(rank(m) == naive_rank(m));
        auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == cols);
        for (const auto& k : ker) CHECK(all_zero(mat_apply(m, k)));
    }
}

TEST_CASE("solve_columns finds exact solutions and detects inconsistency") {
    std::mt19937_64 rng(5150);
    FieldSpec fs(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        Matrix m = random_matrix(rng, fs, rows, cols);
        // consistent instance: v = M x0
        CoordVector x0(cols, Scalar::zero(fs));
        for (auto& s : x0) s = Scalar::from_int(fs, static_cast<long long>(rng() % 13));
        CoordVector v = mat_apply(m, x0);
        auto x = solve_columns(m, v);
        REQUIRE(x.has_value());
        CHECK(mat_apply(m, *x) == v);
    }
    // inconsistent instance
    Matrix m(fs, 2, 1);
    m.at(0, 0) = Scalar::one(fs);
    CoordVector v = {Scalar::zero(fs), Scalar::one(fs)};
    CHECK(!solve_columns(m, v).has_value());
}

TEST_CASE("rref rows are canonical and span membership certifies") {
    std::mt19937_64 rng(31337);
    FieldSpec fs(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 2 + rng() % 6;
        Matrix m = random_matrix(rng, fs, rows, cols);
        RowBasis rb = rref_rows(m);
        CHECK(rb.rows.size() == rank(m));
        // pivots strictly increasing, pivot entries 1, pivot columns elsewhere 0
        for (std::size_t i = 0; i < rb.rows.size(); ++i) {
            if (i + 1 < rb.rows.size()) CHECK(rb.pivots[i] < rb.pivots[i + 1]);
            CHECK(rb.rows[i][rb.pivots[i]].is_one());
            for (std::size_t j = 0; j < rb.rows.size(); ++j)
                if (j != i) CHECK(rb.rows[j][rb.pivots[i]].is_zero());
        }
        // random combination of rows is a member; the certificate recombines
        if (!rb.rows.empty()) {
            CoordVector combo(cols, Scalar::zero(fs));
            for (const auto& r : rb.rows) {
                Scalar c = Scalar::from_int(fs, static_cast<long long>(rng() % 11));
                for (std::size_t j = 0; j < cols; ++j) combo[j] += c * r[j];
            }
            auto cert = span_membership(combo, rb.rows);
            REQUIRE(cert.has_value());
            CoordVector rebuilt(cols, Scalar::zero(fs));
            for (std::size_t i = 0; i < rb.rows.size(); ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    rebuilt[j] += (*cert)[i] * rb.rows[i][j];
            CHECK(rebuilt == combo);
        }
    }
    // non-member
    CoordVector e1 = {Scalar::one(fs), Scalar::zero(fs)};
    CoordVector e2 = {Scalar::zero(fs), Scalar::one(fs)};
    CHECK(!span_membership(e2, {e1}).has_value());
}

TEST_CASE("exact rational elimination survives fragile pivots") {
    FieldSpec q;
    // Hilbert-style matrix: notoriously ill-conditioned in floating point,
    // trivial in exact arithmetic.
    Matrix m(q, 4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            m.at(r, c) = Scalar::from_mpq(q, mpq_class(1, static_cast<long>(r + c + 1)));
    CHECK(rank(m) == 4);
    CoordVector v(4, Scalar::one(q));
    auto x = solve_columns(m, v);
    REQUIRE(x.has_value());
    CHECK(mat_apply(m, *x) == v);
}

TEST_CASE("sparse rank and solve agree with dense") {
    std::mt19937_64 rng(4242);
    FieldSpec fs(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        Matrix m = random_matrix(rng, fs, rows, cols, 25);
        std::vector<SparseCol> sparse(cols);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r)
                if (!m.at(r, c).is_zero()) sparse[c].entries.push_back({r, m.at(r, c)});
        CHECK(rank_sparse(fs, rows, sparse) == rank(m));

        CoordVector x0(cols, Scalar::zero(fs));
        for (auto& s : x0) s = Scalar::from_int(fs, static_cast<long long>(rng() % 5));
        CoordVector v = mat_apply(m, x0);
        auto x = solve_sparse(fs, rows, sparse, v);
        REQUIRE(x.has_value());
        CHECK(mat_apply(m, *x) == v);
    }
}
