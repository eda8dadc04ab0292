#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltaderive/linalg.hpp"

using namespace dd;

namespace {

QMat random_matrix(RationalStream& rng, int r, int c, int zero_mod) {
    QMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (rng.next_u64() % zero_mod == 0) m.at(i, j) = rng.next_rational(9, 4);
    return m;
}

std::vector<SparseRow> matrix_rows(const QMat& m) {
    std::vector<SparseRow> rows;
    for (int i = 0; i < m.rows; ++i) rows.push_back(to_sparse(m.row(i)));
    return rows;
}

bool same_span(int ambient, const std::vector<QVec>& a, const std::vector<QVec>& b) {
    RowSpace sa = span_of(ambient, a);
    RowSpace sb = span_of(ambient, b);
    return sa.basis() == sb.basis();
}

}  // namespace

TEST_CASE("vector and matrix arithmetic") {
    QVec a{rat(1), rat(2)}, b{rat(3), rat(-1)};
    CHECK(a + b == QVec{rat(4), rat(1)});
    CHECK(a - b == QVec{rat(-2), rat(3)});
    CHECK(rat(3) * a == QVec{rat(3), rat(6)});
    CHECK(dot(a, b) == rat(1));
    CHECK_FALSE(is_zero(a));
    CHECK(is_zero(a - a));

    QMat m = QMat::identity(2);
    m.at(0, 1) = rat(5);
    CHECK(m.apply(a) == QVec{rat(11), rat(2)});
    CHECK((m * m).at(0, 1) == rat(10));
    CHECK((m - m).is_zero());
    CHECK((m + m).at(0, 1) == rat(10));
}

TEST_CASE("sparse rows store only nonzeros and dot correctly") {
    QVec v{rat(0), rat(3), rat(0), rat(-1, 2)};
    SparseRow r = to_sparse(v);
    REQUIRE(r.size() == 2);
    CHECK(r[0].first == 1);
    CHECK(r[1].first == 3);
    QVec w{rat(1), rat(2), rat(5), rat(4)};
    CHECK(dot(r, w) == dot(v, w));
}

TEST_CASE("RowSpace keeps a canonical reduced echelon basis") {
    RowSpace s(3);
    CHECK(s.insert(QVec{rat(2), rat(4), rat(0)}));
    CHECK(s.insert(QVec{rat(0), rat(0), rat(7)}));
    CHECK_FALSE(s.insert(QVec{rat(1), rat(2), rat(3)}));  // dependent
    CHECK(s.dim() == 2);
    CHECK(s.basis()[0] == QVec{rat(1), rat(2), rat(0)});
    CHECK(s.basis()[1] == QVec{rat(0), rat(0), rat(1)});
    CHECK(s.pivots() == std::vector<int>{0, 2});
    CHECK(s.contains(QVec{rat(3), rat(6), rat(-5)}));
    CHECK_FALSE(s.contains(QVec{rat(0), rat(1), rat(0)}));

    auto co = s.coords(QVec{rat(3), rat(6), rat(-5)});
    REQUIRE(co.has_value());
    CHECK((*co)[0] * s.basis()[0] + (*co)[1] * s.basis()[1] == QVec{rat(3), rat(6), rat(-5)});
    CHECK_FALSE(s.coords(QVec{rat(0), rat(1), rat(0)}).has_value());
    CHECK(is_zero(s.reduce(QVec{rat(1), rat(2), rat(1)} - QVec{rat(0), rat(0), rat(1)})));
}

TEST_CASE("RowSpace basis does not depend on insertion order") {
    RationalStream rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        QMat m = random_matrix(rng, 5, 6, 2);
        RowSpace fwd(6), bwd(6);
        for (int i = 0; i < m.rows; ++i) fwd.insert(m.row(i));
        for (int i = m.rows - 1; i >= 0; --i) bwd.insert(m.row(i));
        CHECK(fwd.basis() == bwd.basis());
    }
}

TEST_CASE("dense nullspace, rank, and determinant on known matrices") {
    QMat m(2, 3);
    m.at(0, 0) = rat(1);
    m.at(0, 1) = rat(2);
    m.at(1, 2) = rat(1);
    auto ns = nullspace_dense(m);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m.apply(ns[0])));
    CHECK(rank_dense(m) == 2);

    QMat a(3, 3);
    // Vandermonde on 1, 2, 3: determinant (2-1)(3-1)(3-2) = 2.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational p(1);
            for (int k = 0; k < j; ++k) p *= rat(i + 1);
            a.at(i, j) = p;
        }
    CHECK(det_dense(a) == rat(2));
    CHECK(rank_dense(a) == 3);
    CHECK(det_dense(QMat::identity(4)) == rat(1));
    CHECK(det_dense(QMat(2, 2)) == rat(0));
}

TEST_CASE("determinant is multiplicative on random matrices") {
    RationalStream rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        QMat a = random_matrix(rng, 4, 4, 2);
        QMat b = random_matrix(rng, 4, 4, 2);
        CHECK(det_dense(a * b) == det_dense(a) * det_dense(b));
    }
}

TEST_CASE("solve_dense solves exactly or reports inconsistency") {
    RationalStream rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        QMat a = random_matrix(rng, 5, 4, 2);
        QVec x(4);
        for (auto& c : x) c = rng.next_rational(9, 4);
        QVec b = a.apply(x);
        auto sol = solve_dense(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == b);
    }
    QMat a(2, 1);
    a.at(0, 0) = rat(1);
    a.at(1, 0) = rat(1);
    CHECK_FALSE(solve_dense(a, QVec{rat(1), rat(2)}).has_value());
}

TEST_CASE("sparse kernel agrees with the dense reference") {
    RationalStream rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 3 + static_cast<int>(rng.next_u64() % 8);
        int c = 3 + static_cast<int>(rng.next_u64() % 8);
        QMat m = random_matrix(rng, r, c, 3);
        auto dense = nullspace_dense(m);
        for (KernelOptions opt : {KernelOptions{false, false}, KernelOptions{false, true},
                                  KernelOptions{true, false}, KernelOptions{true, true}}) {
            auto sparse = kernel_sparse(matrix_rows(m), c, opt);
            CHECK(sparse.size() == dense.size());
            for (const QVec& v : sparse) CHECK(is_zero(m.apply(v)));
            CHECK(same_span(c, dense, sparse));
        }
    }
}

TEST_CASE("sparse kernel handles degenerate shapes") {
    CHECK(kernel_sparse({}, 0).empty());
    auto full = kernel_sparse({}, 3);
    CHECK(full.size() == 3);
    SparseRow zero_row;
    CHECK(kernel_sparse({zero_row}, 2).size() == 2);
}

TEST_CASE("solve_augmented_sparse matches solve_dense") {
    RationalStream rng(33);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 3 + static_cast<int>(rng.next_u64() % 6);
        int c = 2 + static_cast<int>(rng.next_u64() % 6);
        QMat a = random_matrix(rng, r, c, 2);
        QVec x(c);
        for (auto& v : x) v = rng.next_rational(9, 4);
        QVec b = a.apply(x);
        // Augmented convention: column c carries the constant term of
        // sum_j row[j] x_j + row[c] = 0, so store -b there.
        std::vector<SparseRow> rows;
        for (int i = 0; i < r; ++i) {
            QVec aug = a.row(i);
            aug.push_back(-b[i]);
            rows.push_back(to_sparse(aug));
        }
        auto sol = solve_augmented_sparse(rows, c);
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == b);
    }

    // Inconsistent system: x = 1 and x = 2.
    std::vector<SparseRow> bad = {to_sparse(QVec{rat(1), rat(-1)}),
                                  to_sparse(QVec{rat(1), rat(-2)})};
    CHECK_FALSE(solve_augmented_sparse(bad, 1).has_value());
}

TEST_CASE("rank-nullity holds for random sparse systems") {
    RationalStream rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        QMat m = random_matrix(rng, 8, 10, 4);
        auto ker = kernel_sparse(matrix_rows(m), 10);
        CHECK(static_cast<int>(ker.size()) + rank_dense(m) == 10);
    }
}
