#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltaderive/constructions.hpp"

using namespace dd;

namespace {

QVec e(int dim, int i) {
    QVec v(dim, Rational(0));
    v[i] = 1;
    return v;
}

QVec rand_vec(RationalStream& rng, int dim) {
    QVec v(dim);
    for (auto& c : v) c = rng.next_rational(5, 3);
    return v;
}

// Norm form of a Cayley-Dickson algebra built from Q with gamma = -1
// throughout: the sum of squares of the coordinates.
Rational norm(const QVec& x) {
    Rational n(0);
    for (const auto& c : x) n += c * c;
    return n;
}

}  // namespace

TEST_CASE("quaternion table matches the i j k relations") {
    auto [q, conj] = quaternion_algebra();
    REQUIRE(q.dim == 4);
    int i = 1, j = 2, k = 3;
    CHECK(q.basis_product(i, i) == rat(-1) * e(4, 0));
    CHECK(q.basis_product(j, j) == rat(-1) * e(4, 0));
    CHECK(q.basis_product(k, k) == rat(-1) * e(4, 0));
    CHECK(q.basis_product(i, j) == e(4, k));
    CHECK(q.basis_product(j, k) == e(4, i));
    CHECK(q.basis_product(k, i) == e(4, j));
    CHECK(q.basis_product(j, i) == rat(-1) * e(4, k));
    CHECK(involution_valid(q, conj));
}

TEST_CASE("cayley_dickson convention checks on the first doubling") {
    Algebra base = rational_algebra();
    Involution id{QMat::identity(1)};
    auto [c, conj] = cayley_dickson(base, id, rat(-1));
    REQUIRE(c.dim == 2);
    // (0,1)(0,1) = (gamma * conj(1) 1, 0) = (-1, 0)
    CHECK(c.basis_product(1, 1) == rat(-1) * e(2, 0));
    CHECK(conj.apply(e(2, 1)) == rat(-1) * e(2, 1));
    CHECK(is_commutative(c));
    CHECK(is_associative(c));

    // gamma = 1 gives the split complex numbers: (0,1)^2 = (1,0)
    auto split = cayley_dickson(base, id, rat(1));
    CHECK(split.algebra.basis_product(1, 1) == e(2, 0));
}

TEST_CASE("octonions are an alternative division-like algebra") {
    auto [o, conj] = octonion_algebra();
    REQUIRE(o.dim == 8);
    CHECK_FALSE(is_associative(o));
    CHECK(involution_valid(o, conj));
    for (int i = 1; i < 8; ++i) CHECK(o.basis_product(i, i) == rat(-1) * e(8, 0));

    RationalStream rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        QVec x = rand_vec(rng, 8), y = rand_vec(rng, 8);
        // alternative laws
        CHECK(o.mul(x, o.mul(x, y)) == o.mul(o.mul(x, x), y));
        CHECK(o.mul(o.mul(y, x), x) == o.mul(y, o.mul(x, x)));
        // composition: N(xy) = N(x) N(y)
        CHECK(norm(o.mul(x, y)) == norm(x) * norm(y));
        // x conj(x) = N(x) 1
        CHECK(o.mul(x, conj.apply(x)) == norm(x) * e(8, 0));
    }
}

TEST_CASE("sedenions lose the composition property") {
    auto [o, conj] = octonion_algebra();
    auto [s, sconj] = cayley_dickson(o, conj, rat(-1));
    REQUIRE(s.dim == 16);
    CHECK(involution_valid(s, sconj));  // conjugation survives every doubling
    RationalStream rng(14);
    bool composition_broke = false;
    for (int trial = 0; trial < 10; ++trial) {
        QVec x = rand_vec(rng, 16), y = rand_vec(rng, 16);
        if (norm(s.mul(x, y)) != norm(x) * norm(y)) composition_broke = true;
    }
    CHECK(composition_broke);
}

TEST_CASE("matrix algebra over Q matches matrix arithmetic") {
    auto res = matrix_algebra(rational_algebra(), 2,
                              Involution{QMat::identity(1)});
    const Algebra& m2 = res.algebra;
    REQUIRE(m2.dim == 4);
    CHECK(is_associative(m2));
    CHECK_FALSE(is_commutative(m2));
    REQUIRE(m2.unit.has_value());
    // E01 E10 = E00, E10 E01 = E11, E01 E01 = 0  (index = r*2 + s)
    CHECK(m2.basis_product(1, 2) == e(4, 0));
    CHECK(m2.basis_product(2, 1) == e(4, 3));
    CHECK(is_zero(m2.basis_product(1, 1)));
    REQUIRE(res.involution.has_value());
    CHECK(involution_valid(m2, *res.involution));
    CHECK(res.involution->apply(e(4, 1)) == e(4, 2));  // transpose swaps E01, E10
}

TEST_CASE("matrix_algebra_mul agrees with the materialized table") {
    auto [q, conj] = quaternion_algebra();
    auto res = matrix_algebra(q, 2, conj);
    RationalStream rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        QVec x = rand_vec(rng, res.algebra.dim), y = rand_vec(rng, res.algebra.dim);
        CHECK(matrix_algebra_mul(q, 2, x, y) == res.algebra.mul(x, y));
    }
    REQUIRE(res.involution.has_value());
    CHECK(involution_valid(res.algebra, *res.involution));
}

TEST_CASE("bilinear form Jordan algebras") {
    QMat gram(2, 2);
    gram.at(0, 0) = rat(1);
    gram.at(1, 1) = rat(-3);
    Algebra j = bilinear_form_jordan(gram);
    REQUIRE(j.dim == 3);
    CHECK(is_linearized_jordan(j));
    REQUIRE(j.unit.has_value());
    CHECK(*j.unit == e(3, 0));
    CHECK(j.basis_product(1, 1) == e(3, 0));
    CHECK(j.basis_product(2, 2) == rat(-3) * e(3, 0));
    CHECK(is_zero(j.basis_product(1, 2)));

    QMat sym(2, 2);
    sym.at(0, 1) = rat(1);
    sym.at(1, 0) = rat(1);
    Algebra jh = bilinear_form_jordan(sym);
    CHECK(jh.basis_product(1, 2) == e(3, 0));
    CHECK(is_linearized_jordan(jh));
}

TEST_CASE("hermitian Jordan algebras have the right dimensions") {
    auto [q, qconj] = quaternion_algebra();
    auto h2q = hermitian_jordan(q, qconj, 2);
    CHECK(h2q.splus_dim == 1);
    CHECK(h2q.algebra.dim == 2 + 4);  // two diagonal reals, one full off-diagonal cell
    CHECK(is_linearized_jordan(h2q.algebra));
    CHECK(h2q.embedding.size() == static_cast<size_t>(h2q.algebra.dim));

    auto [o, oconj] = octonion_algebra();
    auto h2o = hermitian_jordan(o, oconj, 2);
    CHECK(h2o.algebra.dim == 10);
    CHECK(is_linearized_jordan(h2o.algebra));

    // symmetric matrices: conj = identity on Q
    auto sym3 = hermitian_jordan(rational_algebra(), Involution{QMat::identity(1)}, 3);
    CHECK(sym3.algebra.dim == 6);
    CHECK(is_linearized_jordan(sym3.algebra));
}

TEST_CASE("hermitian embedding is multiplicative into the plus product") {
    auto [q, conj] = quaternion_algebra();
    auto h = hermitian_jordan(q, conj, 2);
    RationalStream rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        QVec x = rand_vec(rng, h.algebra.dim), y = rand_vec(rng, h.algebra.dim);
        QVec xm(q.dim * 4, Rational(0)), ym(q.dim * 4, Rational(0));
        for (int i = 0; i < h.algebra.dim; ++i) {
            xm = xm + x[i] * h.embedding[i];
            ym = ym + y[i] * h.embedding[i];
        }
        QVec prod = half() * (matrix_algebra_mul(q, 2, xm, ym) +
                              matrix_algebra_mul(q, 2, ym, xm));
        QVec jprod = h.algebra.mul(x, y);
        QVec lifted(q.dim * 4, Rational(0));
        for (int i = 0; i < h.algebra.dim; ++i) lifted = lifted + jprod[i] * h.embedding[i];
        CHECK(prod == lifted);
    }
}

TEST_CASE("transpose involutions from a symplectic form") {
    QMat p(4, 4);
    for (int i = 0; i < 2; ++i) {
        p.at(i, i + 2) = rat(1);
        p.at(i + 2, i) = rat(-1);
    }
    Algebra m4 = matrix_algebra(rational_algebra(), 4).algebra;
    Involution sp = transpose_involution(4, p);
    CHECK(involution_valid(m4, sp));
    CHECK(fixed_space(m4, sp, +1).basis.size() == 6);
    CHECK(fixed_space(m4, sp, -1, false).basis.size() == 10);
}
