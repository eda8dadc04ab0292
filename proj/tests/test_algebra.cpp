#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltaderive/algebra.hpp"
#include "deltaderive/constructions.hpp"

using namespace dd;

namespace {

QVec e(int dim, int i) {
    QVec v(dim, Rational(0));
    v[i] = 1;
    return v;
}

bool same_flags(const IdentityFlags& a, const IdentityFlags& b) {
    return a.commutative == b.commutative && a.associative == b.associative &&
           a.unital == b.unital && a.linearized_jordan == b.linearized_jordan;
}

}  // namespace

TEST_CASE("basic products and multiplication operators") {
    Algebra q = quaternion_algebra().algebra;
    REQUIRE(q.dim == 4);
    CHECK(q.basis_product(1, 2) == e(4, 3));         // i j = k
    CHECK(q.basis_product(2, 1) == rat(-1) * e(4, 3));
    CHECK(q.basis_product(1, 1) == rat(-1) * e(4, 0));
    CHECK(q.unit_valid());

    QVec x = e(4, 1) + e(4, 2);
    QVec y = e(4, 0) + rat(2) * e(4, 3);
    CHECK(q.mul(x, y) == q.left_mult(x).apply(y));
    CHECK(q.mul(y, x) == q.right_mult(x).apply(y));
    CHECK(q.left_mult(1).apply(e(4, 2)) == e(4, 3));
}

TEST_CASE("identity flags on a spread of algebras") {
    Algebra q = quaternion_algebra().algebra;
    CHECK_FALSE(is_commutative(q));
    CHECK(is_associative(q));
    CHECK_FALSE(is_linearized_jordan(q));

    Algebra o = octonion_algebra().algebra;
    CHECK_FALSE(is_commutative(o));
    CHECK_FALSE(is_associative(o));

    Algebra qplus = plus_algebra(q);
    CHECK(is_commutative(qplus));
    CHECK_FALSE(is_associative(qplus));
    CHECK(is_linearized_jordan(qplus));

    QMat gram = QMat::identity(3);
    Algebra jvf = bilinear_form_jordan(gram);
    CHECK(is_commutative(jvf));
    CHECK(is_linearized_jordan(jvf));

    // Commutative but not Jordan: e0^2 = e1, e1^2 = e0, e0 e1 = 0 fails
    // (x^2 o e0) o x = x^2 o (e0 o x) at x = e0.
    Algebra bad(2);
    bad.c(0, 0, 1) = 1;
    bad.c(1, 1, 0) = 1;
    CHECK(is_commutative(bad));
    CHECK_FALSE(is_linearized_jordan(bad));
}

TEST_CASE("fast identity kernel agrees with the rational reference") {
    std::vector<Algebra> cases;
    cases.push_back(rational_algebra());
    cases.push_back(quaternion_algebra().algebra);
    cases.push_back(octonion_algebra().algebra);
    cases.push_back(plus_algebra(quaternion_algebra().algebra));
    cases.push_back(bilinear_form_jordan(QMat::identity(4)));

    RationalStream rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Algebra r(3);
        for (auto& c : r.table)
            if (rng.next_u64() % 3 == 0) c = rng.next_rational(5, 3);
        cases.push_back(r);
    }
    for (const Algebra& a : cases)
        CHECK(same_flags(check_identities(a), check_identities_reference(a)));
}

TEST_CASE("find_unit solves for the unit or reports none") {
    Algebra q = quaternion_algebra().algebra;
    Algebra stripped = q;
    stripped.unit.reset();
    auto u = find_unit(stripped);
    REQUIRE(u.has_value());
    CHECK(*u == e(4, 0));

    Algebra nil(2);  // zero multiplication, no unit
    CHECK_FALSE(find_unit(nil).has_value());

    Algebra lied = q;
    lied.unit = e(4, 1);  // wrong declared unit must not be trusted
    auto fixed = find_unit(lied);
    REQUIRE(fixed.has_value());
    CHECK(*fixed == e(4, 0));
}

TEST_CASE("involutions validate and split into eigenspaces") {
    auto [q, conj] = quaternion_algebra();
    CHECK(involution_valid(q, conj));
    CHECK(conj.apply(e(4, 0)) == e(4, 0));
    CHECK(conj.apply(e(4, 2)) == rat(-1) * e(4, 2));

    Involution wrong{QMat::identity(4)};
    CHECK_FALSE(involution_valid(q, wrong));  // identity is not an antiautomorphism here

    EigenspaceResult plus = fixed_space(q, conj, +1);
    CHECK(plus.basis.size() == 1);
    REQUIRE(plus.induced.has_value());
    CHECK(plus.induced->dim == 1);
    EigenspaceResult minus = fixed_space(q, conj, -1, false);
    CHECK(minus.basis.size() == 3);
}

TEST_CASE("transpose involution on matrix algebras") {
    Algebra m3 = matrix_algebra(rational_algebra(), 3).algebra;
    CHECK(is_associative(m3));
    Involution t = transpose_involution(3, QMat::identity(3));
    CHECK(involution_valid(m3, t));
    EigenspaceResult sym = fixed_space(m3, t, +1);
    CHECK(sym.basis.size() == 6);
    REQUIRE(sym.induced.has_value());
    CHECK(is_linearized_jordan(*sym.induced));
}

TEST_CASE("opposite algebra reverses products") {
    Algebra q = quaternion_algebra().algebra;
    Algebra qop = opposite(q);
    RationalStream rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        QVec x(4), y(4);
        for (auto& c : x) c = rng.next_rational(5, 3);
        for (auto& c : y) c = rng.next_rational(5, 3);
        CHECK(qop.mul(x, y) == q.mul(y, x));
    }
    CHECK(plus_algebra(qop).table == plus_algebra(q).table);
}

TEST_CASE("direct sums multiply blockwise") {
    Algebra a = plus_algebra(quaternion_algebra().algebra);
    Algebra b = rational_algebra();
    Algebra s = direct_sum(a, b);
    CHECK(s.dim == 5);
    CHECK(is_linearized_jordan(s));
    REQUIRE(s.unit.has_value());
    CHECK(*s.unit == e(5, 0) + e(5, 4));
    for (int i = 0; i < 4; ++i) CHECK(is_zero(s.basis_product(i, 4)));
    CHECK(s.basis_product(4, 4) == e(5, 4));
    CHECK(s.basis_product(1, 1) == rat(-1) * e(5, 0));
}

TEST_CASE("subalgebra closure finds the generated subalgebra") {
    Algebra o = octonion_algebra().algebra;
    // 1, e1, e2 generate a quaternion subalgebra of the octonions.
    SubalgebraResult sub = subalgebra_closure(o, {e(8, 0), e(8, 1), e(8, 2)});
    CHECK(sub.basis.size() == 4);
    CHECK(sub.algebra.dim == 4);
    CHECK(is_associative(sub.algebra));
    CHECK_FALSE(is_commutative(sub.algebra));

    SubalgebraResult unit_only = subalgebra_closure(o, {e(8, 0)});
    CHECK(unit_only.basis.size() == 1);

    SubalgebraResult all = subalgebra_closure(o, {e(8, 1), e(8, 4), e(8, 2)});
    CHECK(all.basis.size() == 8);
}

TEST_CASE("inner derivation spaces have the expected dimensions") {
    // symmetric 3x3 matrices: derivations form so(3), dimension 3
    Algebra m3 = matrix_algebra(rational_algebra(), 3).algebra;
    Involution t = transpose_involution(3, QMat::identity(3));
    Algebra m3plus = *fixed_space(m3, t, +1).induced;
    auto ders = inner_derivation_space(m3plus);
    CHECK(ders.size() == 3);

    // full associative plus-algebra M_2(Q)+: inner derivations = psl_2, dim 3
    Algebra m2plus = plus_algebra(matrix_algebra(rational_algebra(), 2).algebra);
    CHECK(inner_derivation_space(m2plus).size() == 3);

    // J(V,f) with dim V = 3: derivations so(3), dim 3
    CHECK(inner_derivation_space(bilinear_form_jordan(QMat::identity(3))).size() == 3);

    // rank-1 case: no derivations
    CHECK(inner_derivation_space(rational_algebra()).empty());
}

TEST_CASE("inner derivations satisfy the Leibniz rule") {
    Algebra j = bilinear_form_jordan(QMat::identity(4));
    RationalStream rng(8);
    for (const QMat& d : inner_derivation_space(j)) {
        QVec x(j.dim), y(j.dim);
        for (auto& c : x) c = rng.next_rational(5, 3);
        for (auto& c : y) c = rng.next_rational(5, 3);
        CHECK(d.apply(j.mul(x, y)) == j.mul(d.apply(x), y) + j.mul(x, d.apply(y)));
    }
}
